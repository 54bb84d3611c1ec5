#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tracklight {

/// One biquad in transposed direct form II, normalized so a0 == 1.
struct SecondOrderSection {
  double b0{1.0};
  double b1{0.0};
  double b2{0.0};
  double a1{0.0};
  double a2{0.0};
};

/// Digital Butterworth low-pass as cascaded sections: analog prototype poles,
/// tangent prewarp of the cutoff, bilinear transform, conjugate pairs grouped
/// into biquads (plus one first-order section for odd orders). Each section is
/// scaled to unit DC gain. Throws ArgumentError unless order >= 1 and
/// 0 < cutoff_hz < sample_rate / 2.
std::vector<SecondOrderSection> butterworth_lowpass_sections(int order, double cutoff_hz, double sample_rate);

/// Complex magnitude of the cascade at `freq_hz`.
double sections_magnitude(std::span<const SecondOrderSection> sections, double freq_hz, double sample_rate);

/// Runs the cascade over `signal` in place, starting from the steady state of a
/// constant input equal to `initial`.
void run_sections(std::span<const SecondOrderSection> sections, std::span<double> signal, double initial);

/// Zero-phase filtering of a gap-free segment: odd-reflection padding of
/// `padlen` samples at both ends, then the mean of the forward-backward and the
/// backward-forward cascades, so the result commutes exactly with time reversal.
/// Requires segment.size() > padlen.
std::vector<double> zero_phase_filter(std::span<const SecondOrderSection> sections, std::span<const double> segment,
                                      std::size_t padlen);

}  // namespace tracklight
