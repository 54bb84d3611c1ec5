#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "tracklight/errors.hpp"
#include "tracklight/filter.hpp"

namespace tracklight {

using cplx = std::complex<double>;

std::vector<SecondOrderSection> butterworth_lowpass_sections(int order, double cutoff_hz, double sample_rate) {
  if (order < 1) throw ArgumentError("filter order must be >= 1");
  if (!(sample_rate > 0.0)) throw ArgumentError("sample rate must be positive");
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < sample_rate / 2.0)) {
    throw ArgumentError("cutoff must lie in (0, Nyquist = " + std::to_string(sample_rate / 2.0) + " Hz)");
  }

  const double fs2 = 2.0 * sample_rate;
  const double warped = fs2 * std::tan(std::numbers::pi * cutoff_hz / sample_rate);

  // Left-half-plane poles of the unit prototype; k and n-1-k are conjugates.
  std::vector<cplx> zpoles;
  for (int k = 0; k < order; ++k) {
    const double theta = std::numbers::pi * (2.0 * k + order + 1) / (2.0 * order);
    const cplx analog = warped * std::polar(1.0, theta);
    zpoles.push_back((fs2 + analog) / (fs2 - analog));
  }

  std::vector<SecondOrderSection> sections;
  for (int k = 0; k < order / 2; ++k) {
    const cplx p = zpoles[static_cast<std::size_t>(k)];
    SecondOrderSection s{1.0, 2.0, 1.0, -2.0 * p.real(), std::norm(p)};
    const double gain = (1.0 + s.a1 + s.a2) / 4.0;
    s.b0 *= gain;
    s.b1 *= gain;
    s.b2 *= gain;
    sections.push_back(s);
  }
  if (order % 2 == 1) {
    const double p = zpoles[static_cast<std::size_t>(order / 2)].real();
    const double gain = (1.0 - p) / 2.0;
    sections.push_back({gain, gain, 0.0, -p, 0.0});
  }
  return sections;
}

double sections_magnitude(std::span<const SecondOrderSection> sections, double freq_hz, double sample_rate) {
  const cplx z1 = std::polar(1.0, -2.0 * std::numbers::pi * freq_hz / sample_rate);
  const cplx z2 = z1 * z1;
  cplx h = 1.0;
  for (const auto& s : sections) h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
  return std::abs(h);
}

void run_sections(std::span<const SecondOrderSection> sections, std::span<double> signal, double initial) {
  for (const auto& s : sections) {
    // Steady state for a constant input; every section has unit DC gain.
    double z2 = (s.b2 - s.a2) * initial;
    double z1 = (s.b1 - s.a1) * initial + z2;
    for (double& v : signal) {
      const double x = v;
      const double y = s.b0 * x + z1;
      z1 = s.b1 * x - s.a1 * y + z2;
      z2 = s.b2 * x - s.a2 * y;
      v = y;
    }
  }
}

namespace {

// Forward then backward over the odd-padded copy; returns the unpadded middle.
std::vector<double> forward_backward(std::span<const SecondOrderSection> sections, std::span<const double> x,
                                     std::size_t padlen) {
  const std::size_t n = x.size();
  std::vector<double> ext(n + 2 * padlen);
  for (std::size_t i = 0; i < padlen; ++i) {
    ext[i] = 2.0 * x[0] - x[padlen - i];
    ext[padlen + n + i] = 2.0 * x[n - 1] - x[n - 2 - i];
  }
  std::copy(x.begin(), x.end(), ext.begin() + static_cast<std::ptrdiff_t>(padlen));

  run_sections(sections, ext, ext.front());
  std::reverse(ext.begin(), ext.end());
  run_sections(sections, ext, ext.front());
  std::reverse(ext.begin(), ext.end());
  return {ext.begin() + static_cast<std::ptrdiff_t>(padlen), ext.begin() + static_cast<std::ptrdiff_t>(padlen + n)};
}

}  // namespace

std::vector<double> zero_phase_filter(std::span<const SecondOrderSection> sections, std::span<const double> segment,
                                      std::size_t padlen) {
  if (segment.size() <= padlen) throw ArgumentError("segment is not longer than the padding length");
  std::vector<double> forward = forward_backward(sections, segment, padlen);

  std::vector<double> reversed(segment.rbegin(), segment.rend());
  std::vector<double> backward = forward_backward(sections, reversed, padlen);

  const std::size_t n = segment.size();
  for (std::size_t i = 0; i < n; ++i) forward[i] = 0.5 * (forward[i] + backward[n - 1 - i]);
  return forward;
}

}  // namespace tracklight
