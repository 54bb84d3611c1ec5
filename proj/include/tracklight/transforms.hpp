#pragma once

#include <cstddef>

#include "tracklight/core.hpp"
#include "tracklight/kernels.hpp"

namespace tracklight {

struct FilterSpec {
  int order{3};
  double cutoff_hz{1.0};

  /// Edge padding (and minimum segment length minus one) used by the zero-phase pass.
  std::size_t padlen() const noexcept { return 3 * static_cast<std::size_t>(order + 1); }
};

/// Zero-phase Butterworth low-pass applied to every coordinate column. Each
/// contiguous run of non-missing samples is filtered on its own; runs of at
/// most `spec.padlen()` samples become missing. Throws ArgumentError when the
/// order is below 1 or the cutoff is not below Nyquist.
TrackingData butterworth_lowpass(const TrackingData& td, const FilterSpec& spec = {},
                                 Exec exec = Exec::Parallel);

TrackingData translate(const TrackingData& td, double dx, double dy);
TrackingData scale(const TrackingData& td, double fx, double fy);
/// Counter-clockwise about the origin.
TrackingData rotate(const TrackingData& td, double degrees);

enum class Axis { X, Y };
/// Axis::X mirrors across the x axis (y -> -y), Axis::Y across the y axis (x -> -x).
TrackingData reflect(const TrackingData& td, Axis axis);

/// Linear map taking `from`'s xlim/ylim onto `to`'s. Throws ArgumentError for
/// non-finite limits or a zero-width source range.
TrackingData rescale_to_pitch(const TrackingData& td, const Pitch& from, const Pitch& to);

}  // namespace tracklight
