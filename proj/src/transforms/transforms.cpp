#include "tracklight/transforms.hpp"

#include <cmath>
#include <numbers>

namespace tracklight {

namespace {

// Applies `f` to every non-missing (x, y) pair; missing pairs keep their bits.
template <typename F>
TrackingData map_points(const TrackingData& td, F f) {
  std::vector<double> out(td.coords().begin(), td.coords().end());
  for (std::size_t i = 0; i < out.size(); i += 2) {
    if (is_missing(out[i])) continue;
    const Point p = f(Point{out[i], out[i + 1]});
    out[i] = p.x;
    out[i + 1] = p.y;
  }
  return td.with_coords(std::move(out));
}

}  // namespace

TrackingData butterworth_lowpass(const TrackingData& td, const FilterSpec& spec, Exec exec) {
  if (spec.order < 1) throw ArgumentError("filter.order must be >= 1");
  if (!(spec.cutoff_hz > 0.0) || !(spec.cutoff_hz < td.framerate() / 2.0)) {
    throw ArgumentError("filter.cutoff_hz must lie in (0, " + std::to_string(td.framerate() / 2.0) +
                        ") for framerate " + std::to_string(td.framerate()));
  }
  const auto sections = butterworth_lowpass_sections(spec.order, spec.cutoff_hz, td.framerate());
  auto out = exec == Exec::Serial
                 ? kernels::serial::filter_columns(td.coords(), td.frames(), td.columns(), sections, spec.padlen())
                 : kernels::omp::filter_columns(td.coords(), td.frames(), td.columns(), sections, spec.padlen());
  return td.with_coords(std::move(out));
}

TrackingData translate(const TrackingData& td, double dx, double dy) {
  return map_points(td, [=](Point p) { return Point{p.x + dx, p.y + dy}; });
}

TrackingData scale(const TrackingData& td, double fx, double fy) {
  return map_points(td, [=](Point p) { return Point{fx * p.x, fy * p.y}; });
}

TrackingData rotate(const TrackingData& td, double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  return map_points(td, [=](Point p) { return Point{c * p.x - s * p.y, s * p.x + c * p.y}; });
}

TrackingData reflect(const TrackingData& td, Axis axis) {
  if (axis == Axis::X) return map_points(td, [](Point p) { return Point{p.x, -p.y}; });
  return map_points(td, [](Point p) { return Point{-p.x, p.y}; });
}

TrackingData rescale_to_pitch(const TrackingData& td, const Pitch& from, const Pitch& to) {
  for (const Pitch* p : {&from, &to}) {
    if (!std::isfinite(p->xlim.first) || !std::isfinite(p->xlim.second) || !std::isfinite(p->ylim.first) ||
        !std::isfinite(p->ylim.second)) {
      throw ArgumentError("pitch limits must be finite");
    }
  }
  if (from.x_extent() == 0.0 || from.y_extent() == 0.0) throw ArgumentError("source pitch has a zero-width range");
  const double sx = to.x_extent() / from.x_extent();
  const double sy = to.y_extent() / from.y_extent();
  return map_points(td, [&](Point p) {
    return Point{to.xlim.first + (p.x - from.xlim.first) * sx, to.ylim.first + (p.y - from.ylim.first) * sy};
  });
}

}  // namespace tracklight
