#include <cstdint>

#include "columns.hpp"
#include "tracklight/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tracklight::kernels {

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace omp {

std::vector<double> filter_columns(std::span<const double> matrix, std::size_t rows, std::size_t cols,
                                   std::span<const SecondOrderSection> sections, std::size_t padlen) {
  std::vector<double> out(matrix.size());
  const auto n = static_cast<std::int64_t>(cols);
#pragma omp parallel
  {
    std::vector<double> segment;
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < n; ++c) {
      detail::filter_column(matrix, out, rows, cols, static_cast<std::size_t>(c), sections, padlen, segment);
    }
  }
  return out;
}

std::vector<double> speed(std::span<const double> coords, std::size_t frames, std::size_t players, double framerate) {
  std::vector<double> out(frames * players);
  const auto n = static_cast<std::int64_t>(players);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    detail::speed_player(coords, out, frames, players, static_cast<std::size_t>(k), framerate);
  }
  return out;
}

std::vector<double> rate_of_change(std::span<const double> values, std::size_t frames, std::size_t cols,
                                   double framerate) {
  std::vector<double> out(frames * cols);
  const auto n = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n; ++c) {
    detail::rate_column(values, out, frames, cols, static_cast<std::size_t>(c), framerate);
  }
  return out;
}

std::vector<double> metabolic_power(std::span<const double> speed, std::span<const double> acceleration,
                                    double terrain_factor, double gravity) {
  std::vector<double> out(speed.size());
  const auto n = static_cast<std::int64_t>(speed.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u] = detail::metabolic_power_value(speed[u], acceleration[u], terrain_factor, gravity);
  }
  return out;
}

std::vector<double> approximate_entropy(std::span<const std::vector<double>> series, int m,
                                        std::span<const double> tolerances) {
  std::vector<double> out(series.size());
  const auto n = static_cast<std::int64_t>(series.size());
  // Series lengths differ across players.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t p = 0; p < n; ++p) {
    const auto u = static_cast<std::size_t>(p);
    out[u] = series[u].empty() ? kMissing : detail::approximate_entropy_series(series[u], m, tolerances[u]);
  }
  return out;
}

}  // namespace omp
}  // namespace tracklight::kernels
