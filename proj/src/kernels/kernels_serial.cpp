#include "columns.hpp"
#include "tracklight/kernels.hpp"

namespace tracklight::kernels {

double running_energy_cost(double es) noexcept { return detail::running_energy_cost(es); }

namespace serial {

std::vector<double> filter_columns(std::span<const double> matrix, std::size_t rows, std::size_t cols,
                                   std::span<const SecondOrderSection> sections, std::size_t padlen) {
  std::vector<double> out(matrix.size());
  std::vector<double> segment;
  for (std::size_t c = 0; c < cols; ++c) detail::filter_column(matrix, out, rows, cols, c, sections, padlen, segment);
  return out;
}

std::vector<double> speed(std::span<const double> coords, std::size_t frames, std::size_t players, double framerate) {
  std::vector<double> out(frames * players);
  for (std::size_t k = 0; k < players; ++k) detail::speed_player(coords, out, frames, players, k, framerate);
  return out;
}

std::vector<double> rate_of_change(std::span<const double> values, std::size_t frames, std::size_t cols,
                                   double framerate) {
  std::vector<double> out(frames * cols);
  for (std::size_t c = 0; c < cols; ++c) detail::rate_column(values, out, frames, cols, c, framerate);
  return out;
}

std::vector<double> metabolic_power(std::span<const double> speed, std::span<const double> acceleration,
                                    double terrain_factor, double gravity) {
  std::vector<double> out(speed.size());
  for (std::size_t i = 0; i < speed.size(); ++i) {
    out[i] = detail::metabolic_power_value(speed[i], acceleration[i], terrain_factor, gravity);
  }
  return out;
}

std::vector<double> approximate_entropy(std::span<const std::vector<double>> series, int m,
                                        std::span<const double> tolerances) {
  std::vector<double> out(series.size());
  for (std::size_t p = 0; p < series.size(); ++p) {
    out[p] = series[p].empty() ? kMissing : detail::approximate_entropy_series(series[p], m, tolerances[p]);
  }
  return out;
}

}  // namespace serial
}  // namespace tracklight::kernels
