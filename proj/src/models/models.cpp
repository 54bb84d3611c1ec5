#include "tracklight/models.hpp"

#include <cmath>

namespace tracklight::models {

namespace {

ModelState fitted_state(const TrackingData& td) { return {true, td.framerate(), td.player_ids()}; }

PlayerProperty property_like(const TrackingData& td, std::vector<double> values, std::string name, std::string unit) {
  return PlayerProperty(std::move(values), td.frames(), td.player_ids(), std::move(name), std::move(unit),
                        td.framerate());
}

std::vector<double> running_sum(std::span<const double> values, std::size_t frames, std::size_t players,
                                double factor) {
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < players; ++k) {
    double sum = 0.0;
    for (std::size_t t = 0; t < frames; ++t) {
      const double v = values[t * players + k];
      if (!is_missing(v)) sum += v * factor;
      out[t * players + k] = sum;
    }
  }
  return out;
}

std::vector<double> speed(const TrackingData& td, Exec exec) {
  return exec == Exec::Serial ? kernels::serial::speed(td.coords(), td.frames(), td.players(), td.framerate())
                              : kernels::omp::speed(td.coords(), td.frames(), td.players(), td.framerate());
}

std::vector<double> rate(std::span<const double> values, const TrackingData& td, Exec exec) {
  return exec == Exec::Serial ? kernels::serial::rate_of_change(values, td.frames(), td.players(), td.framerate())
                              : kernels::omp::rate_of_change(values, td.frames(), td.players(), td.framerate());
}

void require_frames(const TrackingData& td, std::size_t n, const char* model) {
  if (td.frames() < n) {
    throw ArgumentError(std::string(model) + " requires at least " + std::to_string(n) + " frames, got " +
                        std::to_string(td.frames()));
  }
}

}  // namespace

void ModelState::require_fitted(const char* model) const {
  if (!fitted) throw StateError(std::string(model) + " queried before fit()");
}

void DistanceModel::fit(const TrackingData& td) {
  require_frames(td, 1, "DistanceModel");
  const std::size_t frames = td.frames();
  const std::size_t players = td.players();
  std::vector<double> step(frames * players);
  for (std::size_t k = 0; k < players; ++k) {
    step[k] = td.point(0, k).missing() ? kMissing : 0.0;
    for (std::size_t t = 1; t < frames; ++t) {
      const Point a = td.point(t - 1, k);
      const Point b = td.point(t, k);
      const double dx = b.x - a.x;
      const double dy = b.y - a.y;
      step[t * players + k] = std::sqrt(dx * dx + dy * dy);  // NaN when either side is missing
    }
  }
  auto cumulative = running_sum(step, frames, players, 1.0);
  frame_distance_ = property_like(td, std::move(step), "frame_distance", "m");
  cumulative_ = property_like(td, std::move(cumulative), "cumulative_distance", "m");
  state_ = fitted_state(td);
}

const PlayerProperty& DistanceModel::frame_distance() const {
  state_.require_fitted("DistanceModel");
  return frame_distance_;
}

const PlayerProperty& DistanceModel::cumulative_distance() const {
  state_.require_fitted("DistanceModel");
  return cumulative_;
}

void VelocityModel::fit(const TrackingData& td, Exec exec) {
  require_frames(td, 2, "VelocityModel");
  velocity_ = property_like(td, speed(td, exec), "velocity", "m/s");
  state_ = fitted_state(td);
}

const PlayerProperty& VelocityModel::velocity() const {
  state_.require_fitted("VelocityModel");
  return velocity_;
}

void AccelerationModel::fit(const TrackingData& td, Exec exec) {
  require_frames(td, 3, "AccelerationModel");
  const auto v = speed(td, exec);
  acceleration_ = property_like(td, rate(v, td, exec), "acceleration", "m/s^2");
  state_ = fitted_state(td);
}

const PlayerProperty& AccelerationModel::acceleration() const {
  state_.require_fitted("AccelerationModel");
  return acceleration_;
}

void MetabolicPowerModel::fit(const TrackingData& td, const KineticsParams& params, Exec exec) {
  if (!(params.terrain_factor > 0.0)) throw ArgumentError("terrain_factor must be positive");
  if (!(params.gravity > 0.0)) throw ArgumentError("gravity must be positive");
  require_frames(td, 3, "MetabolicPowerModel");
  const auto v = speed(td, exec);
  const auto a = rate(v, td, exec);
  auto p = exec == Exec::Serial ? kernels::serial::metabolic_power(v, a, params.terrain_factor, params.gravity)
                                : kernels::omp::metabolic_power(v, a, params.terrain_factor, params.gravity);
  auto cumulative = running_sum(p, td.frames(), td.players(), 1.0 / td.framerate());
  power_ = property_like(td, std::move(p), "metabolic_power", "W/kg");
  cumulative_ = property_like(td, std::move(cumulative), "cumulative_metabolic_power", "J/kg");
  state_ = fitted_state(td);
}

const PlayerProperty& MetabolicPowerModel::metabolic_power() const {
  state_.require_fitted("MetabolicPowerModel");
  return power_;
}

const PlayerProperty& MetabolicPowerModel::cumulative_metabolic_power() const {
  state_.require_fitted("MetabolicPowerModel");
  return cumulative_;
}

void CentroidModel::fit(const TrackingData& td) {
  const std::size_t frames = td.frames();
  std::vector<double> centroid(frames * 2, kMissing);
  std::vector<double> stretch(frames, kMissing);
  for (std::size_t t = 0; t < frames; ++t) {
    double sx = 0.0;
    double sy = 0.0;
    std::size_t n = 0;
    for (std::size_t k = 0; k < td.players(); ++k) {
      const Point p = td.point(t, k);
      if (p.missing()) continue;
      sx += p.x;
      sy += p.y;
      ++n;
    }
    if (n == 0) continue;
    const double cx = sx / static_cast<double>(n);
    const double cy = sy / static_cast<double>(n);
    double spread = 0.0;
    for (std::size_t k = 0; k < td.players(); ++k) {
      const Point p = td.point(t, k);
      if (!p.missing()) spread += std::hypot(p.x - cx, p.y - cy);
    }
    centroid[2 * t] = cx;
    centroid[2 * t + 1] = cy;
    stretch[t] = spread / static_cast<double>(n);
  }
  centroid_ = TrackingData(std::move(centroid), frames, td.framerate(), {"centroid"}, td.direction());
  stretch_ = PlayerProperty(std::move(stretch), frames, {"stretch_index"}, "stretch_index", "m", td.framerate());
  state_ = fitted_state(td);
}

const TrackingData& CentroidModel::centroid() const {
  state_.require_fitted("CentroidModel");
  return centroid_;
}

const PlayerProperty& CentroidModel::stretch_index() const {
  state_.require_fitted("CentroidModel");
  return stretch_;
}

PlayerProperty CentroidModel::centroid_distance(const CentroidModel& other) const {
  state_.require_fitted("CentroidModel");
  other.state_.require_fitted("CentroidModel");
  if (centroid_.frames() != other.centroid_.frames()) {
    throw ArgumentError("centroid_distance: frame counts differ (" + std::to_string(centroid_.frames()) + " vs " +
                        std::to_string(other.centroid_.frames()) + ")");
  }
  if (centroid_.framerate() != other.centroid_.framerate()) {
    throw ArgumentError("centroid_distance: framerates differ");
  }
  std::vector<double> d(centroid_.frames());
  for (std::size_t t = 0; t < d.size(); ++t) {
    const Point a = centroid_.point(t, 0);
    const Point b = other.centroid_.point(t, 0);
    d[t] = std::hypot(a.x - b.x, a.y - b.y);
  }
  return PlayerProperty(std::move(d), centroid_.frames(), {"centroid_distance"}, "centroid_distance", "m",
                        centroid_.framerate());
}

void ApproximateEntropyModel::fit(const PlayerProperty& prop, int m, std::optional<double> tolerance, Exec exec) {
  if (m < 1) throw ArgumentError("embedding dimension m must be >= 1");
  if (tolerance && !(*tolerance > 0.0)) throw ArgumentError("tolerance r must be positive");

  std::vector<std::vector<double>> series(prop.players());
  std::vector<double> tolerances(prop.players(), 0.0);
  for (std::size_t k = 0; k < prop.players(); ++k) {
    auto u = prop.column(k);
    while (!u.empty() && is_missing(u.back())) u.pop_back();
    bool gap = u.empty();
    for (double v : u) gap = gap || is_missing(v);
    if (gap) continue;  // stays empty -> missing result
    if (u.size() < static_cast<std::size_t>(m) + 2) {
      throw ArgumentError("player '" + prop.player_ids()[k] + "' has " + std::to_string(u.size()) +
                          " samples, approximate entropy needs at least m + 2 = " + std::to_string(m + 2));
    }
    if (tolerance) {
      tolerances[k] = *tolerance;
    } else {
      double mean = 0.0;
      for (double v : u) mean += v;
      mean /= static_cast<double>(u.size());
      double ss = 0.0;
      for (double v : u) ss += (v - mean) * (v - mean);
      tolerances[k] = 0.2 * std::sqrt(ss / static_cast<double>(u.size()));
    }
    series[k] = std::move(u);
  }

  entropy_ = exec == Exec::Serial ? kernels::serial::approximate_entropy(series, m, tolerances)
                                  : kernels::omp::approximate_entropy(series, m, tolerances);
  state_ = {true, prop.framerate(), prop.player_ids()};
}

const std::vector<double>& ApproximateEntropyModel::approximate_entropy() const {
  state_.require_fitted("ApproximateEntropyModel");
  return entropy_;
}

}  // namespace tracklight::models
