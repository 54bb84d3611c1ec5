#pragma once

// Fit-then-query analysis models. fit() computes and stores every result;
// queries return the stored results and throw StateError before fit().

#include <optional>
#include <string>
#include <vector>

#include "tracklight/core.hpp"
#include "tracklight/kernels.hpp"

namespace tracklight::models {

struct ModelState {
  bool fitted{false};
  double source_framerate{0.0};
  std::vector<std::string> source_player_ids;

  void require_fitted(const char* model) const;
};

/// Frame-to-frame Euclidean step length and its running sum.
class DistanceModel {
 public:
  void fit(const TrackingData& td);

  /// Row 0 is 0 (missing if the first sample is); steps touching a missing sample are missing.
  const PlayerProperty& frame_distance() const;
  /// Running sum of frame_distance with missing steps counted as 0.
  const PlayerProperty& cumulative_distance() const;
  const ModelState& state() const noexcept { return state_; }

 private:
  ModelState state_;
  PlayerProperty frame_distance_;
  PlayerProperty cumulative_;
};

/// Speed in m/s by central differences, one-sided at the ends. Requires >= 2 frames.
class VelocityModel {
 public:
  void fit(const TrackingData& td, Exec exec = Exec::Parallel);
  const PlayerProperty& velocity() const;
  const ModelState& state() const noexcept { return state_; }

 private:
  ModelState state_;
  PlayerProperty velocity_;
};

/// Signed rate of change of speed in m/s^2. Requires >= 3 frames.
class AccelerationModel {
 public:
  void fit(const TrackingData& td, Exec exec = Exec::Parallel);
  const PlayerProperty& acceleration() const;
  const ModelState& state() const noexcept { return state_; }

 private:
  ModelState state_;
  PlayerProperty acceleration_;
};

struct KineticsParams {
  double terrain_factor{1.0};
  double gravity{9.81};
};

/// Metabolic power of accelerated running via the equivalent slope ES = a / g and
/// equivalent mass EM = sqrt(ES^2 + 1):
///
///   EC = (155.4 ES^5 - 30.4 ES^4 - 43.3 ES^3 + 46.3 ES^2 + 19.5 ES + 3.6) * EM * terrain_factor
///   P  = EC * v                                              [W/kg]
///   cumulative[t] = sum over tau <= t of P[tau] / framerate   [J/kg]
///
/// Missing speed or acceleration gives missing P, which adds 0 to the running sum.
/// Requires >= 3 frames.
class MetabolicPowerModel {
 public:
  void fit(const TrackingData& td, const KineticsParams& params = {}, Exec exec = Exec::Parallel);
  const PlayerProperty& metabolic_power() const;
  const PlayerProperty& cumulative_metabolic_power() const;
  const ModelState& state() const noexcept { return state_; }

 private:
  ModelState state_;
  PlayerProperty power_;
  PlayerProperty cumulative_;
};

/// Team centroid and dispersion.
class CentroidModel {
 public:
  void fit(const TrackingData& td);

  /// Mean of the non-missing player positions per frame (P = 1, id "centroid").
  const TrackingData& centroid() const;
  /// Distance between this and `other`'s centroids. Throws ArgumentError when
  /// frame counts or framerates differ.
  PlayerProperty centroid_distance(const CentroidModel& other) const;
  /// Mean distance of the non-missing players to the centroid.
  const PlayerProperty& stretch_index() const;
  const ModelState& state() const noexcept { return state_; }

 private:
  ModelState state_;
  TrackingData centroid_;
  PlayerProperty stretch_;
};

/// Pincus approximate entropy per player with Chebyshev window distance and
/// self-matches. Trailing missing values are dropped; a series that is empty or
/// has a missing value before its last sample yields a missing result.
class ApproximateEntropyModel {
 public:
  /// `tolerance` defaults to 0.2 * population standard deviation of each series.
  /// Throws ArgumentError for m < 1, tolerance <= 0, or a series shorter than m + 2.
  void fit(const PlayerProperty& prop, int m = 2, std::optional<double> tolerance = std::nullopt,
           Exec exec = Exec::Parallel);
  const std::vector<double>& approximate_entropy() const;
  const ModelState& state() const noexcept { return state_; }

 private:
  ModelState state_;
  std::vector<double> entropy_;
};

}  // namespace tracklight::models
