#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tracklight/errors.hpp"

namespace tracklight {

/// Missing samples are quiet NaNs in every numeric matrix.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) noexcept { return std::isnan(v); }

struct Point {
  double x{kMissing};
  double y{kMissing};

  bool missing() const noexcept { return is_missing(x); }
};

/// Read-only strided view over interleaved (x, y) pairs of a coordinate matrix.
class PointView {
 public:
  PointView(const double* base, std::size_t stride, std::size_t count) noexcept
      : base_(base), stride_(stride), count_(count) {}

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  Point operator[](std::size_t i) const noexcept {
    const double* p = base_ + i * stride_;
    return {p[0], p[1]};
  }

  Point at(std::size_t i) const {
    if (i >= count_) throw RangeError("point index " + std::to_string(i) + " out of range");
    return (*this)[i];
  }

 private:
  const double* base_;
  std::size_t stride_;
  std::size_t count_;
};

enum class Direction { LeftToRight, RightToLeft, Unspecified };

/// Frames x (2 * players) coordinate matrix, row-major. Column 2k is x of player k,
/// column 2k+1 is y. Immutable after construction.
class TrackingData {
 public:
  TrackingData() = default;

  /// `coords.size()` must equal frames * 2 * player_ids.size(). Throws ArgumentError
  /// when the layout is inconsistent, framerate is not positive, player ids are empty
  /// or duplicated, or a sample has exactly one of x/y missing.
  TrackingData(std::vector<double> coords, std::size_t frames, double framerate,
               std::vector<std::string> player_ids, Direction direction = Direction::Unspecified);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t players() const noexcept { return player_ids_.size(); }
  std::size_t columns() const noexcept { return 2 * player_ids_.size(); }
  double framerate() const noexcept { return framerate_; }
  Direction direction() const noexcept { return direction_; }
  const std::vector<std::string>& player_ids() const noexcept { return player_ids_; }

  std::span<const double> coords() const noexcept { return coords_; }
  double at(std::size_t frame, std::size_t column) const noexcept {
    return coords_[frame * columns() + column];
  }
  Point point(std::size_t frame, std::size_t player) const noexcept {
    const double* p = coords_.data() + frame * columns() + 2 * player;
    return {p[0], p[1]};
  }

  /// Copy with the same metadata and a new coordinate matrix of identical shape.
  TrackingData with_coords(std::vector<double> coords) const;

  friend bool operator==(const TrackingData& a, const TrackingData& b);

 private:
  std::vector<double> coords_;
  std::size_t frames_{0};
  double framerate_{25.0};
  std::vector<std::string> player_ids_;
  Direction direction_{Direction::Unspecified};
};

/// Column view of player `k`; throws RangeError when k >= players().
PointView player_slice(const TrackingData& td, std::size_t k);
/// Row view of frame `t`; throws RangeError when t >= frames().
PointView frame_slice(const TrackingData& td, std::size_t t);

enum class Outcome { Success, Failure };

struct Event {
  std::string event_id;
  double gameclock{0.0};
  std::optional<std::string> team;
  std::optional<std::string> player_id;
  std::optional<Outcome> outcome;
  std::optional<double> x;
  std::optional<double> y;
  std::map<std::string, std::string> qualifiers;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Events ordered by non-decreasing gameclock.
class EventList {
 public:
  EventList() = default;
  explicit EventList(std::vector<Event> records);

  const std::vector<Event>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const Event& operator[](std::size_t i) const { return records_[i]; }

  friend bool operator==(const EventList&, const EventList&) = default;

 private:
  std::vector<Event> records_;
};

struct EventPredicate {
  std::optional<std::string> event_id;
  std::optional<std::string> team;
  std::optional<std::pair<double, double>> gameclock_range;  // inclusive
};

EventList filter_events(const EventList& events, const EventPredicate& predicate);

/// Per-frame categorical sequence, e.g. ball possession.
class GameCode {
 public:
  GameCode() = default;
  GameCode(std::string name, std::vector<std::string> values,
           std::map<std::string, std::string> definitions, double framerate);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& values() const noexcept { return values_; }
  const std::map<std::string, std::string>& definitions() const noexcept { return definitions_; }
  double framerate() const noexcept { return framerate_; }
  std::size_t frames() const noexcept { return values_.size(); }

  friend bool operator==(const GameCode&, const GameCode&) = default;

 private:
  std::string name_;
  std::vector<std::string> values_;
  std::map<std::string, std::string> definitions_;
  double framerate_{25.0};
};

struct CodeInterval {
  std::size_t start;
  std::size_t end;  // exclusive
  std::string token;

  friend bool operator==(const CodeInterval&, const CodeInterval&) = default;
};

/// Run-length view; the intervals partition [0, frames).
std::vector<CodeInterval> code_intervals(const GameCode& code);

enum class Unit { Meters, Centimeters, Percent };
enum class Boundedness { Fixed, Flexible };
enum class Sport { Football, Handball, Other };

struct Pitch {
  std::pair<double, double> xlim{0.0, 105.0};
  std::pair<double, double> ylim{0.0, 68.0};
  Unit unit{Unit::Meters};
  Boundedness boundedness{Boundedness::Fixed};
  std::optional<double> length;
  std::optional<double> width;
  Sport sport{Sport::Other};

  /// Throws ArgumentError on empty/inverted ranges or a percent pitch without dimensions.
  void validate() const;

  double x_extent() const noexcept { return xlim.second - xlim.first; }
  double y_extent() const noexcept { return ylim.second - ylim.first; }

  friend bool operator==(const Pitch&, const Pitch&) = default;
};

/// Frames x players scalar matrix, row-major.
class PlayerProperty {
 public:
  PlayerProperty() = default;
  PlayerProperty(std::vector<double> values, std::size_t frames, std::vector<std::string> player_ids,
                 std::string name, std::string unit, double framerate);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t players() const noexcept { return player_ids_.size(); }
  const std::vector<std::string>& player_ids() const noexcept { return player_ids_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& unit() const noexcept { return unit_; }
  double framerate() const noexcept { return framerate_; }

  std::span<const double> values() const noexcept { return values_; }
  double at(std::size_t frame, std::size_t player) const noexcept {
    return values_[frame * players() + player];
  }
  /// Copies one player's series out of the matrix.
  std::vector<double> column(std::size_t player) const;

 private:
  std::vector<double> values_;
  std::size_t frames_{0};
  std::vector<std::string> player_ids_;
  std::string name_;
  std::string unit_;
  double framerate_{25.0};
};

std::string to_string(Unit u);
std::string to_string(Sport s);
Unit parse_unit(const std::string& s);    // throws ArgumentError
Sport parse_sport(const std::string& s);  // throws ArgumentError

}  // namespace tracklight
