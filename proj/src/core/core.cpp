#include "tracklight/core.hpp"

#include <algorithm>
#include <cstring>
#include <set>

namespace tracklight {

namespace {

void check_framerate(double framerate) {
  if (!(framerate > 0.0) || !std::isfinite(framerate)) {
    throw ArgumentError("framerate must be a positive finite number");
  }
}

void check_player_ids(const std::vector<std::string>& ids) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) throw ArgumentError("player ids must be non-empty");
    if (!seen.insert(id).second) throw ArgumentError("duplicate player id '" + id + "'");
  }
}

}  // namespace

TrackingData::TrackingData(std::vector<double> coords, std::size_t frames, double framerate,
                           std::vector<std::string> player_ids, Direction direction)
    : coords_(std::move(coords)),
      frames_(frames),
      framerate_(framerate),
      player_ids_(std::move(player_ids)),
      direction_(direction) {
  check_framerate(framerate_);
  check_player_ids(player_ids_);
  if (coords_.size() != frames_ * columns()) {
    throw ArgumentError("coordinate matrix has " + std::to_string(coords_.size()) + " values, expected " +
                        std::to_string(frames_) + " x " + std::to_string(columns()));
  }
  for (std::size_t i = 0; i < coords_.size(); i += 2) {
    if (is_missing(coords_[i]) != is_missing(coords_[i + 1])) {
      throw ArgumentError("sample at frame " + std::to_string(i / std::max<std::size_t>(columns(), 1)) +
                          " has exactly one of x/y missing");
    }
    if (std::isinf(coords_[i]) || std::isinf(coords_[i + 1])) {
      throw ArgumentError("coordinates must be finite or missing");
    }
  }
}

TrackingData TrackingData::with_coords(std::vector<double> coords) const {
  return TrackingData(std::move(coords), frames_, framerate_, player_ids_, direction_);
}

bool operator==(const TrackingData& a, const TrackingData& b) {
  if (a.frames_ != b.frames_ || a.framerate_ != b.framerate_ || a.player_ids_ != b.player_ids_ ||
      a.direction_ != b.direction_ || a.coords_.size() != b.coords_.size()) {
    return false;
  }
  // Bitwise so that missing == missing.
  return a.coords_.empty() ||
         std::memcmp(a.coords_.data(), b.coords_.data(), a.coords_.size() * sizeof(double)) == 0;
}

PointView player_slice(const TrackingData& td, std::size_t k) {
  if (k >= td.players()) {
    throw RangeError("player index " + std::to_string(k) + " out of range (" + std::to_string(td.players()) +
                     " players)");
  }
  return PointView(td.coords().data() + 2 * k, td.columns(), td.frames());
}

PointView frame_slice(const TrackingData& td, std::size_t t) {
  if (t >= td.frames()) {
    throw RangeError("frame index " + std::to_string(t) + " out of range (" + std::to_string(td.frames()) +
                     " frames)");
  }
  return PointView(td.coords().data() + t * td.columns(), 2, td.players());
}

EventList::EventList(std::vector<Event> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& e = records_[i];
    if (e.event_id.empty()) throw ArgumentError("event " + std::to_string(i) + " has an empty event_id");
    if (!(e.gameclock >= 0.0) || !std::isfinite(e.gameclock)) {
      throw ArgumentError("event " + std::to_string(i) + " has an invalid gameclock");
    }
    if (e.x.has_value() != e.y.has_value()) {
      throw ArgumentError("event " + std::to_string(i) + " has exactly one of x/y");
    }
    if (i > 0 && records_[i - 1].gameclock > e.gameclock) {
      throw ArgumentError("events are not sorted by gameclock");
    }
  }
}

EventList filter_events(const EventList& events, const EventPredicate& predicate) {
  if (predicate.gameclock_range && predicate.gameclock_range->first > predicate.gameclock_range->second) {
    throw ArgumentError("gameclock range has lo > hi");
  }
  std::vector<Event> kept;
  for (const auto& e : events.records()) {
    if (predicate.event_id && e.event_id != *predicate.event_id) continue;
    if (predicate.team && e.team != predicate.team) continue;
    if (predicate.gameclock_range) {
      const auto [lo, hi] = *predicate.gameclock_range;
      if (e.gameclock < lo || e.gameclock > hi) continue;
    }
    kept.push_back(e);
  }
  return EventList(std::move(kept));
}

GameCode::GameCode(std::string name, std::vector<std::string> values,
                   std::map<std::string, std::string> definitions, double framerate)
    : name_(std::move(name)),
      values_(std::move(values)),
      definitions_(std::move(definitions)),
      framerate_(framerate) {
  check_framerate(framerate_);
  for (const auto& v : values_) {
    if (!definitions_.contains(v)) throw ArgumentError("code token '" + v + "' has no definition");
  }
}

std::vector<CodeInterval> code_intervals(const GameCode& code) {
  std::vector<CodeInterval> out;
  const auto& values = code.values();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] != values[start]) {
      out.push_back({start, i, values[start]});
      start = i;
    }
  }
  return out;
}

void Pitch::validate() const {
  if (!std::isfinite(xlim.first) || !std::isfinite(xlim.second) || !(xlim.first < xlim.second)) {
    throw ArgumentError("pitch xlim must satisfy xmin < xmax");
  }
  if (!std::isfinite(ylim.first) || !std::isfinite(ylim.second) || !(ylim.first < ylim.second)) {
    throw ArgumentError("pitch ylim must satisfy ymin < ymax");
  }
  if (unit == Unit::Percent && (!length || !width)) {
    throw ArgumentError("percent pitch requires physical length and width");
  }
  if ((length && !(*length > 0.0)) || (width && !(*width > 0.0))) {
    throw ArgumentError("pitch length and width must be positive");
  }
}

PlayerProperty::PlayerProperty(std::vector<double> values, std::size_t frames,
                               std::vector<std::string> player_ids, std::string name, std::string unit,
                               double framerate)
    : values_(std::move(values)),
      frames_(frames),
      player_ids_(std::move(player_ids)),
      name_(std::move(name)),
      unit_(std::move(unit)),
      framerate_(framerate) {
  check_framerate(framerate_);
  check_player_ids(player_ids_);
  if (values_.size() != frames_ * player_ids_.size()) {
    throw ArgumentError("property matrix has " + std::to_string(values_.size()) + " values, expected " +
                        std::to_string(frames_) + " x " + std::to_string(player_ids_.size()));
  }
}

std::vector<double> PlayerProperty::column(std::size_t player) const {
  if (player >= players()) throw RangeError("player index " + std::to_string(player) + " out of range");
  std::vector<double> out(frames_);
  for (std::size_t t = 0; t < frames_; ++t) out[t] = at(t, player);
  return out;
}

std::string to_string(Unit u) {
  switch (u) {
    case Unit::Meters: return "meters";
    case Unit::Centimeters: return "centimeters";
    case Unit::Percent: return "percent";
  }
  return "meters";
}

std::string to_string(Sport s) {
  switch (s) {
    case Sport::Football: return "football";
    case Sport::Handball: return "handball";
    case Sport::Other: return "other";
  }
  return "other";
}

Unit parse_unit(const std::string& s) {
  if (s == "meters") return Unit::Meters;
  if (s == "centimeters") return Unit::Centimeters;
  if (s == "percent") return Unit::Percent;
  throw ArgumentError("unknown unit '" + s + "'");
}

Sport parse_sport(const std::string& s) {
  if (s == "football") return Sport::Football;
  if (s == "handball") return Sport::Handball;
  if (s == "other") return Sport::Other;
  throw ArgumentError("unknown sport '" + s + "'");
}

}  // namespace tracklight
