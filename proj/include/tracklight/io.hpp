#pragma once

// Text formats. All grammars use ',' as field separator and '.' as decimal
// separator; no quoting. Lines may end in "\n" or "\r\n"; writers emit "\n".
// Full grammars are in docs/formats.md.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tracklight/core.hpp"

namespace tracklight::io {

struct ParseWarning {
  std::size_t line_number;
  std::string message;
};

struct ParseReport {
  std::size_t rows_read{0};
  std::size_t rows_skipped{0};
  std::vector<ParseWarning> warnings;

  void skip(std::size_t line, std::string message) {
    ++rows_skipped;
    warnings.push_back({line, std::move(message)});
  }
  void warn(std::size_t line, std::string message) { warnings.push_back({line, std::move(message)}); }
};

/// Framerate assumed when it cannot be inferred (fewer than two timestamps) and the
/// frame-line format's declared rate for consecutive frame numbers.
inline constexpr double kDefaultFramerate = 25.0;

struct WideParse {
  TrackingData data;
  ParseReport report;
};

/// `frame,t_ms,<pid>_x,<pid>_y[,...]`. Empty cells are missing. Framerate is
/// 1000 / median(successive t_ms deltas).
WideParse parse_tracking_wide_csv(std::istream& source);
WideParse parse_tracking_wide_csv(std::string_view text);

/// Serializes with `frame = t`, `t_ms = round(1000 t / framerate)`, shortest
/// round-trip decimal coordinates and empty cells for missing samples.
void write_tracking_wide_csv(const TrackingData& td, std::ostream& out);
std::string write_tracking_wide_csv(const TrackingData& td);

struct LongParse {
  std::map<std::string, TrackingData> groups;
  /// Union time base (t_ms, ascending) of each group; one entry per frame.
  std::map<std::string, std::vector<double>> time_base;
  ParseReport report;
};

/// `t_ms,group_id,player_id,x,y` (header fields matched by name), one row per sample,
/// any row order. Pivoted per group; player ids sorted lexicographically.
LongParse parse_tracking_long_csv(std::istream& source);
LongParse parse_tracking_long_csv(std::string_view text);

struct LongRow {
  double t_ms;
  std::string group_id;
  std::string player_id;
  double x;
  double y;

  friend bool operator==(const LongRow&, const LongRow&) = default;
};

/// Inverse of the pivot: non-missing samples as rows sorted by (t, group, player).
std::vector<LongRow> flatten_long(const LongParse& parsed);

struct DatParse {
  TrackingData home;
  TrackingData away;
  TrackingData ball;
  ParseReport report;
};

/// `<frame_no>:<team>,<player_id>,<x>,<y>;...;:<ball_x>,<ball_y>:` one line per frame,
/// centimeters, team 0 = home and 1 = away. Framerate is 25 / median frame-number spacing.
DatParse parse_tracking_dat(std::istream& source);
DatParse parse_tracking_dat(std::string_view text);

struct EventsParse {
  EventList events;
  ParseReport report;
};

/// `event_id,gameclock,team,player_id,outcome,x,y,qualifiers`, qualifiers `k1=v1|k2=v2`.
EventsParse parse_events_csv(std::istream& source);
EventsParse parse_events_csv(std::string_view text);

/// `frame,token` with frames 0..F-1 in order. Definitions default to token -> token.
GameCode parse_code_csv(std::istream& source, std::string name = "code",
                        double framerate = kDefaultFramerate);
GameCode parse_code_csv(std::string_view text, std::string name = "code", double framerate = kDefaultFramerate);

/// Property matrix as `frame,<pid>,...` with "NA" for missing values.
void write_property_csv(const PlayerProperty& prop, std::ostream& out);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace tracklight::io
