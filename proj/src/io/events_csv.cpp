#include <algorithm>

#include "text.hpp"
#include "tracklight/io.hpp"

namespace tracklight::io {

using detail::parse_real;
using detail::split;

namespace {

constexpr std::string_view kEventsHeader = "event_id,gameclock,team,player_id,outcome,x,y,qualifiers";

std::optional<std::string> optional_cell(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return std::string(s);
}

}  // namespace

EventsParse parse_events_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines.front().text != kEventsHeader) {
    throw FormatError("header must be '" + std::string(kEventsHeader) + "'", 1);
  }

  ParseReport report;
  std::vector<Event> events;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.text.empty()) continue;
    ++report.rows_read;
    const auto c = split(line.text, ',');
    if (c.size() != 8) {
      report.skip(line.number, "expected 8 cells, got " + std::to_string(c.size()));
      continue;
    }
    Event e;
    if (c[0].empty()) {
      report.skip(line.number, "empty event_id");
      continue;
    }
    e.event_id = std::string(c[0]);
    const auto clock = parse_real(c[1]);
    if (!clock) {
      report.skip(line.number, "unparsable gameclock");
      continue;
    }
    if (*clock < 0.0) {
      report.skip(line.number, "negative gameclock");
      continue;
    }
    e.gameclock = *clock;
    e.team = optional_cell(c[2]);
    e.player_id = optional_cell(c[3]);
    if (c[4] == "success") {
      e.outcome = Outcome::Success;
    } else if (c[4] == "failure") {
      e.outcome = Outcome::Failure;
    } else if (!c[4].empty()) {
      report.skip(line.number, "unknown outcome '" + std::string(c[4]) + "'");
      continue;
    }
    if (c[5].empty() != c[6].empty()) {
      report.skip(line.number, "only one of x/y present");
      continue;
    }
    if (!c[5].empty()) {
      e.x = parse_real(c[5]);
      e.y = parse_real(c[6]);
      if (!e.x || !e.y) {
        report.skip(line.number, "unparsable coordinate");
        continue;
      }
    }
    bool ok = true;
    if (!c[7].empty()) {
      for (const auto kv : split(c[7], '|')) {
        const auto eq = split(kv, '=');
        if (eq.size() != 2 || eq[0].empty() || !e.qualifiers.emplace(eq[0], eq[1]).second) {
          report.skip(line.number, "malformed qualifier '" + std::string(kv) + "'");
          ok = false;
          break;
        }
      }
    }
    if (ok) events.push_back(std::move(e));
  }

  const auto by_clock = [](const Event& a, const Event& b) { return a.gameclock < b.gameclock; };
  if (!std::is_sorted(events.begin(), events.end(), by_clock)) {
    std::stable_sort(events.begin(), events.end(), by_clock);
    report.warn(0, "events were not sorted by gameclock; sorted");
  }
  return {EventList(std::move(events)), std::move(report)};
}

EventsParse parse_events_csv(std::istream& source) { return parse_events_csv(detail::slurp(source)); }

GameCode parse_code_csv(std::string_view text, std::string name, double framerate) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines.front().text != "frame,token") throw FormatError("header must be 'frame,token'", 1);

  std::vector<std::string> values;
  std::map<std::string, std::string> definitions;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.text.empty()) continue;
    const auto c = split(line.text, ',');
    if (c.size() != 2 || c[1].empty()) throw FormatError("expected '<frame>,<token>'", line.number);
    const auto frame = detail::parse_int(c[0]);
    if (!frame) throw FormatError("unparsable frame number", line.number);
    const auto expected = static_cast<std::int64_t>(values.size());
    if (*frame < expected) throw FormatError("duplicate frame " + std::to_string(*frame), line.number);
    if (*frame > expected) {
      throw FormatError("gap in frames: expected " + std::to_string(expected) + ", got " + std::to_string(*frame),
                        line.number);
    }
    values.emplace_back(c[1]);
    definitions.emplace(c[1], c[1]);
  }
  try {
    return GameCode(std::move(name), std::move(values), std::move(definitions), framerate);
  } catch (const ArgumentError& e) {
    throw FormatError(e.what());
  }
}

GameCode parse_code_csv(std::istream& source, std::string name, double framerate) {
  return parse_code_csv(detail::slurp(source), std::move(name), framerate);
}

}  // namespace tracklight::io
