#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "text.hpp"
#include "tracklight/io.hpp"

namespace tracklight::io {

using detail::parse_real;
using detail::split;
using detail::split_lines;

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

double framerate_from_times(const std::vector<double>& t_ms, ParseReport& report) {
  if (t_ms.size() < 2) {
    if (!t_ms.empty()) report.warn(0, "single frame: framerate defaults to 25");
    return kDefaultFramerate;
  }
  std::vector<double> deltas;
  deltas.reserve(t_ms.size() - 1);
  for (std::size_t i = 1; i < t_ms.size(); ++i) deltas.push_back(t_ms[i] - t_ms[i - 1]);
  const double framerate = 1000.0 / detail::median(std::move(deltas));
  if (!(framerate > 0.0) || !std::isfinite(framerate)) throw FormatError("cannot infer a positive finite framerate");
  return framerate;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

WideParse parse_tracking_wide_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || detail::is_blank(lines.front().text)) throw FormatError("missing header", 1);

  const auto header = split(lines.front().text, ',');
  if (header.size() < 2 || header[0] != "frame" || header[1] != "t_ms") {
    throw FormatError("header must start with 'frame,t_ms'", 1);
  }
  if ((header.size() - 2) % 2 != 0) throw FormatError("odd number of coordinate columns", 1);

  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (std::size_t c = 2; c < header.size(); c += 2) {
    const std::string_view hx = header[c];
    const std::string_view hy = header[c + 1];
    if (hx.size() < 3 || !hx.ends_with("_x") || !hy.ends_with("_y") ||
        hx.substr(0, hx.size() - 2) != hy.substr(0, hy.size() - 2)) {
      throw FormatError("columns '" + std::string(hx) + "," + std::string(hy) + "' are not a <pid>_x,<pid>_y pair",
                        1);
    }
    std::string id(hx.substr(0, hx.size() - 2));
    if (!seen.insert(id).second) throw FormatError("duplicate player id '" + id + "' in header", 1);
    ids.push_back(std::move(id));
  }

  ParseReport report;
  std::vector<double> coords;
  std::vector<double> times;
  const std::size_t ncols = header.size();
  std::vector<double> row(ncols - 2);

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.text.empty()) continue;
    ++report.rows_read;
    const auto cells = split(line.text, ',');
    if (cells.size() != ncols) {
      report.skip(line.number, "expected " + std::to_string(ncols) + " cells, got " + std::to_string(cells.size()));
      continue;
    }
    if (!detail::parse_int(cells[0])) {
      report.skip(line.number, "unparsable frame number");
      continue;
    }
    const auto t = parse_real(cells[1]);
    if (!t) {
      report.skip(line.number, "unparsable t_ms");
      continue;
    }
    bool ok = true;
    for (std::size_t c = 2; c < ncols && ok; c += 2) {
      const bool mx = cells[c].empty();
      const bool my = cells[c + 1].empty();
      if (mx && my) {
        row[c - 2] = row[c - 1] = kMissing;
        continue;
      }
      if (mx != my) {
        report.skip(line.number, "player '" + ids[(c - 2) / 2] + "' has only one of x/y");
        ok = false;
        break;
      }
      const auto x = parse_real(cells[c]);
      const auto y = parse_real(cells[c + 1]);
      if (!x || !y) {
        report.skip(line.number, "unparsable coordinate for player '" + ids[(c - 2) / 2] + "'");
        ok = false;
        break;
      }
      row[c - 2] = *x;
      row[c - 1] = *y;
    }
    if (!ok) continue;
    if (!times.empty() && !(*t > times.back())) throw FormatError("t_ms is not strictly increasing", line.number);
    times.push_back(*t);
    coords.insert(coords.end(), row.begin(), row.end());
  }

  const double framerate = framerate_from_times(times, report);
  return {TrackingData(std::move(coords), times.size(), framerate, std::move(ids)), std::move(report)};
}

WideParse parse_tracking_wide_csv(std::istream& source) { return parse_tracking_wide_csv(detail::slurp(source)); }

void write_tracking_wide_csv(const TrackingData& td, std::ostream& out) {
  out << "frame,t_ms";
  for (const auto& id : td.player_ids()) out << ',' << id << "_x," << id << "_y";
  out << '\n';
  const std::size_t cols = td.columns();
  for (std::size_t t = 0; t < td.frames(); ++t) {
    out << t << ',' << std::llround(1000.0 * static_cast<double>(t) / td.framerate());
    for (std::size_t c = 0; c < cols; ++c) {
      out << ',';
      const double v = td.at(t, c);
      if (!is_missing(v)) out << format_double(v);
    }
    out << '\n';
  }
}

std::string write_tracking_wide_csv(const TrackingData& td) {
  std::ostringstream os;
  write_tracking_wide_csv(td, os);
  return os.str();
}

LongParse parse_tracking_long_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || detail::is_blank(lines.front().text)) throw FormatError("missing header", 1);

  const auto header = split(lines.front().text, ',');
  constexpr std::string_view kFields[] = {"t_ms", "group_id", "player_id", "x", "y"};
  std::size_t index[5];
  for (std::size_t f = 0; f < 5; ++f) {
    const auto it = std::find(header.begin(), header.end(), kFields[f]);
    if (it == header.end()) throw FormatError("header is missing field '" + std::string(kFields[f]) + "'", 1);
    if (std::find(it + 1, header.end(), kFields[f]) != header.end()) {
      throw FormatError("header repeats field '" + std::string(kFields[f]) + "'", 1);
    }
    index[f] = static_cast<std::size_t>(it - header.begin());
  }

  struct Sample {
    double x;
    double y;
    std::size_t line;
  };
  // group -> (t_ms, player) -> sample
  std::map<std::string, std::map<std::pair<double, std::string>, Sample>> samples;

  ParseReport report;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.text.empty()) continue;
    ++report.rows_read;
    const auto cells = split(line.text, ',');
    if (cells.size() != header.size()) {
      report.skip(line.number,
                  "expected " + std::to_string(header.size()) + " cells, got " + std::to_string(cells.size()));
      continue;
    }
    const auto t = parse_real(cells[index[0]]);
    const std::string_view group = cells[index[1]];
    const std::string_view player = cells[index[2]];
    const std::string_view xs = cells[index[3]];
    const std::string_view ys = cells[index[4]];
    if (!t) {
      report.skip(line.number, "unparsable t_ms");
      continue;
    }
    if (group.empty() || player.empty()) {
      report.skip(line.number, "empty group_id or player_id");
      continue;
    }
    double x = kMissing;
    double y = kMissing;
    if (xs.empty() != ys.empty()) {
      report.skip(line.number, "only one of x/y present");
      continue;
    }
    if (!xs.empty()) {
      const auto px = parse_real(xs);
      const auto py = parse_real(ys);
      if (!px || !py) {
        report.skip(line.number, "unparsable coordinate");
        continue;
      }
      x = *px;
      y = *py;
    }
    auto& g = samples[std::string(group)];
    auto [it, inserted] = g.try_emplace({*t, std::string(player)}, Sample{x, y, line.number});
    if (!inserted && !(same_bits(it->second.x, x) && same_bits(it->second.y, y))) {
      throw FormatError("conflicting duplicate sample for (" + format_double(*t) + ", " + std::string(group) +
                            ", " + std::string(player) + "), first seen on line " +
                            std::to_string(it->second.line),
                        line.number);
    }
  }

  LongParse out;
  for (auto& [group, g] : samples) {
    std::vector<double> times;
    std::set<std::string> player_set;
    for (const auto& [key, s] : g) {
      if (times.empty() || times.back() != key.first) times.push_back(key.first);
      player_set.insert(key.second);
    }
    std::vector<std::string> players(player_set.begin(), player_set.end());
    std::map<std::string, std::size_t> col;
    for (std::size_t k = 0; k < players.size(); ++k) col[players[k]] = k;

    std::vector<double> coords(times.size() * players.size() * 2, kMissing);
    std::size_t frame = 0;
    for (const auto& [key, s] : g) {
      while (times[frame] != key.first) ++frame;
      const std::size_t base = (frame * players.size() + col[key.second]) * 2;
      coords[base] = s.x;
      coords[base + 1] = s.y;
    }
    const double framerate = framerate_from_times(times, out.report);
    const std::size_t frames = times.size();
    out.groups.emplace(group, TrackingData(std::move(coords), frames, framerate, std::move(players)));
    out.time_base.emplace(group, std::move(times));
  }
  out.report.rows_read = report.rows_read;
  out.report.rows_skipped = report.rows_skipped;
  out.report.warnings.insert(out.report.warnings.begin(), report.warnings.begin(), report.warnings.end());
  return out;
}

LongParse parse_tracking_long_csv(std::istream& source) { return parse_tracking_long_csv(detail::slurp(source)); }

std::vector<LongRow> flatten_long(const LongParse& parsed) {
  std::vector<LongRow> rows;
  for (const auto& [group, td] : parsed.groups) {
    const auto& times = parsed.time_base.at(group);
    for (std::size_t t = 0; t < td.frames(); ++t) {
      for (std::size_t k = 0; k < td.players(); ++k) {
        const Point p = td.point(t, k);
        if (!p.missing()) rows.push_back({times[t], group, td.player_ids()[k], p.x, p.y});
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const LongRow& a, const LongRow& b) {
    return std::tie(a.t_ms, a.group_id, a.player_id) < std::tie(b.t_ms, b.group_id, b.player_id);
  });
  return rows;
}

void write_property_csv(const PlayerProperty& prop, std::ostream& out) {
  out << "frame";
  for (const auto& id : prop.player_ids()) out << ',' << id;
  out << '\n';
  for (std::size_t t = 0; t < prop.frames(); ++t) {
    out << t;
    for (std::size_t k = 0; k < prop.players(); ++k) {
      const double v = prop.at(t, k);
      out << ',' << (is_missing(v) ? std::string("NA") : format_double(v));
    }
    out << '\n';
  }
}

}  // namespace tracklight::io
