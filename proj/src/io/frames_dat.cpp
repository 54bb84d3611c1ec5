#include <map>
#include <set>

#include "text.hpp"
#include "tracklight/io.hpp"

namespace tracklight::io {

using detail::parse_int;
using detail::parse_real;
using detail::split;

namespace {

// Samples of one team, keyed by frame row, in first-appearance player order.
struct TeamAccumulator {
  std::vector<std::string> order;
  std::map<std::string, std::size_t> index;
  std::vector<std::map<std::size_t, Point>> rows;

  void add(std::size_t row, const std::string& id, Point p) {
    auto [it, inserted] = index.try_emplace(id, order.size());
    if (inserted) order.push_back(id);
    rows[row][it->second] = p;
  }

  TrackingData build(double framerate) const {
    const std::size_t frames = rows.size();
    std::vector<double> coords(frames * order.size() * 2, kMissing);
    for (std::size_t t = 0; t < frames; ++t) {
      for (const auto& [k, p] : rows[t]) {
        coords[(t * order.size() + k) * 2] = p.x;
        coords[(t * order.size() + k) * 2 + 1] = p.y;
      }
    }
    return TrackingData(std::move(coords), frames, framerate, order);
  }
};

}  // namespace

DatParse parse_tracking_dat(std::string_view text) {
  ParseReport report;
  TeamAccumulator teams[2];
  std::vector<double> ball;
  std::vector<std::int64_t> frame_numbers;

  for (const auto& line : detail::split_lines(text)) {
    if (detail::is_blank(line.text)) continue;
    ++report.rows_read;
    const auto parts = split(line.text, ':');
    if (parts.size() != 4 || !parts[3].empty()) {
      report.skip(line.number, "expected '<frame>:<players>:<ball>:'");
      continue;
    }
    const auto frame_no = parse_int(parts[0]);
    if (!frame_no) {
      report.skip(line.number, "unparsable frame number");
      continue;
    }
    if (!frame_numbers.empty() && *frame_no <= frame_numbers.back()) {
      throw FormatError("frame number " + std::to_string(*frame_no) + " does not increase", line.number);
    }
    const std::size_t row = frame_numbers.size();
    frame_numbers.push_back(*frame_no);
    teams[0].rows.emplace_back();
    teams[1].rows.emplace_back();

    std::set<std::pair<int, std::string>> on_line;
    for (const auto chunk : split(parts[1], ';')) {
      if (chunk.empty()) continue;
      const auto f = split(chunk, ',');
      std::optional<double> x, y;
      if (f.size() == 4) {
        x = parse_real(f[2]);
        y = parse_real(f[3]);
      }
      if (f.size() != 4 || (f[0] != "0" && f[0] != "1") || f[1].empty() || !x || !y) {
        report.warn(line.number, "malformed player chunk '" + std::string(chunk) + "' skipped");
        continue;
      }
      const int team = f[0] == "0" ? 0 : 1;
      std::string id(f[1]);
      if (!on_line.insert({team, id}).second) {
        report.warn(line.number, "duplicate player chunk for '" + id + "' skipped");
        continue;
      }
      teams[team].add(row, id, {*x, *y});
    }

    double bx = kMissing;
    double by = kMissing;
    if (!parts[2].empty()) {
      const auto f = split(parts[2], ',');
      std::optional<double> x, y;
      if (f.size() == 2) {
        x = parse_real(f[0]);
        y = parse_real(f[1]);
      }
      if (x && y) {
        bx = *x;
        by = *y;
      } else {
        report.warn(line.number, "malformed ball chunk '" + std::string(parts[2]) + "' treated as missing");
      }
    }
    ball.push_back(bx);
    ball.push_back(by);
  }

  double framerate = kDefaultFramerate;
  if (frame_numbers.size() >= 2) {
    std::vector<double> spacing;
    for (std::size_t i = 1; i < frame_numbers.size(); ++i) {
      spacing.push_back(static_cast<double>(frame_numbers[i]) - static_cast<double>(frame_numbers[i - 1]));
    }
    framerate = kDefaultFramerate / detail::median(std::move(spacing));
    if (!std::isfinite(framerate)) throw FormatError("cannot infer a finite framerate from frame numbers");
  }

  const std::size_t frames = frame_numbers.size();
  return {teams[0].build(framerate), teams[1].build(framerate),
          TrackingData(std::move(ball), frames, framerate, {"ball"}), std::move(report)};
}

DatParse parse_tracking_dat(std::istream& source) { return parse_tracking_dat(detail::slurp(source)); }

}  // namespace tracklight::io
