#include <cctype>
#include <charconv>

#include "tracklight/vis.hpp"

namespace tracklight::vis {

namespace {

constexpr double kMarginFraction = 0.05;

std::string fixed6(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  std::string s(buf, ptr);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string trimmed(double v) {
  std::string s = fixed6(v);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

bool is_hex_color(const std::string& c) {
  if (c.size() != 7 || c[0] != '#') return false;
  for (std::size_t i = 1; i < 7; ++i) {
    if (!std::isxdigit(static_cast<unsigned char>(c[i]))) return false;
  }
  return true;
}

class SvgWriter {
 public:
  explicit SvgWriter(const Pitch& pitch, const RenderStyle& style) : pitch_(pitch), style_(style) {
    pitch_.validate();
    style_.validate();
    const double mx = kMarginFraction * pitch.x_extent();
    const double my = kMarginFraction * pitch.y_extent();
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + view_box(pitch) + "\">\n";
    out_ += "  <rect class=\"background\" x=\"" + fixed6(pitch.xlim.first - mx) + "\" y=\"" +
            fixed6(pitch.ylim.first - my) + "\" width=\"" + fixed6(pitch.x_extent() + 2 * mx) + "\" height=\"" +
            fixed6(pitch.y_extent() + 2 * my) + "\" fill=\"" + style.background + "\"/>\n";
    out_ += "  <g transform=\"matrix(1 0 0 -1 0 " + fixed6(pitch.ylim.first + pitch.ylim.second) + ")\">\n";
    markings();
  }

  void open_group(const std::string& cls, const std::string& attrs) {
    out_ += "    <g class=\"" + cls + "\" " + attrs + ">\n";
  }
  void close_group() { out_ += "    </g>\n"; }

  void circle(Point p, double r) {
    out_ += "      <circle cx=\"" + fixed6(p.x) + "\" cy=\"" + fixed6(p.y) + "\" r=\"" + fixed6(r) + "\"/>\n";
  }

  void polyline(std::span<const Point> pts) {
    out_ += "      <polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ += ' ';
      out_ += fixed6(pts[i].x) + "," + fixed6(pts[i].y);
    }
    out_ += "\"/>\n";
  }

  std::string finish() {
    out_ += "  </g>\n</svg>\n";
    return std::move(out_);
  }

 private:
  void rect(double x, double y, double w, double h) {
    out_ += "      <rect x=\"" + fixed6(x) + "\" y=\"" + fixed6(y) + "\" width=\"" + fixed6(w) + "\" height=\"" +
            fixed6(h) + "\"/>\n";
  }
  void line(double x1, double y1, double x2, double y2) {
    out_ += "      <line x1=\"" + fixed6(x1) + "\" y1=\"" + fixed6(y1) + "\" x2=\"" + fixed6(x2) + "\" y2=\"" +
            fixed6(y2) + "\"/>\n";
  }
  void ellipse(double cx, double cy, double rx, double ry) {
    out_ += "      <ellipse cx=\"" + fixed6(cx) + "\" cy=\"" + fixed6(cy) + "\" rx=\"" + fixed6(rx) + "\" ry=\"" +
            fixed6(ry) + "\"/>\n";
  }

  // Goal-area outline: quarter arc, straight segment, quarter arc, bulging
  // towards +x from goal line `gx` (dir = +1) or towards -x (dir = -1).
  void goal_area(double gx, double dir, double sx, double sy) {
    const double cy = 0.5 * (pitch_.ylim.first + pitch_.ylim.second);
    const double rx = 6.0 * sx;
    const double ry = 6.0 * sy;
    const double post = 1.5 * sy;
    const std::string sweep = dir > 0 ? "1" : "0";
    out_ += "      <path d=\"M " + fixed6(gx) + " " + fixed6(cy - post - ry) + " A " + fixed6(rx) + " " + fixed6(ry) +
            " 0 0 " + sweep + " " + fixed6(gx + dir * rx) + " " + fixed6(cy - post) + " L " + fixed6(gx + dir * rx) +
            " " + fixed6(cy + post) + " A " + fixed6(rx) + " " + fixed6(ry) + " 0 0 " + sweep + " " + fixed6(gx) +
            " " + fixed6(cy + post + ry) + "\"/>\n";
  }

  void markings() {
    const auto [xmin, xmax] = pitch_.xlim;
    const auto [ymin, ymax] = pitch_.ylim;
    const double w = pitch_.x_extent();
    const double h = pitch_.y_extent();
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    open_group("pitch", "fill=\"none\" stroke=\"" + style_.line_color + "\" stroke-width=\"" +
                            fixed6(style_.stroke_width) + "\"");
    rect(xmin, ymin, w, h);
    if (pitch_.sport == Sport::Football) {
      const double sx = w / 105.0;
      const double sy = h / 68.0;
      line(cx, ymin, cx, ymax);
      ellipse(cx, cy, 9.15 * sx, 9.15 * sy);
      rect(xmin, cy - 20.16 * sy, 16.5 * sx, 40.32 * sy);
      rect(xmax - 16.5 * sx, cy - 20.16 * sy, 16.5 * sx, 40.32 * sy);
    } else if (pitch_.sport == Sport::Handball) {
      const double sx = w / 40.0;
      const double sy = h / 20.0;
      line(cx, ymin, cx, ymax);
      goal_area(xmin, 1.0, sx, sy);
      goal_area(xmax, -1.0, sx, sy);
    }
    close_group();
  }

  const Pitch& pitch_;
  const RenderStyle& style_;
  std::string out_;
};

const std::string& color_for(const RenderStyle& style, std::size_t i) {
  return style.team_colors[i % style.team_colors.size()];
}

}  // namespace

void RenderStyle::validate() const {
  if (!(point_radius > 0.0)) throw ArgumentError("point_radius must be positive");
  if (!(stroke_width > 0.0)) throw ArgumentError("stroke_width must be positive");
  if (team_colors.empty()) throw ArgumentError("team_colors must not be empty");
  for (const auto& c : team_colors) {
    if (!is_hex_color(c)) throw ArgumentError("color '" + c + "' is not #rrggbb");
  }
  if (!is_hex_color(background)) throw ArgumentError("background '" + background + "' is not #rrggbb");
  if (!is_hex_color(line_color)) throw ArgumentError("line_color '" + line_color + "' is not #rrggbb");
}

std::string view_box(const Pitch& pitch) {
  const double mx = kMarginFraction * pitch.x_extent();
  const double my = kMarginFraction * pitch.y_extent();
  return trimmed(pitch.xlim.first - mx) + " " + trimmed(pitch.ylim.first - my) + " " +
         trimmed(pitch.x_extent() + 2 * mx) + " " + trimmed(pitch.y_extent() + 2 * my);
}

std::string render_pitch(const Pitch& pitch, const RenderStyle& style) { return SvgWriter(pitch, style).finish(); }

std::string render_positions(const Pitch& pitch, std::span<const TrackingData> objects, std::size_t frame,
                             const RenderStyle& style) {
  for (const auto& td : objects) {
    if (frame >= td.frames()) {
      throw RangeError("frame " + std::to_string(frame) + " out of range (" + std::to_string(td.frames()) +
                       " frames)");
    }
  }
  SvgWriter svg(pitch, style);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    svg.open_group("positions", "fill=\"" + color_for(style, i) + "\"");
    for (std::size_t k = 0; k < objects[i].players(); ++k) {
      const Point p = objects[i].point(frame, k);
      if (!p.missing()) svg.circle(p, style.point_radius);
    }
    svg.close_group();
  }
  return svg.finish();
}

std::string render_positions(const Pitch& pitch, const TrackingData& td, std::size_t frame,
                             const RenderStyle& style) {
  return render_positions(pitch, std::span<const TrackingData>(&td, 1), frame, style);
}

std::string render_trajectories(const Pitch& pitch, std::span<const TrackingData> objects, std::size_t t0,
                                std::size_t t1, const RenderStyle& style) {
  for (const auto& td : objects) {
    if (!(t0 < t1) || t1 > td.frames()) {
      throw RangeError("frame range [" + std::to_string(t0) + ", " + std::to_string(t1) + ") invalid for " +
                       std::to_string(td.frames()) + " frames");
    }
  }
  SvgWriter svg(pitch, style);
  std::vector<Point> run;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& td = objects[i];
    svg.open_group("trajectories", "fill=\"none\" stroke=\"" + color_for(style, i) + "\" stroke-width=\"" +
                                       fixed6(style.stroke_width) + "\"");
    for (std::size_t k = 0; k < td.players(); ++k) {
      run.clear();
      for (std::size_t t = t0; t <= t1; ++t) {
        const bool end = t == t1 || td.point(t, k).missing();
        if (end) {
          if (!run.empty()) svg.polyline(run);
          run.clear();
        } else {
          run.push_back(td.point(t, k));
        }
      }
    }
    svg.close_group();
  }
  return svg.finish();
}

std::string render_trajectories(const Pitch& pitch, const TrackingData& td, std::size_t t0, std::size_t t1,
                                const RenderStyle& style) {
  return render_trajectories(pitch, std::span<const TrackingData>(&td, 1), t0, t1, style);
}

}  // namespace tracklight::vis
