#pragma once

// Deterministic SVG 1.1 rendering. Element coordinates are in pitch units with
// six fixed decimals; a single top-level transform flips the y axis so that y
// grows upwards. Equal inputs give byte-identical documents.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tracklight/core.hpp"

namespace tracklight::vis {

/// Defaults are arbitrary choices, not derived from any reference figure.
struct RenderStyle {
  double point_radius{0.8};
  double stroke_width{0.15};
  std::vector<std::string> team_colors{"#d62728", "#1f77b4", "#ffbf00"};
  std::string background{"#3a7d44"};
  std::string line_color{"#ffffff"};

  /// Throws ArgumentError for non-positive sizes or colors other than `#rrggbb`.
  void validate() const;
};

/// Outline plus sport markings: football gets halfway line, centre circle and
/// penalty areas (105 x 68 proportions), handball gets centre line and 6 m
/// goal-area arcs (40 x 20 proportions), other gets the outline only.
std::string render_pitch(const Pitch& pitch, const RenderStyle& style = {});

/// Pitch plus one circle per non-missing player at `frame`. Throws RangeError
/// when frame >= td.frames().
std::string render_positions(const Pitch& pitch, const TrackingData& td, std::size_t frame,
                             const RenderStyle& style = {});
/// Several objects (teams, ball) at once; object i uses team_colors[i % n].
std::string render_positions(const Pitch& pitch, std::span<const TrackingData> objects, std::size_t frame,
                             const RenderStyle& style = {});

/// One polyline per player and contiguous non-missing run within [t0, t1).
/// Throws RangeError unless t0 < t1 <= td.frames().
std::string render_trajectories(const Pitch& pitch, const TrackingData& td, std::size_t t0, std::size_t t1,
                                const RenderStyle& style = {});
std::string render_trajectories(const Pitch& pitch, std::span<const TrackingData> objects, std::size_t t0,
                                std::size_t t1, const RenderStyle& style = {});

/// `xmin-Mx ymin-My width+2Mx height+2My` with 5% margins per axis.
std::string view_box(const Pitch& pitch);

}  // namespace tracklight::vis
