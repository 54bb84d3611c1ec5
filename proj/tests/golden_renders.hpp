#pragma once

// The two snapshot renders of the bundled sample: football positions (sample
// rescaled onto a 105 x 68 pitch) and handball trajectories.

#include <filesystem>
#include <string>
#include <vector>

#include "tracklight/datasets.hpp"
#include "tracklight/transforms.hpp"
#include "tracklight/vis.hpp"

namespace tracklight::test {

inline Pitch football_pitch() {
  Pitch p;
  p.xlim = {0.0, 105.0};
  p.ylim = {0.0, 68.0};
  p.sport = Sport::Football;
  p.length = 105.0;
  p.width = 68.0;
  return p;
}

inline std::string render_football_positions() {
  const auto s = datasets::get_dataset_sample();
  const Pitch target = football_pitch();
  std::vector<TrackingData> objects;
  for (const auto* td : {&s.home, &s.away, &s.ball}) objects.push_back(rescale_to_pitch(*td, s.pitch, target));
  return vis::render_positions(target, objects, 310);
}

inline std::string render_handball_trajectories() {
  const auto s = datasets::get_dataset_sample();
  const std::vector<TrackingData> objects{s.home, s.away};
  return vis::render_trajectories(s.pitch, objects, 280, 360);
}

inline std::filesystem::path golden_dir() { return TRACKLIGHT_GOLDEN_DIR; }

}  // namespace tracklight::test
