#include <cmath>
#include <cstdint>
#include <numbers>

#include "tracklight/datasets.hpp"

namespace tracklight::datasets {

namespace {

constexpr std::size_t kFrames = 1200;
constexpr double kFramerate = 20.0;
constexpr std::size_t kPlayersPerTeam = 7;

// splitmix64; integer-only so the parameters are identical on every platform.
class ParamStream {
 public:
  explicit ParamStream(std::uint64_t seed) : state_(seed) {}

  double uniform(double lo, double hi) {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return lo + (hi - lo) * static_cast<double>(z >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Two-harmonic oscillation around an anchor, per axis.
struct Motion {
  double anchor_x, anchor_y;
  double amp_x[2], amp_y[2];
  double freq_x[2], freq_y[2];
  double phase_x[2], phase_y[2];

  Point at(double seconds) const {
    double x = anchor_x;
    double y = anchor_y;
    for (int h = 0; h < 2; ++h) {
      x += amp_x[h] * std::sin(freq_x[h] * seconds + phase_x[h]);
      y += amp_y[h] * std::sin(freq_y[h] * seconds + phase_y[h]);
    }
    return {x, y};
  }
};

Motion player_motion(ParamStream& rng, double anchor_x, double anchor_y) {
  Motion m{};
  m.anchor_x = anchor_x;
  m.anchor_y = anchor_y;
  for (int h = 0; h < 2; ++h) {
    const double weight = h == 0 ? 1.0 : 0.35;
    m.amp_x[h] = weight * rng.uniform(2.0, 4.0);
    m.amp_y[h] = weight * rng.uniform(1.0, 2.5);
    m.freq_x[h] = (h == 0 ? 1.0 : 2.3) * rng.uniform(0.25, 0.6);
    m.freq_y[h] = (h == 0 ? 1.0 : 2.1) * rng.uniform(0.25, 0.6);
    m.phase_x[h] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    m.phase_y[h] = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  return m;
}

struct Gap {
  std::size_t player;
  std::size_t first;
  std::size_t count;
};

TrackingData build(const std::vector<Motion>& motions, const std::vector<std::string>& ids,
                   std::initializer_list<Gap> gaps, Direction direction) {
  const std::size_t players = motions.size();
  std::vector<double> coords(kFrames * players * 2);
  for (std::size_t t = 0; t < kFrames; ++t) {
    const double seconds = static_cast<double>(t) / kFramerate;
    for (std::size_t k = 0; k < players; ++k) {
      const Point p = motions[k].at(seconds);
      coords[(t * players + k) * 2] = p.x;
      coords[(t * players + k) * 2 + 1] = p.y;
    }
  }
  for (const Gap& g : gaps) {
    for (std::size_t t = g.first; t < g.first + g.count; ++t) {
      coords[(t * players + g.player) * 2] = kMissing;
      coords[(t * players + g.player) * 2 + 1] = kMissing;
    }
  }
  return TrackingData(std::move(coords), kFrames, kFramerate, ids, direction);
}

}  // namespace

Sample get_dataset_sample() {
  ParamStream rng(0x7472616b6c697465ULL);

  // Field positions of a 6:0 defence / attack line-up, mirrored for the away side.
  constexpr double kAnchors[kPlayersPerTeam][2] = {{4.0, 10.0},  {9.0, 3.5},   {10.0, 8.0}, {10.0, 12.0},
                                                   {9.0, 16.5},  {14.0, 6.0},  {14.0, 14.0}};

  std::vector<Motion> home, away;
  std::vector<std::string> home_ids, away_ids;
  for (std::size_t k = 0; k < kPlayersPerTeam; ++k) {
    home.push_back(player_motion(rng, kAnchors[k][0], kAnchors[k][1]));
    home_ids.push_back("H" + std::to_string(k + 1));
  }
  for (std::size_t k = 0; k < kPlayersPerTeam; ++k) {
    away.push_back(player_motion(rng, 40.0 - kAnchors[k][0] - 6.0, 20.0 - kAnchors[k][1]));
    away_ids.push_back("A" + std::to_string(k + 1));
  }
  // Goalkeepers stay near their own goal.
  home[0].anchor_x = 2.5;
  away[0].anchor_x = 37.5;
  for (Motion* gk : {&home[0], &away[0]}) {
    gk->amp_x[0] = 0.8;
    gk->amp_x[1] = 0.3;
  }

  Motion ball{};
  ball.anchor_x = 20.0;
  ball.anchor_y = 10.0;
  ball.amp_x[0] = 12.0;
  ball.amp_x[1] = 3.0;
  ball.amp_y[0] = 5.0;
  ball.amp_y[1] = 2.0;
  ball.freq_x[0] = 0.35;
  ball.freq_x[1] = 1.1;
  ball.freq_y[0] = 0.6;
  ball.freq_y[1] = 1.7;
  ball.phase_x[0] = 0.3;
  ball.phase_x[1] = 1.2;
  ball.phase_y[0] = 2.0;
  ball.phase_y[1] = 0.4;

  Pitch pitch;
  pitch.xlim = {0.0, 40.0};
  pitch.ylim = {0.0, 20.0};
  pitch.unit = Unit::Meters;
  pitch.boundedness = Boundedness::Fixed;
  pitch.length = 40.0;
  pitch.width = 20.0;
  pitch.sport = Sport::Handball;

  return {build(home, home_ids, {{2, 300, 40}, {6, 900, 5}}, Direction::LeftToRight),
          build(away, away_ids, {{5, 700, 20}}, Direction::RightToLeft),
          build({ball}, {"ball"}, {{0, 1000, 10}}, Direction::Unspecified), pitch};
}

}  // namespace tracklight::datasets
