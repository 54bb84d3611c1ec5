#pragma once

// Per-column routines shared by the serial and OpenMP kernels. Each call
// touches only its own column of the output.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "tracklight/core.hpp"
#include "tracklight/filter.hpp"

namespace tracklight::kernels::detail {

inline void filter_column(std::span<const double> in, std::span<double> out, std::size_t rows, std::size_t cols,
                          std::size_t c, std::span<const SecondOrderSection> sections, std::size_t padlen,
                          std::vector<double>& segment) {
  std::size_t t = 0;
  while (t < rows) {
    if (is_missing(in[t * cols + c])) {
      out[t * cols + c] = kMissing;
      ++t;
      continue;
    }
    std::size_t end = t;
    segment.clear();
    while (end < rows && !is_missing(in[end * cols + c])) segment.push_back(in[end++ * cols + c]);
    if (segment.size() <= padlen) {
      for (std::size_t i = t; i < end; ++i) out[i * cols + c] = kMissing;
    } else {
      const auto filtered = zero_phase_filter(sections, segment, padlen);
      for (std::size_t i = t; i < end; ++i) out[i * cols + c] = filtered[i - t];
    }
    t = end;
  }
}

inline double step_norm(Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return std::sqrt(dx * dx + dy * dy);
}

inline void speed_player(std::span<const double> coords, std::span<double> out, std::size_t frames,
                         std::size_t players, std::size_t k, double framerate) {
  const std::size_t cols = 2 * players;
  const auto at = [&](std::size_t t) { return Point{coords[t * cols + 2 * k], coords[t * cols + 2 * k + 1]}; };
  for (std::size_t t = 0; t < frames; ++t) {
    double v = kMissing;
    if (frames >= 2 && !at(t).missing()) {
      if (t == 0) {
        if (!at(1).missing()) v = step_norm(at(0), at(1)) * framerate;
      } else if (t == frames - 1) {
        if (!at(t - 1).missing()) v = step_norm(at(t - 1), at(t)) * framerate;
      } else if (!at(t - 1).missing() && !at(t + 1).missing()) {
        v = step_norm(at(t - 1), at(t + 1)) * framerate / 2.0;
      }
    }
    out[t * players + k] = v;
  }
}

inline void rate_column(std::span<const double> values, std::span<double> out, std::size_t frames, std::size_t cols,
                        std::size_t c, double framerate) {
  const auto at = [&](std::size_t t) { return values[t * cols + c]; };
  for (std::size_t t = 0; t < frames; ++t) {
    double r = kMissing;
    if (frames >= 2 && !is_missing(at(t))) {
      if (t == 0) {
        r = (at(1) - at(0)) * framerate;
      } else if (t == frames - 1) {
        r = (at(t) - at(t - 1)) * framerate;
      } else {
        r = (at(t + 1) - at(t - 1)) * framerate / 2.0;
      }
    }
    out[t * cols + c] = r;  // NaN neighbours propagate
  }
}

/// ln-average of template match fractions for window lengths m and m + 1,
/// returned as Phi^m - Phi^{m+1}. Self-matches are counted.
inline double approximate_entropy_series(std::span<const double> u, int m, double r) {
  const std::size_t n = u.size();
  const std::size_t w = static_cast<std::size_t>(m);
  const std::size_t nm = n - w + 1;  // templates of length m
  const std::size_t nm1 = n - w;     // templates of length m + 1
  std::vector<std::size_t> count_m(nm, 0);
  std::vector<std::size_t> count_m1(nm1, 0);
  for (std::size_t i = 0; i < nm; ++i) {
    for (std::size_t j = 0; j < nm; ++j) {
      bool match = true;
      for (std::size_t k = 0; k < w && match; ++k) match = std::abs(u[i + k] - u[j + k]) <= r;
      if (!match) continue;
      ++count_m[i];
      if (i < nm1 && j < nm1 && std::abs(u[i + w] - u[j + w]) <= r) ++count_m1[i];
    }
  }
  double phi_m = 0.0;
  for (std::size_t i = 0; i < nm; ++i) phi_m += std::log(static_cast<double>(count_m[i]) / static_cast<double>(nm));
  phi_m /= static_cast<double>(nm);
  double phi_m1 = 0.0;
  for (std::size_t i = 0; i < nm1; ++i) {
    phi_m1 += std::log(static_cast<double>(count_m1[i]) / static_cast<double>(nm1));
  }
  phi_m1 /= static_cast<double>(nm1);
  return phi_m - phi_m1;
}

inline double running_energy_cost(double es) noexcept {
  return ((((155.4 * es - 30.4) * es - 43.3) * es + 46.3) * es + 19.5) * es + 3.6;
}

inline double metabolic_power_value(double v, double a, double terrain_factor, double gravity) {
  if (is_missing(v) || is_missing(a)) return kMissing;
  const double es = a / gravity;
  const double em = std::sqrt(es * es + 1.0);
  return running_energy_cost(es) * em * terrain_factor * v;
}

}  // namespace tracklight::kernels::detail
