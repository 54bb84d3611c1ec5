#pragma once

// Shared helpers for the unit and acceptance tests: seeded generators, a tiny
// XML well-formedness checker and scratch directories.

#include <unistd.h>

#include <cmath>
#include <cstring>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tracklight/core.hpp"

namespace tracklight::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::uint8_t byte() { return static_cast<std::uint8_t>(rng_() & 0xff); }
  std::mt19937_64& engine() { return rng_; }

  // Arbitrary finite double, including tiny, huge and negative-zero values.
  double any_finite() {
    switch (index(0, 5)) {
      case 0: return real(-1e3, 1e3);
      case 1: return std::ldexp(real(-1.0, 1.0), static_cast<int>(index(0, 2000)) - 1000);
      case 2: return static_cast<double>(static_cast<std::int64_t>(index(0, 200000)) - 100000) / 8.0;
      case 3: return -0.0;
      case 4: return std::nextafter(real(-10, 10), 0.0);
      default: return real(-1e-6, 1e-6);
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<std::string> player_ids(std::size_t n, const std::string& prefix = "p") {
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < n; ++k) ids.push_back(prefix + std::to_string(k));
  return ids;
}

/// Random tracking data; `missing_rate` of samples are missing.
inline TrackingData random_tracking(Gen& g, std::size_t frames, std::size_t players, double framerate,
                                    double missing_rate, bool any_values = false) {
  std::vector<double> c(frames * players * 2);
  for (std::size_t i = 0; i < c.size(); i += 2) {
    if (g.chance(missing_rate)) {
      c[i] = c[i + 1] = kMissing;
    } else {
      c[i] = any_values ? g.any_finite() : g.real(-50.0, 50.0);
      c[i + 1] = any_values ? g.any_finite() : g.real(-50.0, 50.0);
    }
  }
  return TrackingData(std::move(c), frames, framerate, player_ids(players));
}

/// Tracking data from a function of (frame, player) -> Point.
template <typename F>
TrackingData make_tracking(std::size_t frames, std::size_t players, double framerate, F&& f) {
  std::vector<double> c(frames * players * 2);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t k = 0; k < players; ++k) {
      const Point p = f(t, k);
      c[(t * players + k) * 2] = p.x;
      c[(t * players + k) * 2 + 1] = p.y;
    }
  }
  return TrackingData(std::move(c), frames, framerate, player_ids(players));
}

inline bool same_bits(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || std::memcmp(&a, &b, sizeof a) == 0;
}

inline bool same_mask(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isnan(a[i]) != std::isnan(b[i])) return false;
  }
  return true;
}

/// Max |a - b| over entries non-missing in both; infinity when the masks differ.
inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (!same_mask(a, b)) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isnan(a[i])) m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

/// Checks tag nesting, attribute quoting and entity syntax; enough for the
/// documents the renderer emits. Returns an empty string when well-formed.
inline std::string xml_problem(std::string_view doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  const auto name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.';
  };
  const auto check_text = [&](std::string_view text) -> std::string {
    for (std::size_t k = 0; k < text.size(); ++k) {
      if (text[k] == '<') return "stray '<'";
      if (text[k] == '&') {
        const auto semi = text.find(';', k);
        if (semi == std::string_view::npos) return "unterminated entity";
        const auto ent = text.substr(k + 1, semi - k - 1);
        if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos" && (ent.empty() || ent[0] != '#')) {
          return "unknown entity";
        }
      }
    }
    return {};
  };
  while (i < doc.size()) {
    const auto lt = doc.find('<', i);
    const auto text = doc.substr(i, lt == std::string_view::npos ? std::string_view::npos : lt - i);
    if (auto p = check_text(text); !p.empty()) return p;
    if (stack.empty() && text.find_first_not_of(" \t\r\n") != std::string_view::npos) return "text outside root";
    if (lt == std::string_view::npos) break;
    if (doc.substr(lt, 5) == "<?xml") {
      const auto end = doc.find("?>", lt);
      if (end == std::string_view::npos || lt != 0) return "bad xml declaration";
      i = end + 2;
      continue;
    }
    if (doc.substr(lt, 4) == "<!--") {
      const auto end = doc.find("-->", lt);
      if (end == std::string_view::npos) return "unterminated comment";
      i = end + 3;
      continue;
    }
    const auto gt = doc.find('>', lt);
    if (gt == std::string_view::npos) return "unterminated tag";
    std::string_view tag = doc.substr(lt + 1, gt - lt - 1);
    if (!tag.empty() && tag[0] == '/') {
      const std::string name(tag.substr(1));
      if (stack.empty() || stack.back() != name) return "mismatched close tag </" + name + ">";
      stack.pop_back();
      i = gt + 1;
      continue;
    }
    const bool self_closing = !tag.empty() && tag.back() == '/';
    if (self_closing) tag.remove_suffix(1);
    std::size_t k = 0;
    while (k < tag.size() && name_char(tag[k])) ++k;
    if (k == 0) return "empty tag name";
    const std::string name(tag.substr(0, k));
    std::vector<std::string> attrs;
    while (k < tag.size()) {
      if (std::isspace(static_cast<unsigned char>(tag[k]))) {
        ++k;
        continue;
      }
      const auto a0 = k;
      while (k < tag.size() && name_char(tag[k])) ++k;
      if (k == a0) return "bad attribute in <" + name + ">";
      const std::string attr(tag.substr(a0, k - a0));
      for (const auto& seen : attrs) {
        if (seen == attr) return "duplicate attribute " + attr;
      }
      attrs.push_back(attr);
      if (k >= tag.size() || tag[k] != '=') return "attribute without value in <" + name + ">";
      ++k;
      if (k >= tag.size() || (tag[k] != '"' && tag[k] != '\'')) return "unquoted attribute in <" + name + ">";
      const char q = tag[k++];
      const auto close = tag.find(q, k);
      if (close == std::string_view::npos) return "unterminated attribute value";
      if (auto p = check_text(tag.substr(k, close - k)); !p.empty()) return p;
      k = close + 1;
    }
    if (stack.empty()) {
      if (root_seen) return "second root element";
      root_seen = true;
    }
    if (!self_closing) stack.push_back(name);
    i = gt + 1;
  }
  if (!stack.empty()) return "unclosed <" + stack.back() + ">";
  if (!root_seen) return "no root element";
  return {};
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("tracklight-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tracklight::test
