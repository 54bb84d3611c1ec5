#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "../io/text.hpp"
#include "tracklight/datasets.hpp"

namespace tracklight::datasets {

using io::detail::parse_real;
using io::detail::split;

namespace {

SegmentFormat parse_format(std::string_view s, std::size_t line) {
  if (s == "wide_csv") return SegmentFormat::WideCsv;
  if (s == "long_csv") return SegmentFormat::LongCsv;
  if (s == "dat") return SegmentFormat::Dat;
  throw FormatError("unknown segment format '" + std::string(s) + "'", line);
}

Pitch parse_pitch(std::string_view s, std::size_t line) {
  const auto f = split(s, ',');
  if (f.size() != 6 && f.size() != 8) {
    throw FormatError("pitch must be xmin,xmax,ymin,ymax,unit,sport[,length,width]", line);
  }
  Pitch p;
  double lim[4];
  for (int i = 0; i < 4; ++i) {
    const auto v = parse_real(f[static_cast<std::size_t>(i)]);
    if (!v) throw FormatError("unparsable pitch limit '" + std::string(f[static_cast<std::size_t>(i)]) + "'", line);
    lim[i] = *v;
  }
  p.xlim = {lim[0], lim[1]};
  p.ylim = {lim[2], lim[3]};
  try {
    p.unit = parse_unit(std::string(f[4]));
    p.sport = parse_sport(std::string(f[5]));
    if (f.size() == 8) {
      const auto length = parse_real(f[6]);
      const auto width = parse_real(f[7]);
      if (!length || !width) throw ArgumentError("unparsable pitch length/width");
      p.length = *length;
      p.width = *width;
    }
    p.validate();
  } catch (const ArgumentError& e) {
    throw FormatError(e.what(), line);
  }
  return p;
}

// Ids become cache path components.
bool is_safe_id(std::string_view s) {
  return !s.empty() && s != "." && s != ".." && s.find_first_of("/\\") == std::string_view::npos;
}

bool is_sha256_hex(std::string_view s) {
  return s.size() == 64 && std::all_of(s.begin(), s.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::vector<DatasetRegistryEntry> parse_registry(std::string_view text) {
  std::vector<DatasetRegistryEntry> entries;
  for (const auto& line : io::detail::split_lines(text)) {
    if (io::detail::is_blank(line.text) || line.text.front() == '#') continue;
    const auto f = split(line.text, '\t');
    if (f.size() != 7) {
      throw FormatError("expected 7 tab-separated fields, got " + std::to_string(f.size()), line.number);
    }
    if (!is_safe_id(f[0]) || !is_safe_id(f[1])) {
      throw FormatError("dataset_id and segment_id must be non-empty and free of path separators", line.number);
    }
    if (f[2].empty()) throw FormatError("empty url", line.number);
    if (!is_sha256_hex(f[3])) throw FormatError("sha256 must be 64 hex characters", line.number);
    const auto framerate = parse_real(f[5]);
    if (!framerate || !(*framerate > 0.0)) throw FormatError("framerate must be a positive number", line.number);

    SegmentSource seg{std::string(f[2]), std::string(f[3]), parse_format(f[4], line.number)};
    std::transform(seg.sha256.begin(), seg.sha256.end(), seg.sha256.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const Pitch pitch = parse_pitch(f[6], line.number);
    const std::string id(f[0]);

    // A dataset is one contiguous block of lines; seeing its id again later is a duplicate.
    if (entries.empty() || entries.back().dataset_id != id) {
      const bool seen = std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.dataset_id == id; });
      if (seen) throw FormatError("duplicate dataset_id '" + id + "'", line.number);
      entries.push_back({id, {}, pitch, *framerate});
    } else if (!(entries.back().pitch == pitch) || entries.back().framerate != *framerate) {
      throw FormatError("dataset_id '" + id + "' redeclared with different framerate or pitch", line.number);
    }
    if (!entries.back().segments.emplace(std::string(f[1]), std::move(seg)).second) {
      throw FormatError("duplicate segment '" + std::string(f[1]) + "' for dataset '" + id + "'", line.number);
    }
  }
  return entries;
}

std::vector<DatasetRegistryEntry> load_registry(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::filesystem::filesystem_error("cannot open registry", path, std::make_error_code(std::errc::io_error));
  return parse_registry(io::detail::slurp(in));
}

const DatasetRegistryEntry& find_dataset(const std::vector<DatasetRegistryEntry>& registry, const std::string& id) {
  for (const auto& e : registry) {
    if (e.dataset_id == id) return e;
  }
  throw LookupError("unknown dataset '" + id + "'");
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("TRACKLIGHT_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "tracklight";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "tracklight";
  }
  return std::filesystem::temp_directory_path() / "tracklight";
}

}  // namespace tracklight::datasets
