#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tracklight/core.hpp"

namespace tracklight::datasets {

enum class SegmentFormat { WideCsv, LongCsv, Dat };

struct SegmentSource {
  std::string url;
  std::string sha256;  // lowercase hex
  SegmentFormat format{SegmentFormat::WideCsv};
};

struct DatasetRegistryEntry {
  std::string dataset_id;
  std::map<std::string, SegmentSource> segments;
  Pitch pitch;
  double framerate{25.0};
};

/// Registry text: one segment per line,
///
///   dataset_id<TAB>segment_id<TAB>url<TAB>sha256<TAB>format<TAB>framerate<TAB>xmin,xmax,ymin,ymax,unit,sport[,length,width]
///
/// `#` starts a comment line. The lines of one dataset are contiguous and must agree
/// on framerate and pitch. Throws FormatError on malformed lines, a repeated
/// (dataset_id, segment_id) pair, a dataset_id that reappears after another
/// dataset, or a dataset_id redeclared with different metadata.
std::vector<DatasetRegistryEntry> parse_registry(std::string_view text);
std::vector<DatasetRegistryEntry> load_registry(const std::filesystem::path& path);

const DatasetRegistryEntry& find_dataset(const std::vector<DatasetRegistryEntry>& registry, const std::string& id);

/// Byte transfer used by fetch_segment. Implementations write the full body of
/// `url` to `destination` or throw TransferError.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual void get(const std::string& url, const std::filesystem::path& destination) = 0;
};

/// HTTP(S) GET via libcurl, following up to 5 redirects, no authentication.
std::unique_ptr<Transport> make_http_transport();

/// Returns `<cache_dir>/<dataset_id>/<segment_id>` with a verified SHA-256. A cached
/// file with the right digest is returned without touching the transport; otherwise
/// the segment is downloaded and verified. Holds an exclusive lock on
/// `<path>.lock` for the duration.
///
/// Throws LookupError for an unknown segment, TransferError when the download
/// fails (cache left as it was), IntegrityError when the downloaded bytes do not
/// match (the cached file is removed).
std::filesystem::path fetch_segment(const DatasetRegistryEntry& entry, const std::string& segment_id,
                                    const std::filesystem::path& cache_dir, Transport& transport);

/// `$TRACKLIGHT_CACHE` if set, else `$XDG_CACHE_HOME/tracklight`, else `~/.cache/tracklight`.
std::filesystem::path default_cache_dir();

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

struct Sample {
  TrackingData home;
  TrackingData away;
  TrackingData ball;
  Pitch pitch;
};

/// Synthetic handball segment shipped with the library: 7 + 7 players and the
/// ball, 1200 frames at 20 fps on a 40 x 20 m pitch, with a few missing stretches
/// in every object. Generated from closed-form motion, identical on every call.
Sample get_dataset_sample();

}  // namespace tracklight::datasets
