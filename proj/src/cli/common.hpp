#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracklight/cli.hpp"

namespace tracklight::cli::detail {

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

/// Opens `path` for writing; throws IoError when that is impossible.
class OutputFile {
 public:
  explicit OutputFile(const std::filesystem::path& path);
  std::ostream& stream() { return out_; }
  void close();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

struct LoadedInput {
  std::vector<TrackingData> objects;  // every team / group found in the source
  std::vector<std::string> names;     // parallel to objects
  Pitch pitch;
};

/// Loads `kind` from `path` (or the bundled sample) and reports parse diagnostics to `err`.
LoadedInput load_input(InputKind kind, const std::string& path, const std::optional<Pitch>& pitch,
                       std::ostream& err);

/// Index of `name` in input.names; throws ConfigError(field) when absent.
std::size_t select(const LoadedInput& input, const std::string& name, const std::string& field);

/// Maps the in-flight exception to an exit code and prints it to `err`.
int exit_code_for_current_exception(std::ostream& err);

/// Bounding box of all non-missing samples, 'other' sport.
Pitch pitch_from_extent(const std::vector<TrackingData>& objects, Unit unit);

}  // namespace tracklight::cli::detail
