#pragma once

// Command-line front end. Exit codes:
//   0 success, 1 format/config/argument error, 2 I/O error,
//   3 dataset integrity error, 4 dataset transfer error.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tracklight/core.hpp"
#include "tracklight/datasets.hpp"
#include "tracklight/transforms.hpp"

namespace tracklight::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFormat = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitIntegrity = 3;
inline constexpr int kExitTransfer = 4;

/// Invalid pipeline configuration; what() starts with the offending key.
class ConfigError : public ArgumentError {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : ArgumentError(field + ": " + message), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class InputKind { Sample, WideCsv, LongCsv, Dat, Dataset };
enum class ModelKind { Distance, Velocity, Acceleration, MetabolicPower, Centroid, ApproximateEntropy };
enum class OutputKind { Csv, Svg, Summary };

struct PipelineConfig {
  InputKind input{InputKind::Sample};
  std::string path;
  std::string team{"home"};  // sample / dat inputs: home, away or ball
  std::string group;         // long inputs: group id (optional when only one)
  std::string registry, dataset, segment;
  std::optional<Pitch> pitch;

  std::optional<FilterSpec> filter;

  ModelKind model{ModelKind::MetabolicPower};
  double terrain_factor{1.0};
  int embedding{2};
  std::optional<double> tolerance;
  std::string signal{"velocity"};  // approximate_entropy input: velocity, acceleration, x, y

  OutputKind output{OutputKind::Summary};
  std::string output_path;
};

/// `section.key = value` lines; `#` comments and blank lines ignored.
///
///   input.kind    sample | wide_csv | long_csv | dat | dataset
///   input.path    file for wide_csv / long_csv / dat
///   input.team    home | away | ball            (sample, dat, dataset with dat segments)
///   input.group   group id                      (long_csv)
///   input.registry, input.dataset, input.segment (dataset)
///   input.pitch   xmin,xmax,ymin,ymax,unit,sport[,length,width]
///   filter.enabled true | false ; filter.order ; filter.cutoff_hz
///   model.name    distance | velocity | acceleration | metabolic_power | centroid | approximate_entropy
///   model.terrain_factor ; model.m ; model.r ; model.signal
///   output.kind   csv | svg | summary ; output.path
///
/// Any filter.* key enables the filter unless filter.enabled = false.
/// Throws ConfigError naming the key.
PipelineConfig parse_pipeline_config(std::string_view text);

/// Parses `xmin,xmax,ymin,ymax,unit,sport[,length,width]`; throws ArgumentError.
Pitch parse_pitch_spec(std::string_view text);

struct Context {
  /// Transport for dataset downloads; null selects HTTP.
  datasets::Transport* transport{nullptr};
};

/// load -> optional low-pass -> fit -> query -> write. Results go to `out`
/// (summary) or the configured file, diagnostics to `err`.
int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err, const Context& ctx = {});

/// Full command line: `parse`, `pipeline`, `plot`, `dataset` subcommands.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Context& ctx = {});

/// Fixed three-decimal rendering used by summaries.
std::string format3(double v);

}  // namespace tracklight::cli
