#include "common.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "tracklight/io.hpp"

namespace tracklight::cli::detail {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

OutputFile::OutputFile(const fs::path& path) : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw IoError("cannot write '" + path.string() + "'");
}

void OutputFile::close() {
  out_.close();
  if (!out_) throw IoError("error writing '" + path_.string() + "'");
}

namespace {

void print_report(const io::ParseReport& report, std::ostream& err) {
  err << "rows read: " << report.rows_read << ", rows skipped: " << report.rows_skipped << '\n';
  for (const auto& w : report.warnings) {
    err << "warning: ";
    if (w.line_number) err << "line " << w.line_number << ": ";
    err << w.message << '\n';
  }
}

}  // namespace

Pitch pitch_from_extent(const std::vector<TrackingData>& objects, Unit unit) {
  double lo[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  double hi[2] = {-lo[0], -lo[1]};
  for (const auto& td : objects) {
    for (std::size_t i = 0; i < td.coords().size(); ++i) {
      const double v = td.coords()[i];
      if (is_missing(v)) continue;
      lo[i % 2] = std::min(lo[i % 2], v);
      hi[i % 2] = std::max(hi[i % 2], v);
    }
  }
  Pitch p;
  p.unit = unit;
  p.sport = Sport::Other;
  p.boundedness = Boundedness::Flexible;
  for (int a = 0; a < 2; ++a) {
    if (!(lo[a] <= hi[a])) {
      lo[a] = 0.0;
      hi[a] = 1.0;
    } else if (lo[a] == hi[a]) {
      lo[a] -= 0.5;
      hi[a] += 0.5;
    }
  }
  p.xlim = {lo[0], hi[0]};
  p.ylim = {lo[1], hi[1]};
  return p;
}

LoadedInput load_input(InputKind kind, const std::string& path, const std::optional<Pitch>& pitch,
                       std::ostream& err) {
  LoadedInput in;
  if (kind == InputKind::Sample) {
    auto s = datasets::get_dataset_sample();
    in.objects = {std::move(s.home), std::move(s.away), std::move(s.ball)};
    in.names = {"home", "away", "ball"};
    in.pitch = pitch.value_or(s.pitch);
    return in;
  }

  const std::string text = read_file(path);
  Unit unit = Unit::Meters;
  switch (kind) {
    case InputKind::WideCsv: {
      auto parsed = io::parse_tracking_wide_csv(text);
      print_report(parsed.report, err);
      in.objects.push_back(std::move(parsed.data));
      in.names.push_back("data");
      break;
    }
    case InputKind::LongCsv: {
      auto parsed = io::parse_tracking_long_csv(text);
      print_report(parsed.report, err);
      for (auto& [group, td] : parsed.groups) {
        in.names.push_back(group);
        in.objects.push_back(std::move(td));
      }
      break;
    }
    case InputKind::Dat: {
      auto parsed = io::parse_tracking_dat(text);
      print_report(parsed.report, err);
      in.objects = {std::move(parsed.home), std::move(parsed.away), std::move(parsed.ball)};
      in.names = {"home", "away", "ball"};
      unit = Unit::Centimeters;
      break;
    }
    default:
      throw ArgumentError("input kind cannot be loaded from a file");
  }
  in.pitch = pitch ? *pitch : pitch_from_extent(in.objects, unit);
  return in;
}

std::size_t select(const LoadedInput& input, const std::string& name, const std::string& field) {
  const auto it = std::find(input.names.begin(), input.names.end(), name);
  if (it == input.names.end()) {
    std::string known;
    for (const auto& n : input.names) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError(field, "'" + name + "' not found in input (available: " + known + ")");
  }
  return static_cast<std::size_t>(it - input.names.begin());
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const TransferError& e) {
    err << "transfer error: " << e.what() << '\n';
    return kExitTransfer;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  }
}

}  // namespace tracklight::cli::detail
