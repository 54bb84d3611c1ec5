#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>

#include "common.hpp"
#include "tracklight/io.hpp"
#include "tracklight/vis.hpp"

namespace tracklight::cli {

namespace fs = std::filesystem;

namespace {

InputKind kind_from_flag(const std::string& format) {
  if (format == "wide") return InputKind::WideCsv;
  if (format == "long") return InputKind::LongCsv;
  if (format == "dat") return InputKind::Dat;
  throw ArgumentError("--format must be wide, long or dat");
}

// Column-wise concatenation of objects sharing a time base; ids become `<name>.<id>`
// except for single-player objects, which keep the object name.
TrackingData merge_objects(const detail::LoadedInput& in) {
  const std::size_t frames = in.objects.front().frames();
  std::vector<std::string> ids;
  std::size_t players = 0;
  for (std::size_t i = 0; i < in.objects.size(); ++i) {
    const auto& td = in.objects[i];
    for (const auto& id : td.player_ids()) {
      ids.push_back(td.players() == 1 && id == in.names[i] ? id : in.names[i] + "." + id);
    }
    players += td.players();
  }
  std::vector<double> coords(frames * players * 2);
  std::size_t offset = 0;
  for (const auto& td : in.objects) {
    for (std::size_t t = 0; t < frames; ++t) {
      std::copy_n(td.coords().data() + t * td.columns(), td.columns(), coords.data() + t * players * 2 + offset);
    }
    offset += td.columns();
  }
  return TrackingData(std::move(coords), frames, in.objects.front().framerate(), std::move(ids));
}

void write_wide(const TrackingData& td, const fs::path& path) {
  detail::OutputFile file(path);
  io::write_tracking_wide_csv(td, file.stream());
  file.close();
}

int cmd_parse(const std::string& format, const std::string& input, const std::string& output, std::ostream& err) {
  try {
    const InputKind kind = kind_from_flag(format);
    auto loaded = detail::load_input(kind, input, std::nullopt, err);
    if (kind == InputKind::Dat) {
      write_wide(merge_objects(loaded), output);
    } else if (loaded.objects.size() == 1) {
      write_wide(loaded.objects.front(), output);
    } else {
      const fs::path out(output);
      for (std::size_t i = 0; i < loaded.objects.size(); ++i) {
        fs::path target = out.parent_path() / (out.stem().string() + "." + loaded.names[i] + out.extension().string());
        write_wide(loaded.objects[i], target);
      }
    }
    return kExitOk;
  } catch (...) {
    return detail::exit_code_for_current_exception(err);
  }
}

int cmd_pipeline(const std::string& config_path, std::ostream& out, std::ostream& err, const Context& ctx) {
  PipelineConfig config;
  try {
    config = parse_pipeline_config(detail::read_file(config_path));
  } catch (...) {
    return detail::exit_code_for_current_exception(err);
  }
  return run_pipeline(config, out, err, ctx);
}

struct PlotArgs {
  std::string input;
  std::string format;
  std::string team;
  std::string mode{"positions"};
  std::size_t frame{0};
  std::size_t from{0};
  std::optional<std::size_t> to;
  std::string output;
  std::string pitch;
  std::string target_pitch;
};

int cmd_plot(const PlotArgs& a, std::ostream& err) {
  try {
    std::optional<Pitch> pitch;
    if (!a.pitch.empty()) pitch = parse_pitch_spec(a.pitch);
    InputKind kind = InputKind::Sample;
    if (a.input != "sample") {
      if (a.format.empty()) throw ArgumentError("--format is required unless --input is 'sample'");
      kind = kind_from_flag(a.format);
    }
    auto loaded = detail::load_input(kind, a.input, pitch, err);

    std::vector<TrackingData> objects;
    if (a.team.empty()) {
      objects = loaded.objects;
    } else {
      objects.push_back(loaded.objects[detail::select(loaded, a.team, "--team")]);
    }
    Pitch target = loaded.pitch;
    if (!a.target_pitch.empty()) {
      target = parse_pitch_spec(a.target_pitch);
      for (auto& td : objects) td = rescale_to_pitch(td, loaded.pitch, target);
    }

    std::string svg;
    if (a.mode == "positions") {
      svg = vis::render_positions(target, objects, a.frame);
    } else if (a.mode == "trajectories") {
      svg = vis::render_trajectories(target, objects, a.from, a.to.value_or(objects.front().frames()));
    } else {
      throw ArgumentError("--mode must be positions or trajectories");
    }
    detail::OutputFile file(a.output);
    file.stream() << svg;
    file.close();
    return kExitOk;
  } catch (...) {
    return detail::exit_code_for_current_exception(err);
  }
}

int cmd_dataset(const std::string& registry_path, const std::string& dataset, const std::string& segment,
                std::ostream& out, std::ostream& err, const Context& ctx) {
  try {
    const auto registry = datasets::load_registry(registry_path);
    const auto& entry = datasets::find_dataset(registry, dataset);
    std::unique_ptr<datasets::Transport> owned;
    datasets::Transport* transport = ctx.transport;
    if (!transport) {
      owned = datasets::make_http_transport();
      transport = owned.get();
    }
    out << datasets::fetch_segment(entry, segment, datasets::default_cache_dir(), *transport).string() << '\n';
    return kExitOk;
  } catch (...) {
    return detail::exit_code_for_current_exception(err);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Context& ctx) {
  CLI::App app{"Team-sport tracking data toolkit", "tracklight"};
  app.require_subcommand(1);

  std::string format, input, output;
  auto* parse = app.add_subcommand("parse", "Convert a tracking file to wide CSV");
  parse->add_option("--format", format, "wide | long | dat")->required();
  parse->add_option("--input", input, "Input file")->required();
  parse->add_option("--output", output, "Output CSV; several long-format groups write <stem>.<group><ext>")
      ->required();

  std::string config_path;
  auto* pipeline = app.add_subcommand("pipeline", "Run a load/filter/fit/query pipeline");
  pipeline->add_option("--config", config_path, "Config file with section.key = value lines")->required();

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render positions or trajectories as SVG");
  plot->add_option("--input", plot_args.input, "Input file, or 'sample' for the bundled segment")->required();
  plot->add_option("--format", plot_args.format, "wide | long | dat");
  plot->add_option("--team", plot_args.team, "Only this team / group (default: all)");
  plot->add_option("--mode", plot_args.mode, "positions | trajectories")->capture_default_str();
  plot->add_option("--frame", plot_args.frame, "Frame for positions")->capture_default_str();
  plot->add_option("--from", plot_args.from, "First frame for trajectories")->capture_default_str();
  plot->add_option("--to", plot_args.to, "One past the last frame for trajectories (default: end)");
  plot->add_option("--output", plot_args.output, "Output SVG")->required();
  plot->add_option("--pitch", plot_args.pitch, "Source pitch xmin,xmax,ymin,ymax,unit,sport[,length,width]");
  plot->add_option("--target-pitch", plot_args.target_pitch, "Rescale onto this pitch before rendering");

  std::string registry, dataset, segment;
  auto* ds = app.add_subcommand("dataset", "Fetch and verify a registered dataset segment");
  ds->add_option("--registry", registry, "Registry file")->required();
  ds->add_option("--dataset", dataset, "Dataset id")->required();
  ds->add_option("--segment", segment, "Segment id")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFormat;
  }

  if (parse->parsed()) return cmd_parse(format, input, output, err);
  if (pipeline->parsed()) return cmd_pipeline(config_path, out, err, ctx);
  if (plot->parsed()) return cmd_plot(plot_args, err);
  return cmd_dataset(registry, dataset, segment, out, err, ctx);
}

}  // namespace tracklight::cli
