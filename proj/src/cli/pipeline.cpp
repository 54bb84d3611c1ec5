#include <charconv>
#include <map>
#include <set>

#include "../io/text.hpp"
#include "common.hpp"
#include "tracklight/io.hpp"
#include "tracklight/models.hpp"
#include "tracklight/vis.hpp"

namespace tracklight::cli {

using io::detail::parse_int;
using io::detail::parse_real;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

const std::set<std::string, std::less<>> kKeys = {
    "input.kind",     "input.path",      "input.team",       "input.group",          "input.registry",
    "input.dataset",  "input.segment",   "input.pitch",      "filter.enabled",       "filter.order",
    "filter.cutoff_hz", "model.name",    "model.terrain_factor", "model.m",          "model.r",
    "model.signal",   "output.kind",     "output.path"};

template <typename E>
E parse_choice(const std::map<std::string, E, std::less<>>& choices, const std::string& key, std::string_view v) {
  const auto it = choices.find(v);
  if (it != choices.end()) return it->second;
  std::string names;
  for (const auto& [n, _] : choices) names += (names.empty() ? "" : " | ") + n;
  throw ConfigError(key, "invalid value '" + std::string(v) + "' (expected " + names + ")");
}

double positive_real(const std::string& key, std::string_view v) {
  const auto r = parse_real(v);
  if (!r || !(*r > 0.0)) throw ConfigError(key, "expected a positive number, got '" + std::string(v) + "'");
  return *r;
}

int positive_int(const std::string& key, std::string_view v) {
  const auto i = parse_int(v);
  if (!i || *i < 1 || *i > 64) throw ConfigError(key, "expected an integer in [1, 64], got '" + std::string(v) + "'");
  return static_cast<int>(*i);
}

double finite_mean(std::span<const double> values) {
  double sum = 0.0;
  std::size_t n = 0;
  for (double v : values) {
    if (is_missing(v)) continue;
    sum += v;
    ++n;
  }
  return n ? sum / static_cast<double>(n) : kMissing;
}

std::string format3_or_na(double v) { return is_missing(v) ? "NA" : format3(v); }

void write_player_summary(const PlayerProperty& prop, bool last_row, std::ostream& out) {
  for (std::size_t k = 0; k < prop.players(); ++k) {
    double v = kMissing;
    if (last_row) {
      if (prop.frames() > 0) v = prop.at(prop.frames() - 1, k);
    } else {
      v = finite_mean(prop.column(k));
    }
    out << prop.player_ids()[k] << ' ' << format3_or_na(v) << '\n';
  }
}

PlayerProperty coordinate_property(const TrackingData& td, int axis) {
  std::vector<double> v(td.frames() * td.players());
  for (std::size_t t = 0; t < td.frames(); ++t) {
    for (std::size_t k = 0; k < td.players(); ++k) v[t * td.players() + k] = td.at(t, 2 * k + axis);
  }
  return PlayerProperty(std::move(v), td.frames(), td.player_ids(), axis ? "y" : "x", "m", td.framerate());
}

}  // namespace

std::string format3(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  std::string s(buf, ptr);
  if (s == "-0.000") s = "0.000";
  return s;
}

Pitch parse_pitch_spec(std::string_view text) {
  const auto f = io::detail::split(text, ',');
  if (f.size() != 6 && f.size() != 8) throw ArgumentError("pitch must be xmin,xmax,ymin,ymax,unit,sport[,length,width]");
  double v[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const auto r = parse_real(trim(f[i]));
    if (!r) throw ArgumentError("unparsable pitch limit '" + std::string(f[i]) + "'");
    v[i] = *r;
  }
  Pitch p;
  p.xlim = {v[0], v[1]};
  p.ylim = {v[2], v[3]};
  p.unit = parse_unit(std::string(trim(f[4])));
  p.sport = parse_sport(std::string(trim(f[5])));
  if (f.size() == 8) {
    const auto l = parse_real(trim(f[6]));
    const auto w = parse_real(trim(f[7]));
    if (!l || !w) throw ArgumentError("unparsable pitch length/width");
    p.length = *l;
    p.width = *w;
  }
  p.validate();
  return p;
}

PipelineConfig parse_pipeline_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  for (const auto& line : io::detail::split_lines(text)) {
    const auto s = trim(line.text);
    if (s.empty() || s.front() == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line.number), "expected 'section.key = value'");
    }
    const std::string key(trim(s.substr(0, eq)));
    const std::string value(trim(s.substr(eq + 1)));
    if (!kKeys.contains(key)) throw ConfigError(key, "unknown key");
    if (!kv.emplace(key, value).second) throw ConfigError(key, "set more than once");
  }
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  PipelineConfig c;
  if (const auto* v = get("input.kind")) {
    c.input = parse_choice<InputKind>({{"sample", InputKind::Sample},
                                       {"wide_csv", InputKind::WideCsv},
                                       {"long_csv", InputKind::LongCsv},
                                       {"dat", InputKind::Dat},
                                       {"dataset", InputKind::Dataset}},
                                      "input.kind", *v);
  }
  if (const auto* v = get("input.path")) c.path = *v;
  if (const auto* v = get("input.team")) {
    if (*v != "home" && *v != "away" && *v != "ball") throw ConfigError("input.team", "expected home | away | ball");
    c.team = *v;
  }
  if (const auto* v = get("input.group")) c.group = *v;
  if (const auto* v = get("input.registry")) c.registry = *v;
  if (const auto* v = get("input.dataset")) c.dataset = *v;
  if (const auto* v = get("input.segment")) c.segment = *v;
  if (const auto* v = get("input.pitch")) {
    try {
      c.pitch = parse_pitch_spec(*v);
    } catch (const ArgumentError& e) {
      throw ConfigError("input.pitch", e.what());
    }
  }
  const bool file_input = c.input == InputKind::WideCsv || c.input == InputKind::LongCsv || c.input == InputKind::Dat;
  if (file_input && c.path.empty()) throw ConfigError("input.path", "required for this input.kind");
  if (c.input == InputKind::Dataset) {
    for (const char* key : {"input.registry", "input.dataset", "input.segment"}) {
      if (!get(key) || get(key)->empty()) throw ConfigError(key, "required for input.kind = dataset");
    }
  }

  bool filter = get("filter.order") || get("filter.cutoff_hz");
  if (const auto* v = get("filter.enabled")) {
    if (*v != "true" && *v != "false") throw ConfigError("filter.enabled", "expected true | false");
    filter = *v == "true";
  }
  if (filter) {
    FilterSpec spec;
    if (const auto* v = get("filter.order")) spec.order = positive_int("filter.order", *v);
    if (const auto* v = get("filter.cutoff_hz")) spec.cutoff_hz = positive_real("filter.cutoff_hz", *v);
    c.filter = spec;
  }

  if (const auto* v = get("model.name")) {
    c.model = parse_choice<ModelKind>({{"distance", ModelKind::Distance},
                                       {"velocity", ModelKind::Velocity},
                                       {"acceleration", ModelKind::Acceleration},
                                       {"metabolic_power", ModelKind::MetabolicPower},
                                       {"centroid", ModelKind::Centroid},
                                       {"approximate_entropy", ModelKind::ApproximateEntropy}},
                                      "model.name", *v);
  }
  if (const auto* v = get("model.terrain_factor")) c.terrain_factor = positive_real("model.terrain_factor", *v);
  if (const auto* v = get("model.m")) c.embedding = positive_int("model.m", *v);
  if (const auto* v = get("model.r")) c.tolerance = positive_real("model.r", *v);
  if (const auto* v = get("model.signal")) {
    if (*v != "velocity" && *v != "acceleration" && *v != "x" && *v != "y") {
      throw ConfigError("model.signal", "expected velocity | acceleration | x | y");
    }
    c.signal = *v;
  }

  if (const auto* v = get("output.kind")) {
    c.output = parse_choice<OutputKind>(
        {{"csv", OutputKind::Csv}, {"svg", OutputKind::Svg}, {"summary", OutputKind::Summary}}, "output.kind", *v);
  }
  if (const auto* v = get("output.path")) c.output_path = *v;
  if (c.output != OutputKind::Summary && c.output_path.empty()) {
    throw ConfigError("output.path", "required for csv and svg output");
  }
  return c;
}

int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err, const Context& ctx) {
  try {
    InputKind kind = config.input;
    std::string path = config.path;
    std::optional<Pitch> pitch = config.pitch;

    if (kind == InputKind::Dataset) {
      const auto registry = datasets::load_registry(config.registry);
      const auto& entry = datasets::find_dataset(registry, config.dataset);
      std::unique_ptr<datasets::Transport> owned;
      datasets::Transport* transport = ctx.transport;
      if (!transport) {
        owned = datasets::make_http_transport();
        transport = owned.get();
      }
      path = datasets::fetch_segment(entry, config.segment, datasets::default_cache_dir(), *transport).string();
      switch (entry.segments.at(config.segment).format) {
        case datasets::SegmentFormat::WideCsv: kind = InputKind::WideCsv; break;
        case datasets::SegmentFormat::LongCsv: kind = InputKind::LongCsv; break;
        case datasets::SegmentFormat::Dat: kind = InputKind::Dat; break;
      }
      if (!pitch) pitch = entry.pitch;
    }

    const auto input = detail::load_input(kind, path, pitch, err);
    std::size_t index = 0;
    if (kind == InputKind::Sample || kind == InputKind::Dat) {
      index = detail::select(input, config.team, "input.team");
    } else if (kind == InputKind::LongCsv) {
      if (!config.group.empty()) {
        index = detail::select(input, config.group, "input.group");
      } else if (input.objects.size() != 1) {
        throw ConfigError("input.group", "required when the input has " + std::to_string(input.objects.size()) +
                                             " groups");
      }
    }
    TrackingData td = input.objects.at(index);
    if (config.filter) td = butterworth_lowpass(td, *config.filter);

    // Results, filled per model.
    std::optional<PlayerProperty> series;  // csv body
    bool summary_last_row = false;         // cumulative quantities report their final value
    std::optional<TrackingData> overlay;   // extra object drawn in svg output
    std::vector<std::string> summary;      // lines for models with non-player summaries

    switch (config.model) {
      case ModelKind::Distance: {
        models::DistanceModel m;
        m.fit(td);
        series = m.cumulative_distance();
        summary_last_row = true;
        break;
      }
      case ModelKind::Velocity: {
        models::VelocityModel m;
        m.fit(td);
        series = m.velocity();
        break;
      }
      case ModelKind::Acceleration: {
        models::AccelerationModel m;
        m.fit(td);
        series = m.acceleration();
        break;
      }
      case ModelKind::MetabolicPower: {
        models::MetabolicPowerModel m;
        m.fit(td, {config.terrain_factor});
        series = m.cumulative_metabolic_power();
        summary_last_row = true;
        break;
      }
      case ModelKind::Centroid: {
        models::CentroidModel m;
        m.fit(td);
        overlay = m.centroid();
        const auto& c = m.centroid();
        std::vector<double> table(c.frames() * 3);
        for (std::size_t t = 0; t < c.frames(); ++t) {
          table[3 * t] = c.at(t, 0);
          table[3 * t + 1] = c.at(t, 1);
          table[3 * t + 2] = m.stretch_index().at(t, 0);
        }
        series = PlayerProperty(std::move(table), c.frames(), {"centroid_x", "centroid_y", "stretch_index"},
                                "centroid", "m", c.framerate());
        summary.push_back("stretch_index_mean " + format3_or_na(finite_mean(m.stretch_index().values())));
        break;
      }
      case ModelKind::ApproximateEntropy: {
        PlayerProperty signal;
        if (config.signal == "velocity") {
          models::VelocityModel v;
          v.fit(td);
          signal = v.velocity();
        } else if (config.signal == "acceleration") {
          models::AccelerationModel a;
          a.fit(td);
          signal = a.acceleration();
        } else {
          signal = coordinate_property(td, config.signal == "y" ? 1 : 0);
        }
        models::ApproximateEntropyModel m;
        m.fit(signal, config.embedding, config.tolerance);
        const auto& apen = m.approximate_entropy();
        series = PlayerProperty(apen, 1, td.player_ids(), "approximate_entropy", "", td.framerate());
        summary_last_row = true;
        break;
      }
    }

    switch (config.output) {
      case OutputKind::Summary:
        if (!summary.empty()) {
          for (const auto& line : summary) out << line << '\n';
        } else {
          write_player_summary(*series, summary_last_row, out);
        }
        break;
      case OutputKind::Csv: {
        detail::OutputFile file(config.output_path);
        io::write_property_csv(*series, file.stream());
        file.close();
        break;
      }
      case OutputKind::Svg: {
        std::vector<TrackingData> objects{td};
        if (overlay) objects.push_back(*overlay);
        detail::OutputFile file(config.output_path);
        file.stream() << vis::render_trajectories(input.pitch, objects, 0, td.frames());
        file.close();
        break;
      }
    }
    return kExitOk;
  } catch (...) {
    return detail::exit_code_for_current_exception(err);
  }
}

}  // namespace tracklight::cli
