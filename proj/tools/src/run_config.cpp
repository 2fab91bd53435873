#include "mcbdqm_cli/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "mcbdqm/errors.hpp"
#include "mcbdqm/ssp_rk54.hpp"

namespace mcbdqm::cli {

std::string_view to_string(OutputFormat format) noexcept {
  return format == OutputFormat::Json ? "json" : "csv";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ArgumentError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

ExampleDefaults example_defaults(int example) {
  switch (example) {
    case 1:
      return {-1.0, 1.0, 0.04, 1e-4, 1.0, 0.0};
    case 2:
      return {-3.0, 3.0, 0.04, 1e-4, 1.0, 0.5};
    case 3:
      return {-10.0, 10.0, 0.01, 1e-3, 20.0, 0.5};
    default:
      throw ArgumentError("unknown example " + std::to_string(example) + " (expected 1, 2 or 3)");
  }
}

ProblemSpec ResolvedRun::problem() const {
  return make_example(example, c, std::make_pair(a, b));
}

UniformGrid ResolvedRun::grid() const { return UniformGrid::with_spacing(a, b, h); }

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw ArgumentError(std::string(name) + " must be finite");
  }
}

}  // namespace

ResolvedRun resolve(const RunConfig& config) {
  const ExampleDefaults defaults = example_defaults(config.example);
  ResolvedRun run;
  run.example = config.example;
  run.a = config.domain ? config.domain->first : defaults.a;
  run.b = config.domain ? config.domain->second : defaults.b;
  run.h = config.h.value_or(defaults.h);
  run.dt = config.dt.value_or(defaults.dt);
  run.t_end = config.t_end.value_or(defaults.t_end);
  run.c = config.c.value_or(defaults.c);
  run.w2_method = config.w2_method;
  run.rms_mode = config.rms_mode;
  run.staging = config.staging;
  run.out = config.out;
  run.format = config.format;
  run.surface_levels = config.surface_levels;
  run.gnuplot = config.gnuplot;

  require_finite(run.a, "domain start");
  require_finite(run.b, "domain end");
  require_finite(run.h, "h");
  require_finite(run.dt, "dt");
  require_finite(run.t_end, "t_end");
  require_finite(run.c, "c");
  if (!(run.a < run.b)) throw ArgumentError("domain must satisfy a < b");
  if (!(run.h > 0.0)) throw ArgumentError("h must be positive");
  if (!(run.dt > 0.0)) throw ArgumentError("dt must be positive");
  if (!(run.t_end >= 0.0)) throw ArgumentError("t_end must be non-negative");
  (void)run.grid();
  try {
    (void)run.problem();
  } catch (const ParameterError& e) {
    throw ArgumentError(e.what());
  }

  for (double t : config.snapshot_times) {
    if (!std::isfinite(t) || t < 0.0 || t > run.t_end) {
      throw ArgumentError("snapshot time " + std::to_string(t) + " is outside [0, t_end]");
    }
    run.snapshot_times.push_back(t);
  }
  run.snapshot_times.push_back(run.t_end);
  std::sort(run.snapshot_times.begin(), run.snapshot_times.end());
  run.snapshot_times.erase(std::unique(run.snapshot_times.begin(), run.snapshot_times.end()),
                           run.snapshot_times.end());
  return run;
}

void apply_json(RunConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ArgumentError("config document must be a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "example") {
        config.example = value.get<int>();
      } else if (key == "domain") {
        const auto ends = value.get<std::vector<double>>();
        if (ends.size() != 2) throw ArgumentError("config 'domain' must hold two numbers");
        config.domain = std::make_pair(ends[0], ends[1]);
      } else if (key == "h") {
        config.h = value.get<double>();
      } else if (key == "dt") {
        config.dt = value.get<double>();
      } else if (key == "t_end") {
        config.t_end = value.get<double>();
      } else if (key == "c") {
        config.c = value.get<double>();
      } else if (key == "w2_method") {
        config.w2_method = parse_second_derivative_method(value.get<std::string>());
      } else if (key == "rms_mode") {
        config.rms_mode = parse_rms_mode(value.get<std::string>());
      } else if (key == "bc_staging") {
        config.staging = parse_boundary_staging(value.get<std::string>());
      } else if (key == "snapshot_times") {
        config.snapshot_times = value.get<std::vector<double>>();
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else if (key == "format") {
        config.format = parse_output_format(value.get<std::string>());
      } else if (key == "surface_levels") {
        config.surface_levels = value.get<std::size_t>();
      } else if (key == "gnuplot") {
        config.gnuplot = value.get<bool>();
      } else {
        throw ArgumentError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("config type error: ") + e.what());
  }
}

void apply_json_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  apply_json(config, doc);
}

nlohmann::ordered_json to_json(const ResolvedRun& run) {
  nlohmann::ordered_json j;
  j["example"] = run.example;
  j["domain"] = {run.a, run.b};
  j["h"] = run.h;
  j["n"] = run.grid().size();
  j["dt"] = run.dt;
  j["t_end"] = run.t_end;
  j["c"] = run.c;
  j["w2_method"] = std::string(to_string(run.w2_method));
  j["rms_mode"] = std::string(to_string(run.rms_mode));
  j["bc_staging"] = std::string(to_string(run.staging));
  j["tableau"] = std::string(SspRk54Tableau::optimal().source);
  j["snapshot_times"] = run.snapshot_times;
  return j;
}

}  // namespace mcbdqm::cli
