#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcbdqm/dq_weights.hpp"
#include "mcbdqm/metrics.hpp"
#include "mcbdqm/sine_gordon.hpp"

namespace mcbdqm::cli {

enum class OutputFormat { Csv, Json };

std::string_view to_string(OutputFormat format) noexcept;
/// "csv" or "json". Throws ArgumentError.
OutputFormat parse_output_format(std::string_view text);

/// Parameters of one run as given by the user; unset fields take the
/// example's defaults.
struct RunConfig {
  int example = 1;
  std::optional<std::pair<double, double>> domain;
  std::optional<double> h;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<double> c;
  SecondDerivativeMethod w2_method = SecondDerivativeMethod::ShuRecurrence;
  RmsMode rms_mode = RmsMode::Conventional;
  BoundaryStaging staging = BoundaryStaging::PerStage;
  std::vector<double> snapshot_times;
  /// Output directory; nothing is written to disk when unset.
  std::optional<std::filesystem::path> out;
  OutputFormat format = OutputFormat::Csv;
  /// Number of time intervals in the (x, t, u) surface export; 0 disables it.
  std::size_t surface_levels = 0;
  /// Also write a gnuplot script next to the data files.
  bool gnuplot = false;
};

struct ExampleDefaults {
  double a;
  double b;
  double h;
  double dt;
  double t_end;
  double c;
};

/// Settings of the published experiment for each example. Throws
/// ArgumentError for ids other than 1, 2, 3.
ExampleDefaults example_defaults(int example);

/// A RunConfig with every field concrete and validated.
struct ResolvedRun {
  int example = 1;
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;
  double dt = 0.0;
  double t_end = 0.0;
  double c = 0.0;
  SecondDerivativeMethod w2_method = SecondDerivativeMethod::ShuRecurrence;
  RmsMode rms_mode = RmsMode::Conventional;
  BoundaryStaging staging = BoundaryStaging::PerStage;
  /// Sorted, unique, always ends with t_end.
  std::vector<double> snapshot_times;
  std::optional<std::filesystem::path> out;
  OutputFormat format = OutputFormat::Csv;
  std::size_t surface_levels = 0;
  bool gnuplot = false;

  ProblemSpec problem() const;
  UniformGrid grid() const;
};

/// Fills defaults and checks: h divides (b - a), dt > 0, t_end >= 0,
/// snapshots in [0, t_end], c admissible for the example. Throws
/// ArgumentError.
ResolvedRun resolve(const RunConfig& config);

/// Overwrites the fields present in `doc` (keys mirror the RunConfig field
/// names; "bc_staging" for the staging). Throws ArgumentError on unknown keys
/// or wrong types.
void apply_json(RunConfig& config, const nlohmann::json& doc);

/// Reads a JSON config file and applies it. Throws ArgumentError.
void apply_json_file(RunConfig& config, const std::filesystem::path& path);

/// Config echo used in summaries.
nlohmann::ordered_json to_json(const ResolvedRun& run);

}  // namespace mcbdqm::cli
