#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "mcbdqm/errors.hpp"
#include "mcbdqm_cli/commands.hpp"
#include "mcbdqm_cli/output.hpp"

namespace mcbdqm::cli {

std::string render_weights(const DenseMatrix& w, const UniformGrid& grid, std::string_view name,
                           std::string_view method, OutputFormat format) {
  std::vector<double> sums(w.rows());
  double worst = 0.0;
  for (std::size_t r = 0; r < w.rows(); ++r) {
    double s = 0.0;
    for (double v : w.row(r)) s += v;
    sums[r] = s;
    worst = std::max(worst, std::abs(s));
  }

  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["matrix"] = std::string(name);
    j["method"] = std::string(method);
    j["grid"] = {{"a", grid.a()}, {"b", grid.b()}, {"n", grid.size()}, {"h", grid.h()}};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < w.rows(); ++r) {
      const auto row = w.row(r);
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["rows"] = rows;
    j["row_sums"] = sums;
    j["max_abs_row_sum"] = worst;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "# matrix=" << name << " method=" << method << " grid=[" << format_sci(grid.a()) << ';'
     << format_sci(grid.b()) << "] n=" << grid.size() << " h=" << format_sci(grid.h()) << '\n';
  for (std::size_t c = 0; c < w.cols(); ++c) os << "j" << (c + 1) << ',';
  os << "row_sum\n";
  for (std::size_t r = 0; r < w.rows(); ++r) {
    os << join_sci(w.row(r)) << ',' << format_sci(sums[r]) << '\n';
  }
  os << "# max_abs_row_sum=" << format_sci(worst) << '\n';
  return os.str();
}

int cmd_weights(const WeightsConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<UniformGrid> grid;
  try {
    if (config.n && config.h) throw ArgumentError("give either --n or --h, not both");
    if (config.h) {
      grid = UniformGrid::with_spacing(config.a, config.b, *config.h);
    } else {
      grid = UniformGrid(config.a, config.b, config.n.value_or(11));
    }
    if (config.methods.empty()) throw ArgumentError("no second-derivative method selected");
    if (config.out) ensure_directory(*config.out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }

  const std::string ext = config.format == OutputFormat::Json ? ".json" : ".csv";
  const DenseMatrix w1 = weights_order1(*grid);
  auto emit = [&](const std::string& file, const std::string& text) {
    if (config.out) {
      write_file(*config.out / file, text);
    } else {
      out << text;
    }
  };
  emit("w1" + ext, render_weights(w1, *grid, "w1", "modified cubic B-spline", config.format));
  for (SecondDerivativeMethod method : config.methods) {
    const std::string tag(to_string(method));
    emit("w2_" + tag + ext,
         render_weights(weights_order2(*grid, method, &w1), *grid, "w2", tag, config.format));
  }
  if (config.out) {
    out << "wrote " << (1 + config.methods.size()) << " matrices to " << config.out->string()
        << '\n';
  }
  return kExitOk;
}

}  // namespace mcbdqm::cli
