#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "mcbdqm/errors.hpp"
#include "mcbdqm/ssp_rk54.hpp"
#include "mcbdqm_cli/commands.hpp"
#include "mcbdqm_cli/output.hpp"

namespace mcbdqm::cli {
namespace {

std::vector<double> surface_times(const ResolvedRun& run) {
  std::vector<double> times;
  if (run.surface_levels == 0) return times;
  const auto levels = static_cast<double>(run.surface_levels);
  for (std::size_t k = 0; k <= run.surface_levels; ++k) {
    times.push_back(run.t_end * static_cast<double>(k) / levels);
  }
  times.back() = run.t_end;
  return times;
}

const State& state_at(const std::vector<State>& states, double t) {
  const auto it = std::find_if(states.begin(), states.end(),
                               [t](const State& s) { return s.t == t; });
  if (it == states.end()) throw std::logic_error("solver did not report a requested time");
  return *it;
}

std::string snapshot_stem(double t) { return "snapshot_t" + format_label(t); }

std::string render_snapshot(const State& state, const UniformGrid& grid,
                            const FieldFunction& exact, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "x,u_numerical,u_exact,error\n";
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double x = grid.node(j);
      const double ue = exact(x, state.t);
      os << format_sci(x) << ',' << format_sci(state.u[j]) << ',' << format_sci(ue) << ','
         << format_sci(ue - state.u[j]) << '\n';
    }
    return os.str();
  }
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    const double ue = exact(x, state.t);
    records.push_back({{"t", state.t},
                       {"x", x},
                       {"u_numerical", state.u[j]},
                       {"u_exact", ue},
                       {"error", ue - state.u[j]}});
  }
  return records.dump(2) + "\n";
}

std::string render_surface(const SolveResult& result, const FieldFunction& exact,
                           OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "x,t,u_numerical,u_exact\n";
    for (const State& s : result.surface) {
      for (std::size_t j = 0; j < result.grid.size(); ++j) {
        const double x = result.grid.node(j);
        os << format_sci(x) << ',' << format_sci(s.t) << ',' << format_sci(s.u[j]) << ','
           << format_sci(exact(x, s.t)) << '\n';
      }
      // blank line between time levels so gnuplot reads it as a grid
      os << '\n';
    }
    return os.str();
  }
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const State& s : result.surface) {
    for (std::size_t j = 0; j < result.grid.size(); ++j) {
      const double x = result.grid.node(j);
      records.push_back(
          {{"x", x}, {"t", s.t}, {"u_numerical", s.u[j]}, {"u_exact", exact(x, s.t)}});
    }
  }
  return records.dump(2) + "\n";
}

std::string render_gnuplot(const SolveResult& result) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 'x'\n";
  if (!result.surface.empty()) {
    os << "set ylabel 't'\n"
       << "set zlabel 'u'\n"
       << "set term pngcairo size 900,650\n"
       << "set output 'surface.png'\n"
       << "splot 'surface.csv' using 1:2:3 with lines title 'numerical'\n";
  }
  os << "set ylabel 'u'\n"
     << "set term pngcairo size 900,650\n"
     << "set output 'snapshots.png'\n"
     << "plot";
  for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
    const std::string file = snapshot_stem(result.snapshots[i].t) + ".csv";
    const std::string t = format_label(result.snapshots[i].t);
    os << (i == 0 ? " " : ", \\\n     ") << "'" << file << "' using 1:2 with points title 't = "
       << t << " numerical', '" << file << "' using 1:3 with lines title 't = " << t
       << " exact'";
  }
  os << '\n';
  return os.str();
}

}  // namespace

SolveResult run_solve(const ResolvedRun& run) {
  const auto started = std::chrono::steady_clock::now();
  const ProblemSpec spec = run.problem();
  const UniformGrid grid = run.grid();

  SolveOptions options;
  options.dt = run.dt;
  options.t_end = run.t_end;
  options.w2_method = run.w2_method;
  options.staging = run.staging;
  options.snapshot_times = run.snapshot_times;
  const std::vector<double> surface = surface_times(run);
  options.snapshot_times.insert(options.snapshot_times.end(), surface.begin(), surface.end());

  const std::vector<State> states = solve(spec, grid, options);

  SolveResult result{run, grid, {}, {}, {}, 0.0};
  for (double t : run.snapshot_times) {
    const State& s = state_at(states, t);
    result.snapshots.push_back(s);
    result.reports.push_back(error_norms(s.u, spec.exact, grid, t, run.rms_mode));
  }
  for (double t : surface) result.surface.push_back(state_at(states, t));
  result.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::string render_solve_summary(const SolveResult& result) {
  const ResolvedRun& run = result.run;
  if (run.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["config"] = to_json(run);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ErrorReport& r : result.reports) {
      rows.push_back({{"t", r.t}, {"l2", r.l2}, {"linf", r.linf}, {"rms", r.rms}});
    }
    j["errors"] = rows;
    j["runtime_s"] = result.runtime_s;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "t,l2,linf,rms,n,h,dt,t_end,example,c,a,b,w2_method,rms_mode,bc_staging,tableau,"
        "runtime_s\n";
  for (const ErrorReport& r : result.reports) {
    os << format_sci(r.t) << ',' << format_sci(r.l2) << ',' << format_sci(r.linf) << ','
       << format_sci(r.rms) << ',' << r.n << ',' << format_sci(run.h) << ','
       << format_sci(run.dt) << ',' << format_sci(run.t_end) << ',' << run.example << ','
       << format_sci(run.c) << ',' << format_sci(run.a) << ',' << format_sci(run.b) << ','
       << to_string(run.w2_method) << ',' << to_string(run.rms_mode) << ','
       << to_string(run.staging) << ',' << csv_field(SspRk54Tableau::optimal().source) << ','
       << format_sci(result.runtime_s) << '\n';
  }
  return os.str();
}

void write_solve_outputs(const SolveResult& result) {
  const ResolvedRun& run = result.run;
  if (!run.out) return;
  ensure_directory(*run.out);
  const ProblemSpec spec = run.problem();
  const std::string ext = run.format == OutputFormat::Json ? ".json" : ".csv";
  for (const State& s : result.snapshots) {
    write_file(*run.out / (snapshot_stem(s.t) + ext),
               render_snapshot(s, result.grid, spec.exact, run.format));
  }
  write_file(*run.out / ("summary" + ext), render_solve_summary(result));
  if (!result.surface.empty()) {
    write_file(*run.out / ("surface" + ext), render_surface(result, spec.exact, run.format));
  }
  if (run.gnuplot && run.format == OutputFormat::Csv) {
    write_file(*run.out / "plot.gp", render_gnuplot(result));
  }
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ResolvedRun run;
  try {
    run = resolve(config);
    if (run.gnuplot && run.format != OutputFormat::Csv) {
      throw ArgumentError("--gnuplot needs --format csv");
    }
    if (run.out) ensure_directory(*run.out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  try {
    const SolveResult result = run_solve(run);
    write_solve_outputs(result);
    out << render_solve_summary(result);
  } catch (const DivergenceError& e) {
    err << "diverged: " << e.what() << '\n';
    return kExitDivergence;
  }
  return kExitOk;
}

}  // namespace mcbdqm::cli
