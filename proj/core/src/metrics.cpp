#include "mcbdqm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <thread>

#include "mcbdqm/errors.hpp"

namespace mcbdqm {

std::string_view to_string(RmsMode mode) noexcept {
  return mode == RmsMode::Conventional ? "conventional" : "literal";
}

RmsMode parse_rms_mode(std::string_view text) {
  if (text == "conventional") return RmsMode::Conventional;
  if (text == "literal") return RmsMode::Literal;
  throw ArgumentError("unknown RMS mode '" + std::string(text) +
                      "' (expected conventional or literal)");
}

ErrorReport error_norms(std::span<const double> numerical, std::span<const double> exact,
                        const UniformGrid& grid, double t, RmsMode rms_mode) {
  const std::size_t n = grid.size();
  if (numerical.size() != n || exact.size() != n) {
    throw ArgumentError("error norms: expected " + std::to_string(n) + " nodal values");
  }
  double sum_sq = 0.0;
  double linf = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(numerical[j]) || !std::isfinite(exact[j])) {
      throw ArgumentError("error norms: non-finite nodal value at node " + std::to_string(j));
    }
    const double e = exact[j] - numerical[j];
    sum_sq += e * e;
    linf = std::max(linf, std::abs(e));
  }
  ErrorReport report;
  report.l2 = std::sqrt(grid.h() * sum_sq);
  report.linf = linf;
  report.rms = rms_mode == RmsMode::Conventional
                   ? std::sqrt(sum_sq / static_cast<double>(n))
                   : std::sqrt(sum_sq) / static_cast<double>(n);
  report.t = t;
  report.n = n;
  report.h = grid.h();
  report.rms_mode = rms_mode;
  return report;
}

ErrorReport error_norms(std::span<const double> numerical, const FieldFunction& exact,
                        const UniformGrid& grid, double t, RmsMode rms_mode) {
  std::vector<double> reference(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) reference[j] = exact(grid.node(j), t);
  return error_norms(numerical, reference, grid, t, rms_mode);
}

std::optional<double> observed_order(double e_coarse, double e_fine, double h_coarse,
                                     double h_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !std::isfinite(e_coarse) ||
      !std::isfinite(e_fine) || !(h_coarse > 0.0) || !(h_fine > 0.0) || h_coarse == h_fine) {
    return std::nullopt;
  }
  return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

std::vector<ConvergenceRow> convergence_table(std::vector<ConvergenceRow> rows) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    rows[k].order_l2.reset();
    rows[k].order_linf.reset();
    if (k == 0) continue;
    const auto& prev = rows[k - 1];
    rows[k].order_l2 = observed_order(prev.l2, rows[k].l2, prev.h, rows[k].h);
    rows[k].order_linf = observed_order(prev.linf, rows[k].linf, prev.h, rows[k].h);
  }
  return rows;
}

std::vector<ConvergenceRow> convergence_study(const ProblemSpec& spec,
                                              std::span<const double> h_list,
                                              const ConvergenceOptions& options) {
  if (!spec.has_exact()) {
    throw ArgumentError("convergence study needs an exact solution");
  }
  std::vector<UniformGrid> grids;
  grids.reserve(h_list.size());
  for (double h : h_list) grids.push_back(UniformGrid::with_spacing(spec.a, spec.b, h));

  auto run_one = [&spec, &options](const UniformGrid& grid) {
    SolveOptions solve_options;
    solve_options.dt = options.dt;
    solve_options.t_end = options.t_end;
    solve_options.w2_method = options.w2_method;
    solve_options.staging = options.staging;
    const auto states = solve(spec, grid, solve_options);
    const auto report = error_norms(states.back().u, spec.exact, grid, states.back().t);
    return ConvergenceRow{grid.h(), report.l2, report.linf, std::nullopt, std::nullopt};
  };

  unsigned parallel = options.max_parallel;
  if (parallel == 0) parallel = std::max(1u, std::thread::hardware_concurrency());

  std::vector<ConvergenceRow> rows(grids.size());
  for (std::size_t start = 0; start < grids.size(); start += parallel) {
    const std::size_t stop = std::min(grids.size(), start + parallel);
    if (stop - start == 1) {
      rows[start] = run_one(grids[start]);
      continue;
    }
    std::vector<std::future<ConvergenceRow>> pending;
    for (std::size_t k = start; k < stop; ++k) {
      pending.push_back(std::async(std::launch::async, run_one, std::cref(grids[k])));
    }
    for (std::size_t k = start; k < stop; ++k) rows[k] = pending[k - start].get();
  }
  return convergence_table(std::move(rows));
}

}  // namespace mcbdqm
