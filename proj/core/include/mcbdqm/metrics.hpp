#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mcbdqm/grid.hpp"
#include "mcbdqm/sine_gordon.hpp"

namespace mcbdqm {

/// RMS convention. Conventional: sqrt(sum e^2 / N). Literal: sqrt(sum e^2) / N.
enum class RmsMode { Conventional, Literal };

std::string_view to_string(RmsMode mode) noexcept;
/// Accepts "conventional" / "literal". Throws ArgumentError.
RmsMode parse_rms_mode(std::string_view text);

/// Nodal error norms with e_j = exact_j - numerical_j over the N grid nodes:
///   L2 = sqrt(h sum e_j^2), Linf = max |e_j|, RMS per `rms_mode`.
struct ErrorReport {
  double l2 = 0.0;
  double linf = 0.0;
  double rms = 0.0;
  double t = 0.0;
  std::size_t n = 0;
  double h = 0.0;
  RmsMode rms_mode = RmsMode::Conventional;
};

/// Throws ArgumentError when the vectors do not match the grid or contain
/// non-finite values.
ErrorReport error_norms(std::span<const double> numerical, std::span<const double> exact,
                        const UniformGrid& grid, double t,
                        RmsMode rms_mode = RmsMode::Conventional);

ErrorReport error_norms(std::span<const double> numerical, const FieldFunction& exact,
                        const UniformGrid& grid, double t,
                        RmsMode rms_mode = RmsMode::Conventional);

struct ConvergenceRow {
  double h = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  std::optional<double> order_l2;
  std::optional<double> order_linf;
};

/// log(e_coarse / e_fine) / log(h_coarse / h_fine); log2 of the error ratio
/// for a halving. Empty when either error is zero or non-finite.
std::optional<double> observed_order(double e_coarse, double e_fine, double h_coarse,
                                     double h_fine);

/// Fills the order columns of rows given as (h, l2, linf) in refinement order.
std::vector<ConvergenceRow> convergence_table(std::vector<ConvergenceRow> rows);

struct ConvergenceOptions {
  double dt = 1e-4;
  double t_end = 1.0;
  SecondDerivativeMethod w2_method = SecondDerivativeMethod::ShuRecurrence;
  BoundaryStaging staging = BoundaryStaging::PerStage;
  /// Upper bound on concurrently running solves; 0 picks the hardware concurrency.
  unsigned max_parallel = 0;
};

/// One solve per spacing in `h_list` (coarse to fine), norms at t_end and
/// orders from successive rows. Needs an exact solution.
std::vector<ConvergenceRow> convergence_study(const ProblemSpec& spec,
                                              std::span<const double> h_list,
                                              const ConvergenceOptions& options);

}  // namespace mcbdqm
