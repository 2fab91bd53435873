#pragma once

#include <optional>
#include <string_view>

#include "mcbdqm/dense_matrix.hpp"
#include "mcbdqm/grid.hpp"
#include "mcbdqm/tridiagonal.hpp"

namespace mcbdqm {

/// How the second-derivative weights are built.
enum class SecondDerivativeMethod {
  /// Shu's recurrence from the first-derivative weights. Default: this is the
  /// construction that reproduces the published error tables.
  ShuRecurrence,
  /// Exactness of the second derivative on the modified basis (one
  /// tridiagonal solve per node). The basis has zero curvature at both ends,
  /// so the two boundary rows vanish and the rows next to them carry an O(1)
  /// boundary-layer error.
  SplineSystem,
};

std::string_view to_string(SecondDerivativeMethod method) noexcept;
/// Accepts "shu" / "spline" (also the enumerator names). Throws ArgumentError.
SecondDerivativeMethod parse_second_derivative_method(std::string_view text);

/// B[p][j] = modified spline p evaluated at node j. Rows are
/// (6,1), (0,4,1), (1,4,1), ..., (1,4,0), (1,6).
TriDiagMatrix basis_matrix(const UniformGrid& grid);

/// First-derivative DQ weights: row i solves B w_i = d_i with
/// d_i[p] = modified spline p's derivative at node i. In both weight
/// builders, entries below the smallest normal double are stored as zeros.
DenseMatrix weights_order1(const UniformGrid& grid);

/// Second-derivative DQ weights. ShuRecurrence needs the first-derivative
/// weights; they are computed when not supplied.
DenseMatrix weights_order2(const UniformGrid& grid, SecondDerivativeMethod method,
                           const DenseMatrix* w1 = nullptr);

/// Both weight matrices for one grid. Immutable once built and safe to share
/// between concurrent solves.
struct WeightMatrices {
  UniformGrid grid;
  DenseMatrix w1;
  DenseMatrix w2;
  SecondDerivativeMethod method2;

  static WeightMatrices build(const UniformGrid& grid,
                              SecondDerivativeMethod method = SecondDerivativeMethod::ShuRecurrence);
};

}  // namespace mcbdqm
