#include "mcbdqm/dq_weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mcbdqm/errors.hpp"
#include "mcbdqm/spline_basis.hpp"

namespace mcbdqm {
namespace {

// Weights decay geometrically away from the diagonal and underflow into the
// subnormal range on fine grids; those entries are stored as exact zeros
// (subnormal arithmetic is very slow and they are below 2.3e-308 anyway).
double flush_subnormal(double v) noexcept {
  return std::abs(v) < std::numeric_limits<double>::min() ? 0.0 : v;
}

// Row i of the weight matrix solves B w_i = d_i, d_i[p] = phi_p^(order)(x_i).
DenseMatrix spline_weights(const UniformGrid& grid, int order) {
  const std::size_t n = grid.size();
  const ThomasFactorization lu(basis_matrix(grid));
  DenseMatrix w(n, n);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = std::min(n - 1, i + 1);
    for (std::size_t p = lo; p <= hi; ++p) {
      rhs[p] = modified_nodal(grid, static_cast<std::ptrdiff_t>(p + 1),
                              static_cast<std::ptrdiff_t>(i + 1), order);
    }
    lu.solve(rhs, w.row(i));
    for (double& v : w.row(i)) v = flush_subnormal(v);
    for (std::size_t p = lo; p <= hi; ++p) rhs[p] = 0.0;
  }
  return w;
}

DenseMatrix shu_recurrence(const UniformGrid& grid, const DenseMatrix& w1) {
  const std::size_t n = grid.size();
  if (w1.rows() != n || w1.cols() != n) {
    throw ArgumentError("first-derivative weights do not match the grid");
  }
  DenseMatrix w2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = grid.node(i);
    const double wii = w1(i, i);
    double diagonal = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double value =
          flush_subnormal(2.0 * w1(i, j) * (wii - 1.0 / (xi - grid.node(j))));
      w2(i, j) = value;
      diagonal -= value;
    }
    w2(i, i) = diagonal;
  }
  return w2;
}

}  // namespace

std::string_view to_string(SecondDerivativeMethod method) noexcept {
  switch (method) {
    case SecondDerivativeMethod::ShuRecurrence: return "shu";
    case SecondDerivativeMethod::SplineSystem: return "spline";
  }
  return "unknown";
}

SecondDerivativeMethod parse_second_derivative_method(std::string_view text) {
  if (text == "shu" || text == "ShuRecurrence") return SecondDerivativeMethod::ShuRecurrence;
  if (text == "spline" || text == "SplineSystem") return SecondDerivativeMethod::SplineSystem;
  throw ArgumentError("unknown second-derivative method '" + std::string(text) +
                      "' (expected spline or shu)");
}

TriDiagMatrix basis_matrix(const UniformGrid& grid) {
  const std::size_t n = grid.size();
  TriDiagMatrix b;
  b.diag.resize(n);
  b.sub.resize(n - 1);
  b.sup.resize(n - 1);
  for (std::size_t p = 0; p < n; ++p) {
    const auto label = static_cast<std::ptrdiff_t>(p + 1);
    b.diag[p] = modified_nodal(grid, label, label, 0);
    if (p + 1 < n) b.sup[p] = modified_nodal(grid, label, label + 1, 0);
    if (p > 0) b.sub[p - 1] = modified_nodal(grid, label, label - 1, 0);
  }
  return b;
}

DenseMatrix weights_order1(const UniformGrid& grid) { return spline_weights(grid, 1); }

DenseMatrix weights_order2(const UniformGrid& grid, SecondDerivativeMethod method,
                           const DenseMatrix* w1) {
  switch (method) {
    case SecondDerivativeMethod::SplineSystem:
      return spline_weights(grid, 2);
    case SecondDerivativeMethod::ShuRecurrence:
      if (w1 != nullptr) return shu_recurrence(grid, *w1);
      return shu_recurrence(grid, weights_order1(grid));
  }
  throw ArgumentError("unknown second-derivative method");
}

WeightMatrices WeightMatrices::build(const UniformGrid& grid, SecondDerivativeMethod method) {
  DenseMatrix w1 = weights_order1(grid);
  DenseMatrix w2 = weights_order2(grid, method, &w1);
  return WeightMatrices{grid, std::move(w1), std::move(w2), method};
}

}  // namespace mcbdqm
