#pragma once

// Test-only oracles. Nothing here calls into the Thomas solver or the
// weight builders, so they stay independent of the code under test.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcbdqm/grid.hpp"
#include "mcbdqm/spline_basis.hpp"

namespace mcbdqm::testing {

using Dense = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting on a copy of A.
inline std::vector<double> dense_solve(Dense a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (a[piv][col] == 0.0) throw std::runtime_error("dense_solve: singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

/// Weights by brute force: the modified basis is sampled with eval_modified
/// (piecewise formulas, not the nodal table) and every row is solved densely.
inline Dense dense_spline_weights(const UniformGrid& grid, int order) {
  const std::size_t n = grid.size();
  Dense basis(n, std::vector<double>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t j = 0; j < n; ++j) {
      basis[p][j] = eval_modified(grid, static_cast<std::ptrdiff_t>(p + 1), grid.node(j), 0);
    }
  }
  Dense w(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> rhs(n);
    for (std::size_t p = 0; p < n; ++p) {
      rhs[p] = eval_modified(grid, static_cast<std::ptrdiff_t>(p + 1), grid.node(i), order);
    }
    w[i] = dense_solve(basis, rhs);
  }
  return w;
}

inline std::vector<double> dense_matvec(const Dense& a, const std::vector<double>& x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t k = 0; k < x.size(); ++k) y[r] += a[r][k] * x[k];
  }
  return y;
}

}  // namespace mcbdqm::testing
