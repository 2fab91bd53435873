#include "mcbdqm/spline_basis.hpp"

#include <cmath>
#include <string>

#include "mcbdqm/errors.hpp"

namespace mcbdqm {
namespace {

constexpr double kKnotSnap = 1e-12;

void check_order(int order) {
  if (order < 0 || order > 2) {
    throw ArgumentError("derivative order must be 0, 1 or 2, got " + std::to_string(order));
  }
}

std::ptrdiff_t node_count(const UniformGrid& grid) {
  return static_cast<std::ptrdiff_t>(grid.size());
}

// Reference spline in the local coordinate s = (x - x_j) / h, pieces taken
// on the half-open intervals [-2,-1), [-1,0), [0,1), [1,2].
double reference_spline(double s, int order) {
  if (s < -1.0) {
    const double p = s + 2.0;
    switch (order) {
      case 0: return p * p * p;
      case 1: return 3.0 * p * p;
      default: return 6.0 * p;
    }
  }
  if (s < 0.0) {
    const double p = s + 2.0;
    const double q = s + 1.0;
    switch (order) {
      case 0: return p * p * p - 4.0 * q * q * q;
      case 1: return 3.0 * p * p - 12.0 * q * q;
      default: return 6.0 * p - 24.0 * q;
    }
  }
  if (s < 1.0) {
    const double p = 2.0 - s;
    const double q = 1.0 - s;
    switch (order) {
      case 0: return p * p * p - 4.0 * q * q * q;
      case 1: return -3.0 * p * p + 12.0 * q * q;
      default: return 6.0 * p - 24.0 * q;
    }
  }
  const double p = 2.0 - s;
  switch (order) {
    case 0: return p * p * p;
    case 1: return -3.0 * p * p;
    default: return 6.0 * p;
  }
}

}  // namespace

double eval_bspline(const UniformGrid& grid, std::ptrdiff_t j, double x, int order) {
  check_order(order);
  if (!std::isfinite(x)) {
    throw ArgumentError("spline evaluation point must be finite");
  }
  if (j < 0 || j > node_count(grid) + 1) {
    throw ArgumentError("B-spline index " + std::to_string(j) + " outside [0, N + 1]");
  }
  const double h = grid.h();
  const double d = x - grid.knot(j);
  if (std::abs(d) >= 2.0 * h) {
    return 0.0;
  }
  double s = d / h;
  // points within rounding of a knot are evaluated at the knot itself
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= kKnotSnap) s = nearest;
  if (std::abs(s) >= 2.0) {
    return 0.0;
  }
  return reference_spline(s, order) / std::pow(h, order);
}

double eval_modified(const UniformGrid& grid, std::ptrdiff_t j, double x, int order) {
  const std::ptrdiff_t n = node_count(grid);
  if (j < 1 || j > n) {
    throw ArgumentError("modified B-spline index " + std::to_string(j) + " outside [1, N]");
  }
  const double base = eval_bspline(grid, j, x, order);
  if (j == 1) return base + 2.0 * eval_bspline(grid, 0, x, order);
  if (j == 2) return base - eval_bspline(grid, 0, x, order);
  if (j == n - 1) return base - eval_bspline(grid, n + 1, x, order);
  if (j == n) return base + 2.0 * eval_bspline(grid, n + 1, x, order);
  return base;
}

double bspline_nodal(std::ptrdiff_t offset, int order, double h) {
  check_order(order);
  if (offset < -1 || offset > 1) {
    return 0.0;
  }
  switch (order) {
    case 0:
      return offset == 0 ? 4.0 : 1.0;
    case 1:
      // B_j'(x_{j-1}) = 3/h, B_j'(x_{j+1}) = -3/h
      return offset == 0 ? 0.0 : -3.0 * static_cast<double>(offset) / h;
    default:
      return (offset == 0 ? -12.0 : 6.0) / (h * h);
  }
}

double modified_nodal(const UniformGrid& grid, std::ptrdiff_t p, std::ptrdiff_t i, int order) {
  const std::ptrdiff_t n = node_count(grid);
  if (p < 1 || p > n || i < 1 || i > n) {
    throw ArgumentError("modified nodal indices must lie in [1, N]");
  }
  const double h = grid.h();
  const double base = bspline_nodal(i - p, order, h);
  if (p == 1) return base + 2.0 * bspline_nodal(i - 0, order, h);
  if (p == 2) return base - bspline_nodal(i - 0, order, h);
  if (p == n - 1) return base - bspline_nodal(i - (n + 1), order, h);
  if (p == n) return base + 2.0 * bspline_nodal(i - (n + 1), order, h);
  return base;
}

}  // namespace mcbdqm
