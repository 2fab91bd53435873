#pragma once

#include <cstddef>

#include "mcbdqm/grid.hpp"

namespace mcbdqm {

// Cubic B-splines on a uniform grid, normalized so that the peak value is 4
// (1/h^3 scaling rather than the textbook 1/(6 h^3)).
//
// Basis indices follow knot labels: the spline j is centered on x_j with
// x_1 = a and x_N = b. Splines 0 and N + 1 are centered on the phantom knots
// a - h and b + h; they are only used to form the modified boundary splines.
//
// All functions are pure and thread-safe.

/// Value (order 0) or derivative (order 1, 2) of the cubic B-spline j at x.
/// Zero whenever |x - x_j| >= 2h. Throws ArgumentError for j outside
/// [0, N + 1], order outside {0, 1, 2}, or non-finite x.
double eval_bspline(const UniformGrid& grid, std::ptrdiff_t j, double x, int order);

/// Modified cubic B-spline j in [1, N]:
///   1     : B_1 + 2 B_0
///   2     : B_2 - B_0
///   N - 1 : B_{N-1} - B_{N+1}
///   N     : B_N + 2 B_{N+1}
/// and B_j for the rest.
double eval_modified(const UniformGrid& grid, std::ptrdiff_t j, double x, int order);

/// Exact nodal table of the unmodified spline: the order-th derivative of
/// B_j at x_{j + offset}. Nonzero only for |offset| <= 1:
///   order 0: 1, 4, 1
///   order 1: 3/h, 0, -3/h
///   order 2: 6/h^2, -12/h^2, 6/h^2
double bspline_nodal(std::ptrdiff_t offset, int order, double h);

/// Exact order-th derivative of the modified spline p at node x_i (both 1-based),
/// assembled from bspline_nodal.
double modified_nodal(const UniformGrid& grid, std::ptrdiff_t p, std::ptrdiff_t i, int order);

}  // namespace mcbdqm
