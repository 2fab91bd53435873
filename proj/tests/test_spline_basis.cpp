#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "mcbdqm/errors.hpp"
#include "mcbdqm/grid.hpp"
#include "mcbdqm/spline_basis.hpp"

namespace mcbdqm {
namespace {

TEST(UniformGrid, NodesAreEvenlySpaced) {
  const UniformGrid grid(-1.0, 1.0, 51);
  EXPECT_EQ(grid.node(0), -1.0);
  EXPECT_EQ(grid.node(50), 1.0);
  EXPECT_NEAR(grid.h(), 0.04, 1e-15);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    EXPECT_NEAR(grid.node(i + 1) - grid.node(i), grid.h(), 1e-12 * grid.h());
  }
  EXPECT_DOUBLE_EQ(grid.knot(0), -1.04);
  EXPECT_DOUBLE_EQ(grid.knot(52), 1.04);
}

TEST(UniformGrid, RejectsTooFewNodesAndBadSpacing) {
  EXPECT_THROW(UniformGrid(0.0, 1.0, 4), ArgumentError);
  EXPECT_THROW(UniformGrid(1.0, 0.0, 10), ArgumentError);
  EXPECT_THROW(UniformGrid::with_spacing(0.0, 1.0, 0.3), ArgumentError);
  EXPECT_EQ(UniformGrid::with_spacing(-10.0, 10.0, 0.01).size(), 2001u);
  EXPECT_EQ(UniformGrid::with_spacing(-3.0, 3.0, 0.005).size(), 1201u);
}

TEST(Bspline, MatchesNodalTable) {
  const UniformGrid grid(0.0, 1.0, 11);
  const double h = grid.h();
  for (std::ptrdiff_t j = 1; j <= 11; ++j) {
    const double xj = grid.knot(j);
    EXPECT_DOUBLE_EQ(eval_bspline(grid, j, xj, 0), 4.0);
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j - 1), 0), 1.0, 1e-12);
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j + 1), 0), 1.0, 1e-12);
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j - 1), 1), 3.0 / h, 1e-10 / h);
    EXPECT_NEAR(eval_bspline(grid, j, xj, 1), 0.0, 1e-12 / h);
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j + 1), 1), -3.0 / h, 1e-10 / h);
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j - 1), 2), 6.0 / (h * h), 1e-9 / (h * h));
    EXPECT_NEAR(eval_bspline(grid, j, xj, 2), -12.0 / (h * h), 1e-9 / (h * h));
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j + 1), 2), 6.0 / (h * h), 1e-9 / (h * h));
    EXPECT_EQ(eval_bspline(grid, j, grid.knot(j + 2), 0), 0.0);
    EXPECT_EQ(eval_bspline(grid, j, grid.knot(j - 2), 0), 0.0);
  }
  for (std::ptrdiff_t offset = -1; offset <= 1; ++offset) {
    for (int order = 0; order <= 2; ++order) {
      const double analytic =
          eval_bspline(grid, 5, grid.knot(5 + offset), order);
      EXPECT_NEAR(bspline_nodal(offset, order, h), analytic, 1e-9 * std::pow(h, -order));
    }
  }
}

TEST(Bspline, MidpointValue) {
  // (2 - 1/2)^3 - 4 (1 - 1/2)^3 = 3.375 - 0.5
  const UniformGrid grid(0.0, 2.0, 9);
  const double h = grid.h();
  for (std::ptrdiff_t j = 1; j <= 9; ++j) {
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j) + 0.5 * h, 0), 2.875, 1e-12);
    EXPECT_NEAR(eval_bspline(grid, j, grid.knot(j) - 0.5 * h, 0), 2.875, 1e-12);
  }
}

TEST(Bspline, InvalidArguments) {
  const UniformGrid grid(0.0, 1.0, 6);
  EXPECT_THROW(eval_bspline(grid, 3, 0.5, 3), ArgumentError);
  EXPECT_THROW(eval_bspline(grid, 3, 0.5, -1), ArgumentError);
  EXPECT_THROW(eval_bspline(grid, 3, std::numeric_limits<double>::quiet_NaN(), 0),
               ArgumentError);
  EXPECT_THROW(eval_bspline(grid, 3, std::numeric_limits<double>::infinity(), 0),
               ArgumentError);
  EXPECT_THROW(eval_bspline(grid, -1, 0.5, 0), ArgumentError);
  EXPECT_THROW(eval_bspline(grid, 8, 0.5, 0), ArgumentError);
  EXPECT_NO_THROW(eval_bspline(grid, 7, 1.1, 0));
  EXPECT_THROW(eval_modified(grid, 0, 0.5, 0), ArgumentError);
  EXPECT_THROW(eval_modified(grid, 7, 0.5, 0), ArgumentError);
}

TEST(Bspline, CompactSupport) {
  const UniformGrid grid(-1.0, 1.0, 21);
  const double h = grid.h();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(grid.a() - 2.0 * h, grid.b() + 2.0 * h);
  for (int trial = 0; trial < 2000; ++trial) {
    const double x = dist(rng);
    for (std::ptrdiff_t j = 0; j <= 22; ++j) {
      if (std::abs(x - grid.knot(j)) >= 2.0 * h) {
        for (int order = 0; order <= 2; ++order) {
          EXPECT_EQ(eval_bspline(grid, j, x, order), 0.0);
        }
      }
    }
  }
}

TEST(Bspline, SecondOrderContinuityAtKnots) {
  const UniformGrid grid(0.0, 1.0, 11);
  const double h = grid.h();
  for (std::ptrdiff_t j = 1; j <= 11; ++j) {
    for (std::ptrdiff_t k = j - 2; k <= j + 2; ++k) {
      const double xk = grid.knot(k);
      const double left = std::nextafter(xk, -1e300);
      const double right = std::nextafter(xk, 1e300);
      for (int order = 0; order <= 2; ++order) {
        const double scale = std::pow(h, order);
        EXPECT_NEAR(eval_bspline(grid, j, left, order) * scale,
                    eval_bspline(grid, j, right, order) * scale, 1e-10)
            << "j=" << j << " knot=" << k << " order=" << order;
      }
    }
  }
}

TEST(Bspline, Symmetry) {
  const UniformGrid grid(0.0, 1.0, 11);
  const double h = grid.h();
  for (int k = 1; k < 40; ++k) {
    const double s = 2.0 * h * k / 40.0;
    const double xj = grid.knot(6);
    EXPECT_NEAR(eval_bspline(grid, 6, xj + s, 0), eval_bspline(grid, 6, xj - s, 0), 1e-12);
    EXPECT_NEAR(eval_bspline(grid, 6, xj + s, 1), -eval_bspline(grid, 6, xj - s, 1),
                1e-10 / h);
    EXPECT_NEAR(eval_bspline(grid, 6, xj + s, 2), eval_bspline(grid, 6, xj - s, 2),
                1e-9 / (h * h));
  }
}

TEST(ModifiedBspline, BoundaryValues) {
  const UniformGrid grid(-1.0, 1.0, 5);
  const double h = grid.h();
  const double x1 = grid.node(0);
  EXPECT_NEAR(eval_modified(grid, 1, x1, 0), 6.0, 1e-12);
  EXPECT_NEAR(eval_modified(grid, 2, x1, 0), 0.0, 1e-12);
  EXPECT_NEAR(eval_modified(grid, 5, grid.node(4), 0), 6.0, 1e-12);
  EXPECT_NEAR(eval_modified(grid, 4, grid.node(4), 0), 0.0, 1e-12);
  EXPECT_NEAR(eval_modified(grid, 1, x1, 1), -6.0 / h, 1e-10 / h);
  EXPECT_NEAR(eval_modified(grid, 2, x1, 1), 6.0 / h, 1e-10 / h);
  EXPECT_NEAR(eval_modified(grid, 4, grid.node(4), 1), -6.0 / h, 1e-10 / h);
  EXPECT_NEAR(eval_modified(grid, 5, grid.node(4), 1), 6.0 / h, 1e-10 / h);
  // zero curvature at the ends
  EXPECT_NEAR(eval_modified(grid, 1, x1, 2), 0.0, 1e-9 / (h * h));
  EXPECT_NEAR(eval_modified(grid, 2, x1, 2), 0.0, 1e-9 / (h * h));

  const UniformGrid wide(0.0, 1.0, 11);
  const double hw = wide.h();
  EXPECT_NEAR(eval_modified(wide, 5, wide.node(4), 2), -12.0 / (hw * hw), 1e-9 / (hw * hw));
}

TEST(ModifiedBspline, NodalTableAgreesWithPiecewiseEvaluation) {
  for (std::size_t n : {5u, 6u, 9u, 14u}) {
    const UniformGrid grid(-2.0, 3.0, n);
    const auto nn = static_cast<std::ptrdiff_t>(n);
    for (std::ptrdiff_t p = 1; p <= nn; ++p) {
      for (std::ptrdiff_t i = 1; i <= nn; ++i) {
        for (int order = 0; order <= 2; ++order) {
          const double scale = std::pow(grid.h(), order);
          EXPECT_NEAR(modified_nodal(grid, p, i, order) * scale,
                      eval_modified(grid, p, grid.node(static_cast<std::size_t>(i - 1)), order) *
                          scale,
                      1e-11)
              << "n=" << n << " p=" << p << " i=" << i << " order=" << order;
        }
      }
    }
  }
}

TEST(ModifiedBspline, PartitionOfSix) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {5u, 8u, 21u}) {
    const UniformGrid grid(-1.0, 2.0, n);
    const double h = grid.h();
    std::uniform_real_distribution<double> dist(grid.a(), grid.b());
    for (int trial = 0; trial < 100; ++trial) {
      const double x = dist(rng);
      double s0 = 0.0, s1 = 0.0, s2 = 0.0, full = 0.0;
      for (std::ptrdiff_t j = 1; j <= static_cast<std::ptrdiff_t>(n); ++j) {
        s0 += eval_modified(grid, j, x, 0);
        s1 += eval_modified(grid, j, x, 1);
        s2 += eval_modified(grid, j, x, 2);
      }
      for (std::ptrdiff_t j = 0; j <= static_cast<std::ptrdiff_t>(n) + 1; ++j) {
        full += eval_bspline(grid, j, x, 0);
      }
      EXPECT_NEAR(s0, 6.0, 1e-12);
      EXPECT_NEAR(full, 6.0, 1e-12);
      EXPECT_NEAR(s1, 0.0, 1e-10 / h);
      EXPECT_NEAR(s2, 0.0, 1e-10 / (h * h));
    }
  }
}

}  // namespace
}  // namespace mcbdqm
