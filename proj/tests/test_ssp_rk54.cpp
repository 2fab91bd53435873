#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "mcbdqm/errors.hpp"
#include "mcbdqm/ssp_rk54.hpp"

namespace mcbdqm {
namespace {

OdeSystem oscillator() {
  OdeSystem sys;
  sys.dimension = 2;
  sys.rhs = [](double, std::span<const double> y, std::span<double> d) {
    d[0] = y[1];
    d[1] = -y[0];
  };
  return sys;
}

double oscillator_error(double dt) {
  const std::vector<double> y0{1.0, 0.0};
  const auto out = integrate(oscillator(), y0, 0.0, 1.0, dt);
  return std::abs(out.back().y[0] - std::cos(1.0));
}

TEST(Tableau, ShuOsherCoefficientsAreConvexAndNonNegative) {
  const auto& tab = SspRk54Tableau::optimal();
  for (int i = 0; i < SspRk54Tableau::kStages; ++i) {
    double sum = 0.0;
    for (int k = 0; k <= i; ++k) {
      EXPECT_GE(tab.alpha[i][k], 0.0);
      EXPECT_GE(tab.beta[i][k], 0.0);
      sum += tab.alpha[i][k];
    }
    for (int k = i + 1; k < SspRk54Tableau::kStages; ++k) {
      EXPECT_EQ(tab.alpha[i][k], 0.0);
      EXPECT_EQ(tab.beta[i][k], 0.0);
    }
    EXPECT_NEAR(sum, 1.0, 1e-15) << "stage " << i + 1;
  }
  EXPECT_FALSE(tab.source.empty());
}

TEST(Tableau, ButcherFormSatisfiesFourthOrderConditions) {
  const auto& tab = SspRk54Tableau::optimal();
  const auto a = tab.butcher_a();
  const auto b = tab.butcher_b();
  const auto c = tab.abscissae();
  constexpr int s = SspRk54Tableau::kStages;

  auto dot = [&](auto&& f) {
    double acc = 0.0;
    for (int i = 0; i < s; ++i) acc += b[i] * f(i);
    return acc;
  };
  auto a_times = [&](int i, auto&& g) {
    double acc = 0.0;
    for (int j = 0; j < s; ++j) acc += a[i][j] * g(j);
    return acc;
  };
  auto cc = [&](int i) { return c[i]; };
  auto ac = [&](int i) { return a_times(i, cc); };

  EXPECT_NEAR(std::accumulate(b.begin(), b.end(), 0.0), 1.0, 1e-14);
  EXPECT_NEAR(dot(cc), 1.0 / 2.0, 1e-12);
  EXPECT_NEAR(dot([&](int i) { return c[i] * c[i]; }), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(dot(ac), 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(dot([&](int i) { return c[i] * c[i] * c[i]; }), 1.0 / 4.0, 1e-12);
  EXPECT_NEAR(dot([&](int i) { return c[i] * ac(i); }), 1.0 / 8.0, 1e-12);
  EXPECT_NEAR(dot([&](int i) { return a_times(i, [&](int j) { return c[j] * c[j]; }); }),
              1.0 / 12.0, 1e-12);
  EXPECT_NEAR(dot([&](int i) { return a_times(i, ac); }), 1.0 / 24.0, 1e-12);

  // published abscissae
  EXPECT_EQ(c[0], 0.0);
  EXPECT_NEAR(c[1], 0.391752226571890, 1e-14);
  EXPECT_NEAR(c[2], 0.586079689311540, 1e-14);
  EXPECT_NEAR(c[3], 0.474542363121400, 1e-14);
  EXPECT_NEAR(c[4], 0.935010630967653, 1e-14);
}

TEST(SspRk54Step, ZeroRhsLeavesStateUnchanged) {
  OdeSystem sys;
  sys.dimension = 3;
  sys.rhs = [](double, std::span<const double>, std::span<double> d) {
    std::fill(d.begin(), d.end(), 0.0);
  };
  const std::vector<double> y{1.0, -2.5, 1e-7};
  EXPECT_EQ(ssprk54_step(sys, 0.3, y, 0.1), y);
}

TEST(SspRk54Step, ConstantRhsIsIntegratedExactly) {
  OdeSystem sys;
  sys.dimension = 3;
  const std::vector<double> slope{1.0, -3.0, 0.25};
  sys.rhs = [&](double, std::span<const double>, std::span<double> d) {
    std::copy(slope.begin(), slope.end(), d.begin());
  };
  const std::vector<double> y{0.5, 0.0, -1.0};
  const double dt = 0.37;
  const auto out = ssprk54_step(sys, 0.0, y, dt);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(out[k], y[k] + dt * slope[k], 1e-14);
}

TEST(SspRk54Step, FourthOrderOnHarmonicOscillator) {
  const double e1 = oscillator_error(0.1);
  const double e2 = oscillator_error(0.05);
  const double e3 = oscillator_error(0.025);
  const double p1 = std::log2(e1 / e2);
  const double p2 = std::log2(e2 / e3);
  EXPECT_GE(p1, 3.8);
  EXPECT_LE(p1, 4.5);
  EXPECT_GE(p2, 3.8);
  EXPECT_LE(p2, 4.5);
}

TEST(SspRk54Step, TimeDependentRhsUsesStageTimes) {
  // y' = 4 t^3 is integrated exactly by a fourth-order quadrature
  OdeSystem sys;
  sys.dimension = 1;
  sys.rhs = [](double t, std::span<const double>, std::span<double> d) { d[0] = 4.0 * t * t * t; };
  const auto out = ssprk54_step(sys, 0.5, std::vector<double>{0.0}, 0.5);
  EXPECT_NEAR(out[0], 1.0 - 0.0625, 1e-14);
}

TEST(SspRk54Step, HooksRunAtStageTimes) {
  OdeSystem sys = oscillator();
  std::vector<double> stage_times;
  std::vector<double> step_times;
  sys.post_stage = [&](double t, std::span<double>) { stage_times.push_back(t); };
  sys.post_step = [&](double t, std::span<double>) { step_times.push_back(t); };
  std::vector<double> y{1.0, 0.0};
  SspRk54Stepper stepper;
  stepper.step(sys, 2.0, y, 0.5);
  const auto c = SspRk54Tableau::optimal().abscissae();
  ASSERT_EQ(stage_times.size(), 5u);
  for (int i = 1; i < 5; ++i) EXPECT_DOUBLE_EQ(stage_times[i - 1], 2.0 + 0.5 * c[i]);
  EXPECT_DOUBLE_EQ(stage_times[4], 2.5);
  ASSERT_EQ(step_times.size(), 1u);
  EXPECT_DOUBLE_EQ(step_times[0], 2.5);
}

TEST(SspRk54Step, NonFiniteStageRaisesDivergence) {
  OdeSystem sys;
  sys.dimension = 1;
  sys.rhs = [](double, std::span<const double> y, std::span<double> d) { d[0] = y[0] * y[0]; };
  std::vector<double> y{1e200};
  SspRk54Stepper stepper;
  try {
    stepper.step(sys, 3.0, y, 1.0);
    FAIL() << "expected DivergenceError";
  } catch (const DivergenceError& e) {
    EXPECT_EQ(e.stage(), 1);
    EXPECT_EQ(e.time(), 3.0);
  }
}

TEST(SspRk54Step, RejectsBadArguments) {
  const auto sys = oscillator();
  std::vector<double> y{1.0, 0.0};
  SspRk54Stepper stepper;
  EXPECT_THROW(stepper.step(sys, 0.0, y, 0.0), ArgumentError);
  EXPECT_THROW(stepper.step(sys, 0.0, y, -0.1), ArgumentError);
  std::vector<double> wrong{1.0};
  EXPECT_THROW(stepper.step(sys, 0.0, wrong, 0.1), ArgumentError);
}

TEST(Integrate, EmptyIntervalReturnsInitialState) {
  const std::vector<double> y0{0.3, -0.2};
  const auto out = integrate(oscillator(), y0, 1.5, 1.5, 0.1);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].t, 1.5);
  EXPECT_EQ(out[0].y, y0);
}

TEST(Integrate, ShortensStepToLandOnObserver) {
  OdeSystem sys = oscillator();
  std::vector<double> step_sizes;
  double last = 0.0;
  sys.post_step = [&](double t, std::span<double>) {
    step_sizes.push_back(t - last);
    last = t;
  };
  const std::vector<double> y0{1.0, 0.0};
  const std::vector<double> observers{0.5};
  const auto out = integrate(sys, y0, 0.0, 0.5, 0.2, observers);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].t, 0.5);
  ASSERT_EQ(step_sizes.size(), 3u);
  EXPECT_NEAR(step_sizes[0], 0.2, 1e-15);
  EXPECT_NEAR(step_sizes[1], 0.2, 1e-15);
  EXPECT_NEAR(step_sizes[2], 0.1, 1e-15);
}

TEST(Integrate, ObserversRecordedInOrderAndExactly) {
  const std::vector<double> y0{1.0, 0.0};
  const std::vector<double> observers{0.75, 0.25, 0.25, 3.0, 0.0};
  const auto out = integrate(oscillator(), y0, 0.0, 1.0, 1e-3, observers);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].t, 0.0);
  EXPECT_EQ(out[0].y, y0);
  EXPECT_EQ(out[1].t, 0.25);
  EXPECT_EQ(out[2].t, 0.75);
  EXPECT_EQ(out[3].t, 1.0);
  EXPECT_NEAR(out[1].y[0], std::cos(0.25), 1e-10);
}

TEST(Integrate, HarmonicOscillatorMatchesCosine) {
  EXPECT_LE(oscillator_error(1e-3), 1e-10);
}

TEST(Integrate, SkewSymmetricFlowKeepsNorm) {
  OdeSystem sys;
  sys.dimension = 3;
  // A = [[0, 1, -2], [-1, 0, 0.5], [2, -0.5, 0]]
  sys.rhs = [](double, std::span<const double> y, std::span<double> d) {
    d[0] = y[1] - 2.0 * y[2];
    d[1] = -y[0] + 0.5 * y[2];
    d[2] = 2.0 * y[0] - 0.5 * y[1];
  };
  const std::vector<double> y0{0.6, -0.8, 0.3};
  const auto out = integrate(sys, y0, 0.0, 1.0, 1e-3);
  auto norm = [](const std::vector<double>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  };
  EXPECT_LE(std::abs(norm(out.back().y) - norm(y0)), 1e-10);
}

TEST(Integrate, IsDeterministic) {
  const std::vector<double> y0{0.1, 0.9};
  const auto a = integrate(oscillator(), y0, 0.0, 2.0, 0.013);
  const auto b = integrate(oscillator(), y0, 0.0, 2.0, 0.013);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].t, b[k].t);
    EXPECT_EQ(a[k].y, b[k].y);
  }
}

TEST(Integrate, PropagatesDivergenceWithTime) {
  OdeSystem sys;
  sys.dimension = 1;
  sys.rhs = [](double, std::span<const double> y, std::span<double> d) { d[0] = y[0] * y[0]; };
  const std::vector<double> y0{1.0};
  try {
    integrate(sys, y0, 0.0, 2.0, 0.1);
    FAIL() << "expected DivergenceError";
  } catch (const DivergenceError& e) {
    // the exact solution 1/(1 - t) blows up at t = 1
    EXPECT_GT(e.time(), 0.5);
    EXPECT_LT(e.time(), 2.0);
    EXPECT_GE(e.stage(), 1);
    EXPECT_LE(e.stage(), 5);
  }
}

TEST(Integrate, RejectsBadArguments) {
  const std::vector<double> y0{1.0, 0.0};
  EXPECT_THROW(integrate(oscillator(), y0, 1.0, 0.5, 0.1), ArgumentError);
  EXPECT_THROW(integrate(oscillator(), y0, 0.0, 1.0, 0.0), ArgumentError);
  EXPECT_THROW(integrate(oscillator(), std::vector<double>{1.0}, 0.0, 1.0, 0.1), ArgumentError);
}

}  // namespace
}  // namespace mcbdqm
