#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace mcbdqm {

/// Shu-Osher coefficients of an explicit five-stage Runge-Kutta method:
///   y^(0) = y_n
///   y^(i) = sum_{k<i} alpha[i-1][k] y^(k) + dt * beta[i-1][k] F(t_n + c_k dt, y^(k))
///   y_{n+1} = y^(5)
struct SspRk54Tableau {
  static constexpr int kStages = 5;

  std::array<std::array<double, kStages>, kStages> alpha{};
  std::array<std::array<double, kStages>, kStages> beta{};
  std::string_view source;

  /// Optimal SSPRK(5,4) of Spiteri and Ruuth (SSP coefficient 1.508).
  static const SspRk54Tableau& optimal();

  /// Equivalent Butcher matrix A (strictly lower triangular) and weights b.
  std::array<std::array<double, kStages>, kStages> butcher_a() const;
  std::array<double, kStages> butcher_b() const;
  /// Stage abscissae c_k = sum_m A[k][m]; c_0 = 0.
  std::array<double, kStages> abscissae() const;
};

/// y' = F(t, y) with optional hooks. post_stage runs on every stage value
/// (including the final one) at that stage's time level; post_step runs once
/// on the completed step.
struct OdeSystem {
  using Rhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;
  using Hook = std::function<void(double t, std::span<double> y)>;

  std::size_t dimension = 0;
  Rhs rhs;
  Hook post_stage;
  Hook post_step;
};

/// Advances one SSP-RK54 step in place. Keeps its stage storage between
/// calls; one stepper must not be shared between threads.
class SspRk54Stepper {
 public:
  explicit SspRk54Stepper(const SspRk54Tableau& tableau = SspRk54Tableau::optimal());

  /// y <- y(t + dt). Throws ArgumentError for dt <= 0 or size mismatch and
  /// DivergenceError(stage, t) when a stage produces a non-finite value.
  void step(const OdeSystem& sys, double t, std::span<double> y, double dt);

  const SspRk54Tableau& tableau() const noexcept { return tableau_; }

 private:
  const SspRk54Tableau& tableau_;
  std::array<double, SspRk54Tableau::kStages> c_{};
  std::array<std::vector<double>, SspRk54Tableau::kStages> stage_;
  std::array<std::vector<double>, SspRk54Tableau::kStages> slope_;
  std::array<bool, SspRk54Tableau::kStages> slope_needed_{};
};

std::vector<double> ssprk54_step(const OdeSystem& sys, double t, std::span<const double> y,
                                 double dt);

struct TimeSample {
  double t;
  std::vector<double> y;
};

/// Fixed-step integration from t0 to t_end. Steps are shortened so that each
/// observer time in [t0, t_end] and t_end itself are hit exactly; returns one
/// sample per distinct recorded time in increasing order.
std::vector<TimeSample> integrate(const OdeSystem& sys, std::span<const double> y0, double t0,
                                  double t_end, double dt, std::span<const double> observers = {});

}  // namespace mcbdqm
