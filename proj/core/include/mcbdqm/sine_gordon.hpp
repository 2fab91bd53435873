#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcbdqm/dq_weights.hpp"
#include "mcbdqm/grid.hpp"
#include "mcbdqm/ssp_rk54.hpp"

namespace mcbdqm {

// u_tt = u_xx - sin(u) on [a, b] with
//   u(x, 0) = f1(x), u_t(x, 0) = f2(x), u(a, t) = g1(t), u(b, t) = g2(t).

using SpaceFunction = std::function<double(double x)>;
using TimeFunction = std::function<double(double t)>;
using FieldFunction = std::function<double(double x, double t)>;

struct ProblemSpec {
  std::string label;
  double a = 0.0;
  double b = 1.0;
  /// Wave-speed parameter of the soliton/breather examples; unused otherwise.
  double c = 0.0;
  SpaceFunction f1;
  SpaceFunction f2;
  TimeFunction g1;
  TimeFunction g2;
  /// Optional analytic time derivatives of g1, g2; a central difference is used otherwise.
  TimeFunction g1_dot;
  TimeFunction g2_dot;
  /// Optional exact solution.
  FieldFunction exact;

  bool has_exact() const noexcept { return static_cast<bool>(exact); }

  /// Throws ParameterError when the initial and boundary data disagree at
  /// the corners (f1(a) vs g1(0), f1(b) vs g2(0)) beyond 1e-10.
  void check_compatibility() const;
};

/// The three benchmark problems:
///   1: u = 4 atan(t sech x)                              on [-1, 1]
///   2: u = 4 atan(exp(g (x - c t))),  g = 1/sqrt(1 - c^2)  on [-3, 3], |c| < 1
///   3: u = 4 atan(sin(g c t) sech(g x) / c), g = 1/sqrt(1 + c^2) on [-10, 10], c != 0
/// Boundary data is the exact solution restricted to the ends. `domain`
/// overrides the default interval. Throws ParameterError for a bad id or c.
ProblemSpec make_example(int id, double c = 0.5,
                         std::optional<std::pair<double, double>> domain = std::nullopt);

/// Constant equilibrium u = level, v = 0 (level = 2 pi k is a rest state;
/// level = 0 is the zero problem).
ProblemSpec equilibrium_problem(double a, double b, double level = 0.0);

/// Max of |u_tt - u_xx + sin u| of the exact solution over `samples` random
/// points (x in (a, b), t in (0, 1]), derivatives by central differences with
/// step 1e-4. Throws ArgumentError when the spec has no exact solution.
double residual_check(const ProblemSpec& spec, std::size_t samples, std::uint64_t seed = 20140611);

enum class BoundaryStaging {
  PerStage,  ///< Dirichlet values re-imposed after every Runge-Kutta stage
  PerStep,   ///< only after each completed step
};

std::string_view to_string(BoundaryStaging staging) noexcept;
BoundaryStaging parse_boundary_staging(std::string_view text);

/// Method-of-lines system for the packed state y = (u_1..u_N, v_1..v_N).
/// Holds references: `weights` and `spec` must outlive it.
class SineGordonSystem {
 public:
  SineGordonSystem(const WeightMatrices& weights, const ProblemSpec& spec,
                   BoundaryStaging staging = BoundaryStaging::PerStage);

  std::size_t nodes() const noexcept { return weights_.grid.size(); }

  /// (u', v') = (v, w2 u - sin u) on interior nodes, zero on the two boundary nodes.
  void rhs(double t, std::span<const double> y, std::span<double> dydt) const;

  /// u_1 <- g1(t), u_N <- g2(t), v_1 <- g1'(t), v_N <- g2'(t).
  void impose_boundary(double t, std::span<double> y) const;

  std::vector<double> initial_state() const;

  OdeSystem ode() const;

 private:
  double boundary_rate(const TimeFunction& g, const TimeFunction& g_dot, double t) const;

  const WeightMatrices& weights_;
  const ProblemSpec& spec_;
  BoundaryStaging staging_;
  /// Nonzero column range of each w2 row; the products skip exact zeros.
  std::vector<std::pair<std::size_t, std::size_t>> w2_support_;
};

/// Free-function form of SineGordonSystem::rhs. Throws ArgumentError unless
/// y and dydt have length 2N.
void rhs(const WeightMatrices& weights, const ProblemSpec& spec, double t,
         std::span<const double> y, std::span<double> dydt);

struct State {
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> v;
};

struct SolveOptions {
  double dt = 1e-4;
  double t_end = 1.0;
  SecondDerivativeMethod w2_method = SecondDerivativeMethod::ShuRecurrence;
  /// Extra output times in [0, t_end]; t_end is always reported.
  std::vector<double> snapshot_times;
  BoundaryStaging staging = BoundaryStaging::PerStage;
};

/// Builds the weights for `grid` and integrates. Snapshots land exactly on
/// the requested times. Throws ArgumentError when the grid does not span the
/// problem domain and DivergenceError if the solution blows up.
std::vector<State> solve(const ProblemSpec& spec, const UniformGrid& grid,
                         const SolveOptions& options);

/// Same, reusing prebuilt weights (options.w2_method is ignored).
std::vector<State> solve(const ProblemSpec& spec, const WeightMatrices& weights,
                         const SolveOptions& options);

}  // namespace mcbdqm
