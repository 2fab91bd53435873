#include "mcbdqm/sine_gordon.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mcbdqm/errors.hpp"

namespace mcbdqm {
namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

constexpr double kBoundaryRateStep = 1e-6;
constexpr double kResidualStep = 1e-4;

ProblemSpec with_exact_boundaries(ProblemSpec spec, const FieldFunction& u_t) {
  const double a = spec.a;
  const double b = spec.b;
  const FieldFunction exact = spec.exact;
  spec.g1 = [exact, a](double t) { return exact(a, t); };
  spec.g2 = [exact, b](double t) { return exact(b, t); };
  spec.g1_dot = [u_t, a](double t) { return u_t(a, t); };
  spec.g2_dot = [u_t, b](double t) { return u_t(b, t); };
  return spec;
}

ProblemSpec travelling_kink(double c, double a, double b) {
  if (!(std::abs(c) < 1.0)) {
    std::ostringstream os;
    os << "example 2 needs |c| < 1, got c = " << c;
    throw ParameterError(os.str());
  }
  const double gamma = 1.0 / std::sqrt(1.0 - c * c);
  ProblemSpec spec;
  spec.label = "example 2: kink 4 atan(exp(gamma (x - c t)))";
  spec.a = a;
  spec.b = b;
  spec.c = c;
  spec.exact = [gamma, c](double x, double t) {
    return 4.0 * std::atan(std::exp(gamma * (x - c * t)));
  };
  // d/dt 4 atan(e^z) = 4 z_t e^z / (1 + e^{2z}) = 2 z_t / cosh z
  const FieldFunction u_t = [gamma, c](double x, double t) {
    return -2.0 * c * gamma * sech(gamma * (x - c * t));
  };
  spec.f1 = [gamma](double x) { return 4.0 * std::atan(std::exp(gamma * x)); };
  spec.f2 = [gamma, c](double x) { return -2.0 * c * gamma * sech(gamma * x); };
  return with_exact_boundaries(std::move(spec), u_t);
}

ProblemSpec breather(double c, double a, double b) {
  if (c == 0.0 || !std::isfinite(c)) {
    throw ParameterError("example 3 needs a finite nonzero c");
  }
  const double gamma = 1.0 / std::sqrt(1.0 + c * c);
  const double omega = gamma * c;
  ProblemSpec spec;
  spec.label = "example 3: breather 4 atan(sin(gamma c t) sech(gamma x) / c)";
  spec.a = a;
  spec.b = b;
  spec.c = c;
  spec.exact = [gamma, omega, c](double x, double t) {
    return 4.0 * std::atan(std::sin(omega * t) * sech(gamma * x) / c);
  };
  const FieldFunction u_t = [gamma, omega, c](double x, double t) {
    const double q = std::sin(omega * t) * sech(gamma * x) / c;
    return 4.0 * gamma * std::cos(omega * t) * sech(gamma * x) / (1.0 + q * q);
  };
  spec.f1 = [](double) { return 0.0; };
  spec.f2 = [gamma](double x) { return 4.0 * gamma * sech(gamma * x); };
  return with_exact_boundaries(std::move(spec), u_t);
}

ProblemSpec growing_pulse(double a, double b) {
  ProblemSpec spec;
  spec.label = "example 1: 4 atan(t sech x)";
  spec.a = a;
  spec.b = b;
  spec.exact = [](double x, double t) { return 4.0 * std::atan(t * sech(x)); };
  const FieldFunction u_t = [](double x, double t) {
    const double s = sech(x);
    return 4.0 * s / (1.0 + t * t * s * s);
  };
  spec.f1 = [](double) { return 0.0; };
  spec.f2 = [](double x) { return 4.0 * sech(x); };
  return with_exact_boundaries(std::move(spec), u_t);
}

}  // namespace

void ProblemSpec::check_compatibility() const {
  constexpr double tol = 1e-10;
  if (!f1 || !f2 || !g1 || !g2) {
    throw ParameterError("problem '" + label + "' is missing initial or boundary data");
  }
  if (std::abs(f1(a) - g1(0.0)) > tol || std::abs(f1(b) - g2(0.0)) > tol) {
    throw ParameterError("problem '" + label +
                         "': initial data and boundary data disagree at t = 0");
  }
}

ProblemSpec make_example(int id, double c, std::optional<std::pair<double, double>> domain) {
  auto range = [&](double a, double b) { return domain.value_or(std::make_pair(a, b)); };
  ProblemSpec spec;
  switch (id) {
    case 1: {
      const auto [a, b] = range(-1.0, 1.0);
      spec = growing_pulse(a, b);
      break;
    }
    case 2: {
      const auto [a, b] = range(-3.0, 3.0);
      spec = travelling_kink(c, a, b);
      break;
    }
    case 3: {
      const auto [a, b] = range(-10.0, 10.0);
      spec = breather(c, a, b);
      break;
    }
    default:
      throw ParameterError("unknown example id " + std::to_string(id) + " (expected 1, 2 or 3)");
  }
  if (!(spec.a < spec.b)) {
    throw ParameterError("example domain must satisfy a < b");
  }
  return spec;
}

ProblemSpec equilibrium_problem(double a, double b, double level) {
  ProblemSpec spec;
  spec.label = "equilibrium u = const";
  spec.a = a;
  spec.b = b;
  spec.f1 = [level](double) { return level; };
  spec.f2 = [](double) { return 0.0; };
  spec.g1 = [level](double) { return level; };
  spec.g2 = [level](double) { return level; };
  spec.g1_dot = [](double) { return 0.0; };
  spec.g2_dot = [](double) { return 0.0; };
  spec.exact = [level](double, double) { return level; };
  return spec;
}

double residual_check(const ProblemSpec& spec, std::size_t samples, std::uint64_t seed) {
  if (!spec.has_exact()) {
    throw ArgumentError("residual check needs an exact solution");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(spec.a + kResidualStep, spec.b - kResidualStep);
  std::uniform_real_distribution<double> ts(kResidualStep, 1.0);
  const auto& u = spec.exact;
  const double k2 = kResidualStep * kResidualStep;
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double x = xs(rng);
    const double t = ts(rng);
    const double centre = u(x, t);
    const double u_tt = (u(x, t + kResidualStep) - 2.0 * centre + u(x, t - kResidualStep)) / k2;
    const double u_xx = (u(x + kResidualStep, t) - 2.0 * centre + u(x - kResidualStep, t)) / k2;
    worst = std::max(worst, std::abs(u_tt - u_xx + std::sin(centre)));
  }
  return worst;
}

std::string_view to_string(BoundaryStaging staging) noexcept {
  return staging == BoundaryStaging::PerStage ? "stage" : "step";
}

BoundaryStaging parse_boundary_staging(std::string_view text) {
  if (text == "stage") return BoundaryStaging::PerStage;
  if (text == "step") return BoundaryStaging::PerStep;
  throw ArgumentError("unknown boundary staging '" + std::string(text) +
                      "' (expected stage or step)");
}

SineGordonSystem::SineGordonSystem(const WeightMatrices& weights, const ProblemSpec& spec,
                                   BoundaryStaging staging)
    : weights_(weights), spec_(spec), staging_(staging) {
  if (!spec.g1 || !spec.g2 || !spec.f1 || !spec.f2) {
    throw ArgumentError("problem '" + spec.label + "' is missing initial or boundary data");
  }
  const auto& grid = weights.grid;
  const double tol = 1e-12 * std::max(1.0, spec.b - spec.a);
  if (std::abs(grid.a() - spec.a) > tol || std::abs(grid.b() - spec.b) > tol) {
    std::ostringstream os;
    os << "grid [" << grid.a() << ", " << grid.b() << "] does not match the problem domain ["
       << spec.a << ", " << spec.b << "]";
    throw ArgumentError(os.str());
  }
  w2_support_.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) w2_support_.push_back(weights.w2.row_support(i));
}

void SineGordonSystem::rhs(double /*t*/, std::span<const double> y,
                           std::span<double> dydt) const {
  const std::size_t n = nodes();
  if (y.size() != 2 * n || dydt.size() != 2 * n) {
    throw ArgumentError("sine-Gordon state must have length 2N");
  }
  const auto u = y.first(n);
  const auto v = y.subspan(n);
  auto du = dydt.first(n);
  auto dv = dydt.subspan(n);
  const DenseMatrix& w2 = weights_.w2;
  du[0] = du[n - 1] = 0.0;
  dv[0] = dv[n - 1] = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    du[i] = v[i];
    const auto [begin, end] = w2_support_[i];
    dv[i] = w2.row_dot(i, u, begin, end) - std::sin(u[i]);
  }
}

double SineGordonSystem::boundary_rate(const TimeFunction& g, const TimeFunction& g_dot,
                                       double t) const {
  if (g_dot) return g_dot(t);
  return (g(t + kBoundaryRateStep) - g(t - kBoundaryRateStep)) / (2.0 * kBoundaryRateStep);
}

void SineGordonSystem::impose_boundary(double t, std::span<double> y) const {
  const std::size_t n = nodes();
  y[0] = spec_.g1(t);
  y[n - 1] = spec_.g2(t);
  y[n] = boundary_rate(spec_.g1, spec_.g1_dot, t);
  y[2 * n - 1] = boundary_rate(spec_.g2, spec_.g2_dot, t);
}

std::vector<double> SineGordonSystem::initial_state() const {
  const std::size_t n = nodes();
  std::vector<double> y(2 * n);
  const auto& grid = weights_.grid;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = spec_.f1(grid.node(i));
    y[n + i] = spec_.f2(grid.node(i));
  }
  impose_boundary(0.0, y);
  return y;
}

OdeSystem SineGordonSystem::ode() const {
  OdeSystem sys;
  sys.dimension = 2 * nodes();
  sys.rhs = [this](double t, std::span<const double> y, std::span<double> dydt) {
    rhs(t, y, dydt);
  };
  auto impose = [this](double t, std::span<double> y) { impose_boundary(t, y); };
  if (staging_ == BoundaryStaging::PerStage) {
    sys.post_stage = impose;
  } else {
    sys.post_step = impose;
  }
  return sys;
}

void rhs(const WeightMatrices& weights, const ProblemSpec& spec, double t,
         std::span<const double> y, std::span<double> dydt) {
  SineGordonSystem(weights, spec).rhs(t, y, dydt);
}

std::vector<State> solve(const ProblemSpec& spec, const UniformGrid& grid,
                         const SolveOptions& options) {
  const WeightMatrices weights = WeightMatrices::build(grid, options.w2_method);
  return solve(spec, weights, options);
}

std::vector<State> solve(const ProblemSpec& spec, const WeightMatrices& weights,
                         const SolveOptions& options) {
  const SineGordonSystem system(weights, spec, options.staging);
  const std::vector<double> y0 = system.initial_state();
  const auto samples =
      integrate(system.ode(), y0, 0.0, options.t_end, options.dt, options.snapshot_times);
  const std::size_t n = system.nodes();
  std::vector<State> states;
  states.reserve(samples.size());
  for (const auto& sample : samples) {
    State s;
    s.t = sample.t;
    s.u.assign(sample.y.begin(), sample.y.begin() + static_cast<std::ptrdiff_t>(n));
    s.v.assign(sample.y.begin() + static_cast<std::ptrdiff_t>(n), sample.y.end());
    states.push_back(std::move(s));
  }
  return states;
}

}  // namespace mcbdqm
