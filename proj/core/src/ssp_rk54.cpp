#include "mcbdqm/ssp_rk54.hpp"

#include <algorithm>
#include <cmath>

#include "mcbdqm/errors.hpp"

namespace mcbdqm {

const SspRk54Tableau& SspRk54Tableau::optimal() {
  static const SspRk54Tableau tableau = [] {
    SspRk54Tableau t;
    t.alpha[0] = {1.0, 0.0, 0.0, 0.0, 0.0};
    t.alpha[1] = {0.444370493651235, 0.555629506348765, 0.0, 0.0, 0.0};
    t.alpha[2] = {0.620101851488403, 0.0, 0.379898148511597, 0.0, 0.0};
    t.alpha[3] = {0.178079954393132, 0.0, 0.0, 0.821920045606868, 0.0};
    // last weight closes the convex combination (published: 0.386708617503269)
    t.alpha[4] = {0.0, 0.0, 0.517231671970585, 0.096059710526147,
                  1.0 - 0.517231671970585 - 0.096059710526147};
    t.beta[0] = {0.391752226571890, 0.0, 0.0, 0.0, 0.0};
    t.beta[1] = {0.0, 0.368410593050371, 0.0, 0.0, 0.0};
    t.beta[2] = {0.0, 0.0, 0.251891774271694, 0.0, 0.0};
    t.beta[3] = {0.0, 0.0, 0.0, 0.544974750228521, 0.0};
    t.beta[4] = {0.0, 0.0, 0.0, 0.063692468666290, 0.226007483236906};
    t.source = "SSPRK(5,4), Spiteri & Ruuth (2002), Shu-Osher form";
    return t;
  }();
  return tableau;
}

std::array<std::array<double, SspRk54Tableau::kStages>, SspRk54Tableau::kStages>
SspRk54Tableau::butcher_a() const {
  std::array<std::array<double, kStages>, kStages> a{};
  // A[i][m] = beta[i-1][m] + sum_k alpha[i-1][k] A[k][m], row 0 is zero
  for (int i = 1; i < kStages; ++i) {
    for (int m = 0; m < i; ++m) {
      double v = beta[i - 1][m];
      for (int k = 0; k < i; ++k) v += alpha[i - 1][k] * a[k][m];
      a[i][m] = v;
    }
  }
  return a;
}

std::array<double, SspRk54Tableau::kStages> SspRk54Tableau::butcher_b() const {
  const auto a = butcher_a();
  std::array<double, kStages> b{};
  for (int m = 0; m < kStages; ++m) {
    double v = beta[kStages - 1][m];
    for (int k = 0; k < kStages; ++k) v += alpha[kStages - 1][k] * a[k][m];
    b[m] = v;
  }
  return b;
}

std::array<double, SspRk54Tableau::kStages> SspRk54Tableau::abscissae() const {
  const auto a = butcher_a();
  std::array<double, kStages> c{};
  for (int i = 0; i < kStages; ++i) {
    for (int m = 0; m < kStages; ++m) c[i] += a[i][m];
  }
  return c;
}

SspRk54Stepper::SspRk54Stepper(const SspRk54Tableau& tableau)
    : tableau_(tableau), c_(tableau.abscissae()) {
  constexpr int s = SspRk54Tableau::kStages;
  for (int k = 0; k < s; ++k) {
    for (int i = k; i < s; ++i) {
      if (tableau_.beta[i][k] != 0.0) slope_needed_[k] = true;
    }
  }
}

void SspRk54Stepper::step(const OdeSystem& sys, double t, std::span<double> y, double dt) {
  constexpr int s = SspRk54Tableau::kStages;
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ArgumentError("time step must be positive and finite");
  }
  const std::size_t n = y.size();
  if (n != sys.dimension) {
    throw ArgumentError("state length does not match the ODE system dimension");
  }
  for (int k = 0; k < s; ++k) {
    stage_[k].resize(n);
    if (slope_needed_[k]) slope_[k].resize(n);
  }
  std::copy(y.begin(), y.end(), stage_[0].begin());

  for (int i = 1; i <= s; ++i) {
    const int k_new = i - 1;
    if (slope_needed_[k_new]) {
      sys.rhs(t + c_[k_new] * dt, stage_[k_new], slope_[k_new]);
    }
    const auto& alpha = tableau_.alpha[i - 1];
    const auto& beta = tableau_.beta[i - 1];
    std::span<double> out = i < s ? std::span<double>(stage_[i]) : y;
    std::fill(out.begin(), out.end(), 0.0);
    for (int k = 0; k < i; ++k) {
      if (alpha[k] != 0.0) {
        const double a = alpha[k];
        const double* src = stage_[k].data();
        for (std::size_t e = 0; e < n; ++e) out[e] += a * src[e];
      }
      if (beta[k] != 0.0) {
        const double b = beta[k] * dt;
        const double* src = slope_[k].data();
        for (std::size_t e = 0; e < n; ++e) out[e] += b * src[e];
      }
    }
    const double stage_time = i < s ? t + c_[i] * dt : t + dt;
    if (sys.post_stage) sys.post_stage(stage_time, out);
    if (!std::all_of(out.begin(), out.end(), [](double v) { return std::isfinite(v); })) {
      throw DivergenceError(i, t);
    }
  }
  if (sys.post_step) sys.post_step(t + dt, y);
}

std::vector<double> ssprk54_step(const OdeSystem& sys, double t, std::span<const double> y,
                                 double dt) {
  std::vector<double> out(y.begin(), y.end());
  SspRk54Stepper stepper;
  stepper.step(sys, t, out, dt);
  return out;
}

std::vector<TimeSample> integrate(const OdeSystem& sys, std::span<const double> y0, double t0,
                                  double t_end, double dt, std::span<const double> observers) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ArgumentError("time step must be positive and finite");
  }
  if (!(t_end >= t0)) {
    throw ArgumentError("integration end time precedes the start time");
  }
  if (y0.size() != sys.dimension) {
    throw ArgumentError("initial state length does not match the ODE system dimension");
  }

  std::vector<double> targets;
  for (double t_obs : observers) {
    if (t_obs >= t0 && t_obs <= t_end) targets.push_back(t_obs);
  }
  targets.push_back(t_end);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  std::vector<TimeSample> samples;
  samples.reserve(targets.size());
  std::vector<double> y(y0.begin(), y0.end());
  SspRk54Stepper stepper;
  double t = t0;
  // a step within this fraction of dt of the target is stretched/shrunk to land on it
  constexpr double kLandingSlack = 1e-9;

  for (double target : targets) {
    const double segment_start = t;
    std::size_t steps = 0;
    while (t < target) {
      const double remaining = target - t;
      if (remaining <= dt * (1.0 + kLandingSlack)) {
        stepper.step(sys, t, y, remaining);
        t = target;
        break;
      }
      stepper.step(sys, t, y, dt);
      ++steps;
      t = segment_start + static_cast<double>(steps) * dt;
    }
    samples.push_back(TimeSample{target, y});
  }
  return samples;
}

}  // namespace mcbdqm
