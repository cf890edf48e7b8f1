#include "homroll/ode.hpp"

#include <algorithm>
#include <cmath>

#include "homroll/tolerances.hpp"

namespace homroll {

SteppedSolution::SteppedSolution(Vec times_in, std::vector<Vec> states_in)
    : times(std::move(times_in)), states(std::move(states_in)) {
  if (times.size() != states.size() || times.size() < 2)
    throw Error("SteppedSolution: need matching times/states with >= 2 samples");
  const double h = times[1] - times[0];
  if (!(h > 0.0)) throw Error("SteppedSolution: times must increase");
  const double scale = std::max(std::abs(times.front()), std::abs(times.back()));
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double hi = times[i] - times[i - 1];
    if (std::abs(hi - h) > tol::kUniformGridRelative * std::max(1.0, scale))
      throw Error("SteppedSolution: non-uniform grid");
  }
}

Vec SteppedSolution::sample_linear(double t) const {
  if (t <= times.front()) return states.front();
  if (t >= times.back()) return states.back();
  const double h = step();
  const auto idx = static_cast<std::size_t>((t - times.front()) / h);
  const std::size_t i = std::min(idx, times.size() - 2);
  const double w = (t - times[i]) / (times[i + 1] - times[i]);
  Vec out = states[i];
  vec_scale(1.0 - w, out);
  vec_axpy(w, states[i + 1], out);
  return out;
}

namespace {

Vec eval_rhs(const OdeRhs& f, double t, std::span<const double> y) {
  Vec dydt(y.size(), 0.0);
  f(t, y, dydt);
  if (!vec_all_finite(dydt)) throw NonFinite("rk4: RHS returned non-finite values");
  return dydt;
}

}  // namespace

Vec rk4_step(const OdeRhs& f, double t, std::span<const double> y, double h) {
  if (!(h > 0.0)) throw Error("rk4_step: step must be positive");
  const std::size_t n = y.size();

  Vec k1 = eval_rhs(f, t, y);

  Vec stage(y.begin(), y.end());
  vec_axpy(0.5 * h, k1, stage);
  Vec k2 = eval_rhs(f, t + 0.5 * h, stage);

  stage.assign(y.begin(), y.end());
  vec_axpy(0.5 * h, k2, stage);
  Vec k3 = eval_rhs(f, t + 0.5 * h, stage);

  stage.assign(y.begin(), y.end());
  vec_axpy(h, k3, stage);
  Vec k4 = eval_rhs(f, t + h, stage);

  Vec out(y.begin(), y.end());
  for (std::size_t i = 0; i < n; ++i)
    out[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

SteppedSolution integrate_fixed(const OdeRhs& f, double t0, double t1,
                                std::span<const double> y0, int steps) {
  if (!(t1 > t0)) throw Error("integrate_fixed: need t1 > t0");
  if (steps < 1) throw Error("integrate_fixed: need steps >= 1");
  const double h = (t1 - t0) / steps;

  Vec times(static_cast<std::size_t>(steps) + 1);
  std::vector<Vec> states;
  states.reserve(times.size());
  Vec y(y0.begin(), y0.end());
  times[0] = t0;
  states.push_back(y);
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * h;
    y = rk4_step(f, t, y, h);
    times[static_cast<std::size_t>(i) + 1] = (i + 1 == steps) ? t1 : t0 + (i + 1) * h;
    states.push_back(y);
  }
  return SteppedSolution(std::move(times), std::move(states));
}

}  // namespace homroll
