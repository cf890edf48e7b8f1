#pragma once

#include <functional>
#include <span>

#include "homroll/matrix.hpp"

namespace homroll {

// Uniform-grid solution record. times.size() == states.size() >= 2 and the
// grid is uniform to relative 1e-12.
struct SteppedSolution {
  Vec times;
  std::vector<Vec> states;

  SteppedSolution() = default;
  SteppedSolution(Vec times, std::vector<Vec> states);  // checked

  double step() const { return times[1] - times[0]; }
  double t0() const { return times.front(); }
  double t1() const { return times.back(); }
  // Piecewise-linear sample; clamps outside [t0, t1].
  Vec sample_linear(double t) const;
};

using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

// One classical 4th-order Runge-Kutta update.
Vec rk4_step(const OdeRhs& f, double t, std::span<const double> y, double h);

// Fixed-step RK4 over a uniform grid; returns every intermediate state
// including both endpoints.
SteppedSolution integrate_fixed(const OdeRhs& f, double t0, double t1,
                                std::span<const double> y0, int steps);

}  // namespace homroll
