#pragma once

#include <functional>

#include "homroll/matrix.hpp"

namespace homroll {

// Composite Simpson rule for vector-valued integrands; `panels` counts the
// subintervals of the uniform grid and must be even.
Vec quad_simpson(const std::function<Vec(double)>& f, double t0, double t1, int panels);

}  // namespace homroll
