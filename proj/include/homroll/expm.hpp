#pragma once

#include "homroll/matrix.hpp"

namespace homroll {

// Matrix exponential by scaling-and-squaring around a degree-13 Pade
// approximant. The squaring count is picked from the 1-norm of the input.
Mat mat_exp(const Mat& a);

}  // namespace homroll
