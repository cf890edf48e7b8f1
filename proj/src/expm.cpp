#include "homroll/expm.hpp"

#include <cmath>

#include "homroll/linalg.hpp"

namespace homroll {

namespace {

// Degree-13 Pade numerator coefficients.
constexpr double kB[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                         1187353796428800.0,  129060195264000.0,   10559470521600.0,
                         670442572800.0,      33522128640.0,       1323241920.0,
                         40840800.0,          960960.0,            16380.0,
                         182.0,               1.0};

// 1-norm threshold below which the degree-13 approximant alone reaches
// double-precision accuracy.
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

Mat mat_exp(const Mat& a) {
  require_square(a, "mat_exp");
  require_finite(a, "mat_exp");
  const int n = a.rows();
  if (n == 0) return Mat(0, 0);

  const double norm = a.one_norm();
  int squarings = 0;
  Mat x = a;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    x *= std::ldexp(1.0, -squarings);
  }

  const Mat ident = Mat::identity(n);
  const Mat x2 = x * x;
  const Mat x4 = x2 * x2;
  const Mat x6 = x4 * x2;

  Mat u = x * (x6 * (kB[13] * x6 + kB[11] * x4 + kB[9] * x2) + kB[7] * x6 + kB[5] * x4 +
               kB[3] * x2 + kB[1] * ident);
  Mat v = x6 * (kB[12] * x6 + kB[10] * x4 + kB[8] * x2) + kB[6] * x6 + kB[4] * x4 +
          kB[2] * x2 + kB[0] * ident;

  Mat result = lu_solve(v - u, v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace homroll
