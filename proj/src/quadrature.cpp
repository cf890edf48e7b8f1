#include "homroll/quadrature.hpp"

namespace homroll {

Vec quad_simpson(const std::function<Vec(double)>& f, double t0, double t1, int panels) {
  if (panels < 2 || panels % 2 != 0)
    throw OddPanels("quad_simpson: panel count must be even and positive");
  const double h = (t1 - t0) / panels;

  Vec acc = f(t0);
  Vec tail = f(t1);
  vec_axpy(1.0, tail, acc);
  for (int i = 1; i < panels; ++i) {
    const double w = (i % 2 == 1) ? 4.0 : 2.0;
    Vec fi = f(t0 + i * h);
    vec_axpy(w, fi, acc);
  }
  vec_scale(h / 3.0, acc);
  if (!vec_all_finite(acc)) throw NonFinite("quad_simpson: non-finite integrand");
  return acc;
}

}  // namespace homroll
