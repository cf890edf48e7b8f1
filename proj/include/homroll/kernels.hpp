#pragma once

#include <string>
#include <string_view>
#include <vector>

// Low-level dense kernels on row-major double buffers. A scalar reference
// lane is always available; an AVX2/FMA lane is compiled on x86-64 and
// selected at runtime (or via HOMROLL_KERNELS=scalar|avx2). Higher layers
// only call the dispatching wrappers.

namespace homroll::kernels {

struct Ops {
  // C (m x n) = A (m x k) * B (k x n); C must not alias A or B.
  void (*gemm)(int m, int k, int n, const double* a, const double* b, double* c);
  double (*dot)(int n, const double* x, const double* y);
  // y += alpha * x
  void (*axpy)(int n, double alpha, const double* x, double* y);
  // x *= alpha
  void (*scal)(int n, double alpha, double* x);
  const char* name;
};

namespace scalar {
void gemm(int m, int k, int n, const double* a, const double* b, double* c);
double dot(int n, const double* x, const double* y);
void axpy(int n, double alpha, const double* x, double* y);
void scal(int n, double alpha, double* x);
}  // namespace scalar

#ifdef HOMROLL_HAVE_AVX2
namespace avx2 {
void gemm(int m, int k, int n, const double* a, const double* b, double* c);
double dot(int n, const double* x, const double* y);
void axpy(int n, double alpha, const double* x, double* y);
void scal(int n, double alpha, double* x);
}  // namespace avx2
bool cpu_supports_avx2();
#endif

const Ops& active();
// "scalar", "avx2" or "auto"; throws ConfigError for unknown/unavailable names.
void select_backend(std::string_view name);
std::vector<std::string> available_backends();

inline void gemm(int m, int k, int n, const double* a, const double* b, double* c) {
  active().gemm(m, k, n, a, b, c);
}
inline double dot(int n, const double* x, const double* y) { return active().dot(n, x, y); }
inline void axpy(int n, double alpha, const double* x, double* y) {
  active().axpy(n, alpha, x, y);
}
inline void scal(int n, double alpha, double* x) { active().scal(n, alpha, x); }

}  // namespace homroll::kernels
