#include "homroll/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "homroll/errors.hpp"

namespace homroll::kernels {

namespace {

constexpr Ops kScalarOps{scalar::gemm, scalar::dot, scalar::axpy, scalar::scal, "scalar"};

#ifdef HOMROLL_HAVE_AVX2
constexpr Ops kAvx2Ops{avx2::gemm, avx2::dot, avx2::axpy, avx2::scal, "avx2"};
#endif

const Ops* detect() {
  if (const char* env = std::getenv("HOMROLL_KERNELS")) {
    std::string_view want(env);
    if (want == "scalar") return &kScalarOps;
#ifdef HOMROLL_HAVE_AVX2
    if (want == "avx2" && cpu_supports_avx2()) return &kAvx2Ops;
#endif
    // Unknown or unavailable request from the environment: fall through.
  }
#ifdef HOMROLL_HAVE_AVX2
  if (cpu_supports_avx2()) return &kAvx2Ops;
#endif
  return &kScalarOps;
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& active() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (!ops) {
    ops = detect();
    g_active.store(ops, std::memory_order_release);
  }
  return *ops;
}

void select_backend(std::string_view name) {
  if (name == "auto") {
    g_active.store(detect(), std::memory_order_release);
    return;
  }
  if (name == "scalar") {
    g_active.store(&kScalarOps, std::memory_order_release);
    return;
  }
#ifdef HOMROLL_HAVE_AVX2
  if (name == "avx2") {
    if (!cpu_supports_avx2()) throw ConfigError("kernel backend 'avx2' not supported by this CPU");
    g_active.store(&kAvx2Ops, std::memory_order_release);
    return;
  }
#endif
  throw ConfigError("unknown kernel backend: " + std::string(name));
}

std::vector<std::string> available_backends() {
  std::vector<std::string> out{"scalar"};
#ifdef HOMROLL_HAVE_AVX2
  if (cpu_supports_avx2()) out.emplace_back("avx2");
#endif
  return out;
}

}  // namespace homroll::kernels
