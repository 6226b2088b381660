#include "nss/kernels.hpp"

#include <atomic>

namespace nss {
namespace kernels {

namespace {

std::atomic<Kernel> g_forced{Kernel::automatic};

ApplyFn pick() {
#ifdef NSS_HAVE_AVX2
  if (__builtin_cpu_supports("avx2")) return &apply_op_avx2;
#endif
  return &apply_op_scalar;
}

ApplyFn resolve() {
  switch (g_forced.load(std::memory_order_relaxed)) {
    case Kernel::scalar:
      return &apply_op_scalar;
    case Kernel::avx2:
#ifdef NSS_HAVE_AVX2
      return &apply_op_avx2;
#else
      return &apply_op_scalar;
#endif
    case Kernel::automatic:
    default: {
      static ApplyFn best = pick();
      return best;
    }
  }
}

}  // namespace

void apply_op(cd* y, const cd* x, std::size_t A, std::size_t dout,
              std::size_t din, std::size_t B, const cd* M) {
  resolve()(y, x, A, dout, din, B, M);
}

void set_forced_kernel(Kernel k) { g_forced.store(k, std::memory_order_relaxed); }

std::string active_kernel_name() {
#ifdef NSS_HAVE_AVX2
  if (resolve() == &apply_op_avx2) return "avx2";
#endif
  return "scalar";
}

}  // namespace kernels
}  // namespace nss
