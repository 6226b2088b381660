#include "nss/kernels.hpp"

#ifdef NSS_HAVE_AVX2

#include <immintrin.h>

namespace nss {
namespace kernels {

namespace {

// y += m * x over a contiguous run of n complex doubles, 2 lanes per vector.
// Interleaved complex product: re' = mr*xr - mi*xi, im' = mr*xi + mi*xr,
// realized with a lane swap and addsub.
inline void caxpy_run(cd* y, const cd* x, cd m, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d mr = _mm256_set1_pd(m.real());
  const __m256d mi = _mm256_set1_pd(m.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d v = _mm256_loadu_pd(xp + 2 * k);
    __m256d sw = _mm256_permute_pd(v, 0x5);  // [im0 re0 im1 re1]
    __m256d t = _mm256_addsub_pd(_mm256_mul_pd(mr, v), _mm256_mul_pd(mi, sw));
    __m256d acc = _mm256_loadu_pd(yp + 2 * k);
    _mm256_storeu_pd(yp + 2 * k, _mm256_add_pd(acc, t));
  }
  for (; k < n; ++k) y[k] += m * x[k];
}

}  // namespace

void apply_op_avx2(cd* y, const cd* x, std::size_t A, std::size_t dout,
                   std::size_t din, std::size_t B, const cd* M) {
  if (B < 2) {
    apply_op_scalar(y, x, A, dout, din, B, M);
    return;
  }
  for (std::size_t a = 0; a < A; ++a) {
    const cd* xa = x + a * din * B;
    cd* ya = y + a * dout * B;
    for (std::size_t o = 0; o < dout; ++o) {
      cd* yo = ya + o * B;
      for (std::size_t b = 0; b < B; ++b) yo[b] = cd(0.0, 0.0);
      const cd* Mo = M + o * din;
      for (std::size_t i = 0; i < din; ++i) {
        if (Mo[i] == cd(0.0, 0.0)) continue;
        caxpy_run(yo, xa + i * B, Mo[i], B);
      }
    }
  }
}

}  // namespace kernels
}  // namespace nss

#endif  // NSS_HAVE_AVX2
