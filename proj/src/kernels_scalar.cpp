#include "nss/kernels.hpp"

namespace nss {
namespace kernels {

void apply_op_scalar(cd* y, const cd* x, std::size_t A, std::size_t dout,
                     std::size_t din, std::size_t B, const cd* M) {
  for (std::size_t a = 0; a < A; ++a) {
    const cd* xa = x + a * din * B;
    cd* ya = y + a * dout * B;
    for (std::size_t o = 0; o < dout; ++o) {
      cd* yo = ya + o * B;
      for (std::size_t b = 0; b < B; ++b) yo[b] = cd(0.0, 0.0);
      const cd* Mo = M + o * din;
      for (std::size_t i = 0; i < din; ++i) {
        const cd m = Mo[i];
        if (m == cd(0.0, 0.0)) continue;
        const cd* xi = xa + i * B;
        for (std::size_t b = 0; b < B; ++b) yo[b] += m * xi[b];
      }
    }
  }
}

}  // namespace kernels
}  // namespace nss
