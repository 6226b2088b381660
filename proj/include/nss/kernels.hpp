#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace nss {
namespace kernels {

using cd = std::complex<double>;

// Core contraction kernel of the tangle evaluator.  The boundary state is a
// dense tensor x of shape (A, din, B); an event applies a dout x din matrix M
// to the middle axis:
//
//   y[a, o, b] = sum_i M[o*din + i] * x[a, i, b]
//
// Cups are din == 1 (outer insertion), caps are dout == 1 (contraction),
// crossings are square with din == dout.  y and x must not alias.
using ApplyFn = void (*)(cd* y, const cd* x, std::size_t A, std::size_t dout,
                         std::size_t din, std::size_t B, const cd* M);

void apply_op_scalar(cd* y, const cd* x, std::size_t A, std::size_t dout,
                     std::size_t din, std::size_t B, const cd* M);
#ifdef NSS_HAVE_AVX2
void apply_op_avx2(cd* y, const cd* x, std::size_t A, std::size_t dout,
                   std::size_t din, std::size_t B, const cd* M);
#endif

// Dispatched entry point; picks the widest variant the CPU supports on first
// use.  set_forced_kernel overrides selection (tests, benchmarking).
void apply_op(cd* y, const cd* x, std::size_t A, std::size_t dout,
              std::size_t din, std::size_t B, const cd* M);

enum class Kernel { automatic, scalar, avx2 };
void set_forced_kernel(Kernel k);
std::string active_kernel_name();

}  // namespace kernels
}  // namespace nss
