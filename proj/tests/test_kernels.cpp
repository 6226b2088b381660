#include <doctest.h>

#include <random>

#include "nss/kernels.hpp"

using namespace nss;
using kernels::cd;

namespace {

std::vector<cd> random_vec(size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> v(n);
  for (auto& x : v) x = cd(u(rng), u(rng));
  return v;
}

}  // namespace

TEST_CASE("scalar and simd kernels agree on random shapes") {
  std::mt19937 rng(1234);
  // cup-, cap- and crossing-shaped applications, odd tails included
  struct Shape {
    size_t A, dout, din, B;
  };
  for (Shape s : {Shape{1, 16, 1, 1}, Shape{3, 1, 16, 5}, Shape{2, 16, 16, 7},
                  Shape{5, 4, 4, 1}, Shape{1, 64, 64, 3}, Shape{7, 9, 9, 2},
                  Shape{4, 1, 1, 8}, Shape{2, 64, 64, 64}}) {
    auto x = random_vec(s.A * s.din * s.B, rng);
    auto m = random_vec(s.dout * s.din, rng);
    std::vector<cd> y1(s.A * s.dout * s.B), y2 = y1;
    kernels::apply_op_scalar(y1.data(), x.data(), s.A, s.dout, s.din, s.B, m.data());
    kernels::set_forced_kernel(kernels::Kernel::avx2);
    kernels::apply_op(y2.data(), x.data(), s.A, s.dout, s.din, s.B, m.data());
    kernels::set_forced_kernel(kernels::Kernel::automatic);
    double err = 0, scale = 0;
    for (size_t i = 0; i < y1.size(); ++i) {
      err = std::max(err, std::abs(y1[i] - y2[i]));
      scale = std::max(scale, std::abs(y1[i]));
    }
    CHECK(err <= 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("kernel matches a hand matrix-vector product") {
  // y[a,o,b] = sum_i M[o,i] x[a,i,b] checked against explicit loops
  std::mt19937 rng(99);
  size_t A = 2, dout = 3, din = 4, B = 3;
  auto x = random_vec(A * din * B, rng);
  auto m = random_vec(dout * din, rng);
  std::vector<cd> y(A * dout * B);
  kernels::apply_op(y.data(), x.data(), A, dout, din, B, m.data());
  for (size_t a = 0; a < A; ++a)
    for (size_t o = 0; o < dout; ++o)
      for (size_t b = 0; b < B; ++b) {
        cd acc(0, 0);
        for (size_t i = 0; i < din; ++i) acc += m[o * din + i] * x[(a * din + i) * B + b];
        CHECK(std::abs(acc - y[(a * dout + o) * B + b]) < 1e-12);
      }
}
