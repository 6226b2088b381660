#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

namespace nss {

// Dense integer matrix, row-major.  Linking matrices are tiny (a handful of
// components), so int64 with overflow-free algorithms is plenty.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  long long& at(int i, int j) { return a[(size_t)i * cols + j]; }
  long long at(int i, int j) const { return a[(size_t)i * cols + j]; }
  static IntMat identity(int n);
  IntMat mul(const IntMat& o) const;
  bool symmetric() const;
};

// Smith normal form with transforms: D = U * B * V, U and V unimodular,
// D diagonal with d_i | d_{i+1}, d_i >= 0.
struct SmithNF {
  IntMat D, U, V;
};
SmithNF smith_normal_form(const IntMat& B);

// Signature of a symmetric integer matrix by congruence diagonalization over
// exact rationals.  Zero-diagonal rows with a nonzero off-diagonal pivot are
// handled as hyperbolic 2x2 blocks contributing (+1, -1).
// Returns (b_plus, b_zero, b_minus).
std::tuple<int, int, int> signature_counts(const IntMat& B);

}  // namespace nss
