#include "nss/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "nss/errors.hpp"

namespace nss {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::mul(const IntMat& o) const {
  if (cols != o.rows) fail_invalid("IntMat::mul: dimension mismatch");
  IntMat out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      long long v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

bool IntMat::symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

void row_swap(IntMat& m, int i, int j) {
  for (int k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}
void col_swap(IntMat& m, int i, int j) {
  for (int k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
}
void row_addmul(IntMat& m, int dst, int src, long long f) {
  for (int k = 0; k < m.cols; ++k) m.at(dst, k) += f * m.at(src, k);
}
void col_addmul(IntMat& m, int dst, int src, long long f) {
  for (int k = 0; k < m.rows; ++k) m.at(k, dst) += f * m.at(k, src);
}
void row_negate(IntMat& m, int i) {
  for (int k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
}

}  // namespace

SmithNF smith_normal_form(const IntMat& B) {
  SmithNF s;
  s.D = B;
  s.U = IntMat::identity(B.rows);
  s.V = IntMat::identity(B.cols);
  IntMat& D = s.D;
  int n = std::min(B.rows, B.cols);

  for (int t = 0; t < n; ++t) {
    // find a pivot: smallest nonzero |entry| in the remaining block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < D.rows; ++i)
      for (int j = t; j < D.cols; ++j) {
        long long v = std::llabs(D.at(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      row_swap(D, pi, t);
      row_swap(s.U, pi, t);
    }
    if (pj != t) {
      col_swap(D, pj, t);
      col_swap(s.V, pj, t);
    }
    // reduce row/column until the pivot divides everything it meets
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < D.rows; ++i) {
        if (D.at(i, t) == 0) continue;
        long long f = D.at(i, t) / D.at(t, t);
        row_addmul(D, i, t, -f);
        row_addmul(s.U, i, t, -f);
        if (D.at(i, t) != 0) {  // remainder smaller than pivot: swap up, restart
          row_swap(D, i, t);
          row_swap(s.U, i, t);
          again = true;
        }
      }
      for (int j = t + 1; j < D.cols; ++j) {
        if (D.at(t, j) == 0) continue;
        long long f = D.at(t, j) / D.at(t, t);
        col_addmul(D, j, t, -f);
        col_addmul(s.V, j, t, -f);
        if (D.at(t, j) != 0) {
          col_swap(D, j, t);
          col_swap(s.V, j, t);
          again = true;
        }
      }
    }
    if (D.at(t, t) < 0) {
      row_negate(D, t);
      row_negate(s.U, t);
    }
  }
  // enforce divisibility d_t | d_{t+1}
  for (int t = 0; t + 1 < n; ++t) {
    if (D.at(t, t) == 0) continue;
    for (int u = t + 1; u < n; ++u) {
      if (D.at(u, u) % D.at(t, t) == 0) continue;
      // fold row u into row t and re-triangularize the 2x2 corner
      col_addmul(D, t, u, 1);
      col_addmul(s.V, t, u, 1);
      long long a = D.at(t, t), b = D.at(u, t);
      long long g = std::gcd(a, b);
      // extended gcd: x*a + y*b = g
      long long x = 1, y = 0, x1 = 0, y1 = 1, aa = a, bb = b;
      while (bb) {
        long long qd = aa / bb;
        std::swap(aa -= qd * bb, bb);
        std::swap(x -= qd * x1, x1);
        std::swap(y -= qd * y1, y1);
      }
      (void)g;
      // rows: new_t = x*row_t + y*row_u ; new_u = -(b/g)*row_t + (a/g)*row_u
      IntMat Dt(D), Ut(s.U);
      long long bg = b / aa, ag = a / aa;  // aa holds gcd now
      for (int k = 0; k < D.cols; ++k) {
        D.at(t, k) = x * Dt.at(t, k) + y * Dt.at(u, k);
        D.at(u, k) = -bg * Dt.at(t, k) + ag * Dt.at(u, k);
      }
      for (int k = 0; k < s.U.cols; ++k) {
        s.U.at(t, k) = x * Ut.at(t, k) + y * Ut.at(u, k);
        s.U.at(u, k) = -bg * Ut.at(t, k) + ag * Ut.at(u, k);
      }
      // clear the remaining off-diagonal entries of the corner
      long long f = D.at(u, t) / D.at(t, t);
      row_addmul(D, u, t, -f);
      row_addmul(s.U, u, t, -f);
      f = D.at(t, u) / D.at(t, t);
      col_addmul(D, u, t, -f);
      col_addmul(s.V, u, t, -f);
      if (D.at(u, u) < 0) {
        row_negate(D, u);
        row_negate(s.U, u);
      }
    }
  }
  return s;
}

namespace {

// exact rational with gcd normalization; magnitudes stay tiny for linking data
struct Frac {
  long long n = 0, d = 1;
  Frac() = default;
  Frac(long long nn, long long dd = 1) : n(nn), d(dd) { norm(); }
  void norm() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(std::llabs(n), d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
  Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
  Frac operator-(const Frac& o) const { return Frac(n * o.d - o.n * d, d * o.d); }
  Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
  Frac operator/(const Frac& o) const { return Frac(n * o.d, d * o.n); }
  bool zero() const { return n == 0; }
  int sign() const { return n > 0 ? 1 : (n < 0 ? -1 : 0); }
};

}  // namespace

std::tuple<int, int, int> signature_counts(const IntMat& B) {
  if (!B.symmetric()) fail_invalid("signature: matrix not symmetric");
  int n = B.rows;
  std::vector<std::vector<Frac>> M(n, std::vector<Frac>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = Frac(B.at(i, j));

  int bp = 0, bz = 0, bm = 0;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;

  while (!live.empty()) {
    // diagonal pivot if available
    int pk = -1;
    for (size_t k = 0; k < live.size(); ++k)
      if (!M[live[k]][live[k]].zero()) {
        pk = (int)k;
        break;
      }
    if (pk >= 0) {
      int p = live[pk];
      Frac d = M[p][p];
      (d.sign() > 0 ? bp : bm)++;
      live.erase(live.begin() + pk);
      std::vector<Frac> vp(n);
      for (int j : live) vp[j] = M[p][j];
      for (int i : live) {
        Frac f = M[i][p] / d;
        if (f.zero()) continue;
        for (int j : live) M[i][j] = M[i][j] - f * vp[j];
      }
      for (int i : live) {
        M[i][p] = Frac(0);
        M[p][i] = Frac(0);
      }
      continue;
    }
    // all-diagonal zero: look for an off-diagonal entry -> hyperbolic block
    int a = -1, b = -1;
    for (size_t i = 0; i < live.size() && a < 0; ++i)
      for (size_t j = i + 1; j < live.size(); ++j)
        if (!M[live[i]][live[j]].zero()) {
          a = live[i];
          b = live[j];
          break;
        }
    if (a < 0) {
      bz += (int)live.size();
      break;
    }
    // block [[0,c],[c,0]] contributes (+1,-1); eliminate it against the rest
    // via x_i <- x_i - (M[i][b]/c) x_a - (M[i][a]/c) x_b
    Frac c = M[a][b];
    bp++;
    bm++;
    live.erase(std::find(live.begin(), live.end(), a));
    live.erase(std::find(live.begin(), live.end(), b));
    std::vector<Frac> va(n), vb(n), fa(n), fb(n);
    for (int i : live) {
      va[i] = M[i][a];
      vb[i] = M[i][b];
      fa[i] = va[i] / c;
      fb[i] = vb[i] / c;
    }
    for (int i : live)
      for (int j : live)
        M[i][j] = M[i][j] - fb[j] * va[i] - fa[j] * vb[i] - fb[i] * va[j] -
                  fa[i] * vb[j] + (fb[i] * fa[j] + fa[i] * fb[j]) * c;
    for (int i : live) {
      M[i][a] = M[a][i] = Frac(0);
      M[i][b] = M[b][i] = Frac(0);
    }
  }
  return {bp, bz, bm};
}

}  // namespace nss
