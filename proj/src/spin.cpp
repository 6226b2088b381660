#include "nss/spin.hpp"

#include "nss/errors.hpp"

namespace nss {

namespace {

std::vector<Mod2C> cprime(const IntMat& lkLK, const std::vector<Mod2C>& w) {
  std::vector<Mod2C> cp(lkLK.rows);
  for (int j = 0; j < lkLK.rows; ++j) {
    Mod2C acc;
    for (int nu = 0; nu < lkLK.cols; ++nu) acc = acc + w[nu].scaled(lkLK.at(j, nu));
    cp[j] = acc;
  }
  return cp;
}

}  // namespace

std::vector<Mod2C> char_residual(const IntMat& B, const IntMat& lkLK,
                                 const std::vector<Mod2C>& c,
                                 const std::vector<Mod2C>& w, CharConvention conv) {
  int m = B.rows;
  if ((int)c.size() != m) fail_invalid("char_residual: c size mismatch");
  if (lkLK.rows != m || (int)w.size() != lkLK.cols) fail_invalid("char_residual: lk/w size mismatch");
  std::vector<Mod2C> cp = cprime(lkLK, w);
  std::vector<Mod2C> res(m);
  for (int j = 0; j < m; ++j) {
    Mod2C acc;
    for (int k = 0; k < m; ++k) {
      Mod2C term = (conv == CharConvention::bc_plus_cprime) ? c[k] : (c[k] + cp[k]);
      acc = acc + term.scaled(B.at(j, k));
    }
    if (conv == CharConvention::bc_plus_cprime) acc = acc + cp[j];
    res[j] = acc - Mod2C(double(B.at(j, j)), 0.0);
  }
  return res;
}

long long SpinSolution::count() const {
  long long n = 1;
  for (const auto& t : torsion) n *= t.order;
  return n;
}

std::vector<std::vector<Mod2C>> SpinSolution::enumerate() const {
  if (!finite()) fail_invalid("SpinSolution::enumerate: infinite solution set");
  std::vector<std::vector<Mod2C>> out;
  std::vector<long long> idx(torsion.size(), 0);
  while (true) {
    std::vector<Mod2C> v = particular;
    for (size_t t = 0; t < torsion.size(); ++t)
      for (size_t i = 0; i < v.size(); ++i)
        v[i] = v[i] + torsion[t].generator[i].scaled(idx[t]);
    out.push_back(v);
    size_t t = 0;
    for (; t < idx.size(); ++t) {
      if (++idx[t] < torsion[t].order) break;
      idx[t] = 0;
    }
    if (t == idx.size()) break;
  }
  return out;
}

SpinSolveResult solve_spin(const IntMat& B, const IntMat& lkLK,
                           const std::vector<Mod2C>& w, CharConvention conv) {
  if (!B.symmetric()) fail_invalid("solve_spin: B not symmetric");
  int m = B.rows;
  std::vector<Mod2C> cp = cprime(lkLK, w);

  // rhs of  B c = g  in C/2Z per convention
  std::vector<Mod2C> g(m);
  for (int j = 0; j < m; ++j) {
    Mod2C r(double(B.at(j, j)), 0.0);
    if (conv == CharConvention::bc_plus_cprime) {
      g[j] = r - cp[j];
    } else {
      Mod2C bc;
      for (int k = 0; k < m; ++k) bc = bc + cp[k].scaled(B.at(j, k));
      g[j] = r - bc;
    }
  }

  if (m == 0) {
    SpinSolveResult res;
    res.solution = SpinSolution{};
    return res;
  }

  SmithNF s = smith_normal_form(B);  // D = U B V
  // B c = g  <=>  D y = U g  with  c = V y
  std::vector<Mod2C> ug(m);
  for (int i = 0; i < m; ++i) {
    Mod2C acc;
    for (int j = 0; j < m; ++j) acc = acc + g[j].scaled(s.U.at(i, j));
    ug[i] = acc;
  }

  SpinSolution sol;
  sol.particular.assign(m, Mod2C());
  std::vector<Mod2C> y(m);
  for (int i = 0; i < m; ++i) {
    long long d = s.D.at(i, i);
    if (d == 0) {
      if (!ug[i].is_zero(1e-9)) {
        SpinSolveResult res;
        res.obstruction_row = i;
        return res;
      }
      std::vector<long long> dir(m);
      for (int k = 0; k < m; ++k) dir[k] = s.V.at(k, i);
      sol.free_dirs.push_back(dir);
      y[i] = Mod2C();
    } else {
      // d y = ug (mod 2): y in { ug/d + 2t/d : t = 0..d-1 }
      y[i] = Mod2C(ug[i].rep() / double(d));
      if (d > 1) {
        SpinSolution::Torsion tor;
        tor.order = d;
        tor.generator.assign(m, Mod2C());
        for (int k = 0; k < m; ++k) tor.generator[k] = Mod2C(2.0 * double(s.V.at(k, i)) / double(d));
        sol.torsion.push_back(tor);
      }
    }
  }
  for (int k = 0; k < m; ++k) {
    Mod2C acc;
    for (int i = 0; i < m; ++i) acc = acc + Mod2C(y[i].rep() * double(s.V.at(k, i)));
    sol.particular[k] = acc;
  }
  SpinSolveResult res;
  res.solution = std::move(sol);
  return res;
}

Mod2C eval_curve(long long framing, const std::vector<long long>& lkL,
                 const std::vector<long long>& lkK, const SpinColoring& s) {
  if (lkL.size() != s.c.size() || lkK.size() != s.w.size())
    fail_invalid("eval_curve: linking vector size mismatch");
  Mod2C acc(1.0 + double(framing), 0.0);
  for (size_t i = 0; i < lkL.size(); ++i) acc = acc + s.c[i].scaled(lkL[i]);
  for (size_t j = 0; j < lkK.size(); ++j) acc = acc + s.w[j].scaled(lkK[j]);
  return acc;
}

bool all_integral(const std::vector<Mod2C>& v, double tol) {
  for (const auto& x : v)
    if (!x.is_integral(tol)) return false;
  return true;
}

}  // namespace nss
