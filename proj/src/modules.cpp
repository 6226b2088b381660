#include "nss/modules.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nss/errors.hpp"

namespace nss {

Color Color::simple(cd alpha) {
  Color c;
  c.kind_ = Kind::simple;
  c.alpha_ = alpha;
  return c;
}

Color Color::eps(int k) {
  Color c;
  c.kind_ = Kind::eps;
  c.k_ = k;
  return c;
}

Color Color::dual(Color inner) {
  Color c;
  c.kind_ = Kind::dual;
  c.children_.push_back(std::move(inner));
  return c;
}

Color Color::tensor(std::vector<Color> factors) {
  if (factors.empty()) fail_invalid("Color::tensor: empty factor list");
  Color c;
  c.kind_ = Kind::tensor;
  c.children_ = std::move(factors);
  return c;
}

Color Color::formal(std::vector<std::pair<cd, Color>> terms) {
  if (terms.empty()) fail_invalid("Color::formal: empty combination");
  Color c;
  c.kind_ = Kind::formal;
  c.terms_ = std::move(terms);
  return c;
}

bool Color::concrete() const {
  switch (kind_) {
    case Kind::simple:
    case Kind::eps:
      return true;
    case Kind::dual:
    case Kind::tensor:
      return std::all_of(children_.begin(), children_.end(),
                         [](const Color& c) { return c.concrete(); });
    case Kind::formal:
      return false;
  }
  return false;
}

Mod2C Color::degree(const ScalarContext& ctx) const {
  switch (kind_) {
    case Kind::simple:
      return Mod2C(alpha_ + cd(1.0, 0.0));
    case Kind::eps:
      return Mod2C();
    case Kind::dual:
      return -children_[0].degree(ctx);
    case Kind::tensor: {
      Mod2C d;
      for (const auto& c : children_) d = d + c.degree(ctx);
      return d;
    }
    case Kind::formal: {
      Mod2C d = terms_[0].second.degree(ctx);
      for (const auto& [coef, c] : terms_)
        if (!c.degree(ctx).eq(d, ctx.tol))
          fail_invalid("formal color is not degree-homogeneous");
      return d;
    }
  }
  return Mod2C();
}

std::vector<std::pair<cd, Color>> Color::expand() const {
  switch (kind_) {
    case Kind::simple:
    case Kind::eps:
      return {{cd(1.0, 0.0), *this}};
    case Kind::dual: {
      std::vector<std::pair<cd, Color>> out;
      for (auto& [coef, c] : children_[0].expand()) out.emplace_back(coef, Color::dual(c));
      return out;
    }
    case Kind::tensor: {
      std::vector<std::pair<cd, std::vector<Color>>> acc = {{cd(1.0, 0.0), {}}};
      for (const auto& child : children_) {
        auto terms = child.expand();
        std::vector<std::pair<cd, std::vector<Color>>> next;
        for (const auto& [ca, fs] : acc)
          for (const auto& [cb, c] : terms) {
            auto fs2 = fs;
            fs2.push_back(c);
            next.emplace_back(ca * cb, std::move(fs2));
          }
        acc = std::move(next);
      }
      std::vector<std::pair<cd, Color>> out;
      for (auto& [coef, fs] : acc) out.emplace_back(coef, Color::tensor(std::move(fs)));
      return out;
    }
    case Kind::formal: {
      std::vector<std::pair<cd, Color>> out;
      for (const auto& [coef, c] : terms_)
        for (auto& [c2, cc] : c.expand()) out.emplace_back(coef * c2, cc);
      return out;
    }
  }
  return {};
}

std::string Color::key() const {
  char buf[96];
  switch (kind_) {
    case Kind::simple:
      std::snprintf(buf, sizeof buf, "s(%.17g,%.17g)", alpha_.real(), alpha_.imag());
      return buf;
    case Kind::eps:
      std::snprintf(buf, sizeof buf, "e(%d)", k_);
      return buf;
    case Kind::dual:
      return "d[" + children_[0].key() + "]";
    case Kind::tensor: {
      std::string s = "t[";
      for (const auto& c : children_) s += c.key() + ";";
      return s + "]";
    }
    case Kind::formal:
      fail_invalid("formal colors have no module key; expand first");
  }
  return {};
}

ModuleData build_simple(const ScalarContext& ctx, cd alpha) {
  if (!in_ddc(ctx, alpha))
    fail_invalid("simple color alpha must lie in (C \\ Z) u rZ");
  int r = ctx.r;
  ModuleData m;
  m.dim = r;
  m.weights.resize(r);
  m.E = MatC::Zero(r, r);
  m.F = MatC::Zero(r, r);
  m.K = MatC::Zero(r, r);
  m.Kinv = MatC::Zero(r, r);
  m.H = MatC::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    cd w = alpha + cd(double(r - 1 - 2 * i), 0.0);
    m.weights[i] = w;
    m.K(i, i) = ctx.qpow(w);
    m.Kinv(i, i) = ctx.qpow(-w);
    m.H(i, i) = w;
  }
  for (int i = 1; i < r; ++i) {
    m.F(i, i - 1) = 1.0;                                            // F v_{i-1} = v_i
    m.E(i - 1, i) = ctx.qint(i) * ctx.bracket(cd(double(i), 0.0) - alpha) / ctx.bracket(cd(1.0, 0.0));
  }
  return m;
}

ModuleData build_eps(const ScalarContext& ctx, int k) {
  ModuleData m;
  m.dim = 1;
  cd w(double(k) * ctx.r, 0.0);
  m.weights = {w};
  m.E = MatC::Zero(1, 1);
  m.F = MatC::Zero(1, 1);
  m.K = MatC::Constant(1, 1, cd(k % 2 == 0 ? 1.0 : -1.0, 0.0));
  m.Kinv = m.K;
  m.H = MatC::Constant(1, 1, w);
  return m;
}

ModuleData build_dual(const ScalarContext& ctx, const ModuleData& v) {
  (void)ctx;
  ModuleData m;
  m.dim = v.dim;
  m.weights.resize(v.dim);
  for (int i = 0; i < v.dim; ++i) m.weights[i] = -v.weights[i];
  // action through the antipode: S(E) = -E K^{-1}, S(F) = -K F, S(K) = K^{-1},
  // S(H) = -H; matrix on the dual basis is the transpose.
  m.E = (-(v.E * v.Kinv)).transpose();
  m.F = (-(v.K * v.F)).transpose();
  m.K = v.Kinv.transpose();
  m.Kinv = v.K.transpose();
  m.H = (-v.H).transpose();
  return m;
}

ModuleData build_tensor(const ScalarContext& ctx, const ModuleData& a, const ModuleData& b) {
  (void)ctx;
  int da = a.dim, db = b.dim, d = da * db;
  ModuleData m;
  m.dim = d;
  m.weights.resize(d);
  MatC Ia = MatC::Identity(da, da), Ib = MatC::Identity(db, db);
  auto kron = [](const MatC& x, const MatC& y) {
    MatC out(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j)
        out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
  };
  m.E = kron(Ia, b.E) + kron(a.E, b.K);
  m.F = kron(a.Kinv, b.F) + kron(a.F, Ib);
  m.K = kron(a.K, b.K);
  m.Kinv = kron(a.Kinv, b.Kinv);
  m.H = kron(a.H, Ib) + kron(Ia, b.H);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) m.weights[i * db + j] = a.weights[i] + b.weights[j];
  return m;
}

double relations_residual(const ScalarContext& ctx, const ModuleData& m) {
  cd q = ctx.q;
  double res = 0.0;
  auto upd = [&](const MatC& x) { res = std::max(res, x.norm()); };
  upd(m.K * m.E * m.Kinv - q * q * m.E);
  upd(m.K * m.F * m.Kinv - m.F / (q * q));
  upd(m.E * m.F - m.F * m.E - (m.K - m.Kinv) / (q - cd(1.0, 0.0) / q));
  upd(m.H * m.E - m.E * m.H - 2.0 * m.E);
  upd(m.H * m.F - m.F * m.H + 2.0 * m.F);
  upd(m.H * m.K - m.K * m.H);
  MatC En = MatC::Identity(m.dim, m.dim), Fn = En;
  for (int i = 0; i < ctx.r; ++i) {
    En = En * m.E;
    Fn = Fn * m.F;
  }
  upd(En);
  upd(Fn);
  MatC Kq = MatC::Zero(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i) Kq(i, i) = ctx.qpow(m.weights[i]);
  upd(m.K - Kq);
  return res;
}

VecC pivot_diag(const ScalarContext& ctx, const ModuleData& v) {
  VecC p(v.dim);
  for (int i = 0; i < v.dim; ++i) p(i) = ctx.qpow(cd(double(1 - ctx.r), 0.0) * v.weights[i]);
  return p;
}

MatC braiding(const ScalarContext& ctx, const ModuleData& v, const ModuleData& w) {
  int dv = v.dim, dw = w.dim, d = dv * dw;
  MatC R = MatC::Zero(d, d);
  MatC En = MatC::Identity(dv, dv), Fn = MatC::Identity(dw, dw);
  cd coef(1.0, 0.0);
  cd one = ctx.bracket(cd(1.0, 0.0));
  for (int n = 0; n < ctx.r; ++n) {
    if (n > 0) {
      En = En * v.E;
      Fn = Fn * w.F;
      coef = ctx.qpow(cd(double(n) * double(n - 1) / 2.0, 0.0)) * std::pow(one, n) / ctx.qfact(n);
    }
    if (n == 0) coef = cd(1.0, 0.0);
    for (int i = 0; i < dv; ++i)
      for (int k = 0; k < dv; ++k) {
        if (En(i, k) == cd(0.0, 0.0)) continue;
        for (int j = 0; j < dw; ++j)
          for (int l = 0; l < dw; ++l) {
            if (Fn(j, l) == cd(0.0, 0.0)) continue;
            R(i * dw + j, k * dw + l) += coef * En(i, k) * Fn(j, l);
          }
      }
  }
  // q^{H(x)H/2} on the output, spectral on the weight basis
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j)
      R.row(i * dw + j) *= ctx.qpow(v.weights[i] * w.weights[j] / 2.0);
  // flip: rows reindexed from (i,j) over V(x)W to (j,i) over W(x)V
  MatC C(d, d);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) C.row(j * dv + i) = R.row(i * dw + j);
  return C;
}

MatC braiding_inverse(const ScalarContext& ctx, const ModuleData& v, const ModuleData& w) {
  return braiding(ctx, w, v).inverse();
}

VecC coev_vec(const ScalarContext& ctx, const ModuleData& v) {
  (void)ctx;
  VecC u = VecC::Zero(v.dim * v.dim);
  for (int i = 0; i < v.dim; ++i) u(i * v.dim + i) = 1.0;
  return u;
}

VecC coevp_vec(const ScalarContext& ctx, const ModuleData& v) {
  VecC p = pivot_diag(ctx, v);
  VecC u = VecC::Zero(v.dim * v.dim);
  for (int i = 0; i < v.dim; ++i) u(i * v.dim + i) = cd(1.0, 0.0) / p(i);
  return u;
}

VecC evp_vec(const ScalarContext& ctx, const ModuleData& v) {
  VecC p = pivot_diag(ctx, v);
  VecC u = VecC::Zero(v.dim * v.dim);
  for (int i = 0; i < v.dim; ++i) u(i * v.dim + i) = p(i);
  return u;
}

VecC ev_vec(const ScalarContext& ctx, const ModuleData& v) {
  (void)ctx;
  VecC u = VecC::Zero(v.dim * v.dim);
  for (int i = 0; i < v.dim; ++i) u(i * v.dim + i) = 1.0;
  return u;
}

cd twist_matrix(const ScalarContext& ctx, const ModuleData& v, double rel_tol) {
  int d = v.dim;
  MatC c = braiding(ctx, v, v);
  VecC p = pivot_diag(ctx, v);
  // (id (x) ev') . (c (x) id) . (id (x) coev)
  MatC M = MatC::Zero(d, d);
  for (int out = 0; out < d; ++out)
    for (int a = 0; a < d; ++a) {
      cd acc(0.0, 0.0);
      for (int i = 0; i < d; ++i) acc += c(out * d + i, a * d + i) * p(i);
      M(out, a) = acc;
    }
  cd s = M.trace() / double(d);
  double resid = (M - s * MatC::Identity(d, d)).norm();
  if (resid > rel_tol * std::max(1.0, M.norm()))
    fail_invalid("twist is not a scalar on this module (non-simple input?)");
  return s;
}

bool dual_iso_check(const ScalarContext& ctx, cd alpha, double rel_tol) {
  ModuleData v = build_simple(ctx, alpha);
  ModuleData vd = build_dual(ctx, v);
  ModuleData w = build_simple(ctx, -alpha);
  // weight multisets must agree
  auto sorted = [&](std::vector<cd> ws) {
    std::sort(ws.begin(), ws.end(), [](cd a, cd b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    return ws;
  };
  auto a = sorted(vd.weights), b = sorted(w.weights);
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-8) return false;

  // nonzero T with T X_{V*} = X_W T for X in {E,F,K,H}:
  // (X_{V*}^T (x) I - I (x) X_W) vec(T) = 0 with column-major vec.
  int n = v.dim;
  auto block = [&](const MatC& x1, const MatC& x2) {
    MatC out = MatC::Zero(n * n, n * n);
    MatC In = MatC::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            out(i * n + k, j * n + l) = x1(j, i) * In(k, l) - In(i, j) * x2(k, l);
    return out;
  };
  MatC A(4 * n * n, n * n);
  A.block(0, 0, n * n, n * n) = block(vd.E, w.E);
  A.block(n * n, 0, n * n, n * n) = block(vd.F, w.F);
  A.block(2 * n * n, 0, n * n, n * n) = block(vd.K, w.K);
  A.block(3 * n * n, 0, n * n, n * n) = block(vd.H, w.H);
  Eigen::JacobiSVD<MatC> svd(A, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1);
  double smax = sv(0);
  if (smin > rel_tol * std::max(1.0, smax)) return false;
  // explicit intertwiner from the null vector; verify residual and nonzeroness
  VecC t = svd.matrixV().col(n * n - 1);
  if (t.norm() < 1e-12) return false;
  MatC T(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) T(k, i) = t(i * n + k);
  double res = std::max({(T * vd.E - w.E * T).norm(), (T * vd.F - w.F * T).norm(),
                         (T * vd.K - w.K * T).norm(), (T * vd.H - w.H * T).norm()});
  return res <= rel_tol * std::max(1.0, T.norm());
}

double yang_baxter_residual(const ScalarContext& ctx, cd a, cd b, cd c) {
  ModuleData A = build_simple(ctx, a), B = build_simple(ctx, b), C = build_simple(ctx, c);
  auto embed = [](const MatC& m, int left, int right) {
    // identity_left (x) m (x) identity_right
    MatC out = MatC::Zero(left * m.rows() * right, left * m.cols() * right);
    for (int i = 0; i < left; ++i)
      for (Eigen::Index x = 0; x < m.rows(); ++x)
        for (Eigen::Index y = 0; y < m.cols(); ++y) {
          if (m(x, y) == cd(0.0, 0.0)) continue;
          for (int j = 0; j < right; ++j)
            out(((Eigen::Index)i * m.rows() + x) * right + j,
                ((Eigen::Index)i * m.cols() + y) * right + j) = m(x, y);
        }
    return out;
  };
  int d = A.dim;
  // sigma1 sigma2 sigma1 vs sigma2 sigma1 sigma2 on the evolving objects
  MatC lhs = embed(braiding(ctx, B, C), 1, d) * embed(braiding(ctx, A, C), d, 1) *
             embed(braiding(ctx, A, B), 1, d);
  MatC rhs = embed(braiding(ctx, A, B), d, 1) * embed(braiding(ctx, A, C), 1, d) *
             embed(braiding(ctx, B, C), d, 1);
  return (lhs - rhs).norm() / lhs.norm();
}

ModulePtr ModuleCache::get(const Color& c) const {
  std::string k = c.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = modules_.find(k);
    if (it != modules_.end()) return it->second;
  }
  auto built = std::make_shared<ModuleData>(build(c));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = modules_.emplace(k, std::move(built));
  return it->second;  // idempotent under concurrent insert
}

ModuleData ModuleCache::build(const Color& c) const {
  switch (c.kind()) {
    case Color::Kind::simple:
      return build_simple(ctx_, c.alpha());
    case Color::Kind::eps:
      return build_eps(ctx_, c.eps_k());
    case Color::Kind::dual:
      return build_dual(ctx_, *get(c.children()[0]));
    case Color::Kind::tensor: {
      ModulePtr acc = get(c.children()[0]);
      ModuleData out = *acc;
      for (size_t i = 1; i < c.children().size(); ++i)
        out = build_tensor(ctx_, out, *get(c.children()[i]));
      return out;
    }
    case Color::Kind::formal:
      fail_invalid("cannot build a module for a formal color; expand first");
  }
  fail_invalid("unreachable color kind");
}

std::shared_ptr<const std::vector<cd>> ModuleCache::crossing(const Color& left,
                                                             const Color& right,
                                                             int sign) const {
  std::string k = (sign > 0 ? "+" : "-") + left.key() + "|" + right.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = crossings_.find(k);
    if (it != crossings_.end()) return it->second;
  }
  ModulePtr l = get(left), r = get(right);
  MatC c = sign > 0 ? braiding(ctx_, *l, *r) : braiding_inverse(ctx_, *l, *r);
  auto flat = std::make_shared<std::vector<cd>>((size_t)c.rows() * c.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.cols(); ++j) (*flat)[(size_t)i * c.cols() + j] = c(i, j);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = crossings_.emplace(k, std::move(flat));
  return it->second;
}

}  // namespace nss
