#include "nss/scalars.hpp"

#include <cmath>

namespace nss {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool near_integer(double x, double tol, long long* out = nullptr) {
  double n = std::round(x);
  if (std::abs(x - n) > tol) return false;
  if (out) *out = (long long)n;
  return true;
}
}  // namespace

ScalarContext ScalarContext::make(int r, double tol, double rtol) {
  if (r < 4 || r % 4 != 0) fail_invalid("r must be a positive multiple of 4, got " + std::to_string(r));
  if (!(tol > 0)) fail_invalid("tolerance must be positive");
  ScalarContext ctx;
  ctx.r = r;
  ctx.q = std::exp(cd(0.0, kPi / r));
  ctx.tol = tol;
  ctx.rtol = rtol;
  return ctx;
}

cd ScalarContext::qpow(cd x) const { return std::exp(cd(0.0, kPi / r) * x); }

cd ScalarContext::bracket(cd x) const { return qpow(x) - qpow(-x); }

cd ScalarContext::qint(long long n) const { return bracket(cd(double(n), 0.0)) / bracket(cd(1.0, 0.0)); }

cd ScalarContext::qfact(long long n) const {
  cd p(1.0, 0.0);
  for (long long k = 1; k <= n; ++k) p *= qint(k);
  return p;
}

bool ScalarContext::close(cd a, cd b) const {
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol + rtol * scale;
}

cd Mod2C::reduce(cd v) {
  double re = std::fmod(v.real(), 2.0);
  if (re < 0) re += 2.0;
  if (re >= 2.0) re -= 2.0;  // fmod can return 2.0 - eps rounding up
  return cd(re, v.imag());
}

bool Mod2C::eq(const Mod2C& o, double tol) const {
  if (std::abs(v_.imag() - o.v_.imag()) > tol) return false;
  double d = std::abs(v_.real() - o.v_.real());
  return d <= tol || std::abs(d - 2.0) <= tol;
}

bool Mod2C::is_integral(double tol) const {
  if (std::abs(v_.imag()) > tol) return false;
  double re = v_.real();
  return std::abs(re) <= tol || std::abs(re - 1.0) <= tol || std::abs(re - 2.0) <= tol;
}

cd qnum(const ScalarContext& ctx, cd alpha) {
  return cd(0.0, 2.0) * std::sin(kPi * alpha / double(ctx.r));
}

bool in_ddc(const ScalarContext& ctx, cd alpha) {
  if (std::abs(alpha.imag()) > ctx.tol) return true;
  long long n;
  if (!near_integer(alpha.real(), ctx.tol, &n)) return true;
  return n % ctx.r == 0;
}

cd mod_dim(const ScalarContext& ctx, cd alpha) {
  if (std::abs(alpha.imag()) <= ctx.tol) {
    long long n;
    if (near_integer(alpha.real(), ctx.tol, &n)) {
      if (n % ctx.r != 0) fail_invalid("mod_dim: integer color outside rZ is not in the admissible set");
      long long m = n / ctx.r;
      // analytic limit of -r{a}/{ra} at a = m r
      return cd((m % 2 == 0) ? -1.0 : 1.0, 0.0);
    }
  }
  return -double(ctx.r) * qnum(ctx, alpha) / qnum(ctx, double(ctx.r) * alpha);
}

cd twist_scalar(const ScalarContext& ctx, cd alpha) {
  double rm1 = double(ctx.r - 1);
  return ctx.qpow((alpha * alpha - rm1 * rm1) / 2.0);
}

cd gauss_sum(const ScalarContext& ctx) {
  cd s(0.0, 0.0);
  for (int k = -ctx.r / 2 + 1; k <= ctx.r / 2; ++k) s += ctx.qpow(cd(-2.0 * k * k, 0.0));
  return s;
}

cd gauss_half_sum(const ScalarContext& ctx) {
  cd s(0.0, 0.0);
  for (int k = 1; k <= ctx.r / 2; ++k) s += ctx.qpow(cd(-2.0 * k * k, 0.0));
  return s;
}

cd gauss_half_sum_shifted(const ScalarContext& ctx) {
  cd s(0.0, 0.0);
  for (int k = 1; k <= ctx.r / 2; ++k) s += ctx.qpow(cd(-2.0 * (k - 1) * (k - 1), 0.0));
  return s;
}

cd delta_spin(const ScalarContext& ctx, int sign) {
  if (sign != 1 && sign != -1) fail_invalid("delta_spin: sign must be +1 or -1");
  double r32 = std::pow(double(ctx.r), 1.5);
  // (1-i)/2 (rq)^{3/2} for the -1-framed picture; conjugate for +1.
  cd minus = cd(0.5, -0.5) * r32 * ctx.qpow(cd(1.5, 0.0));
  return sign < 0 ? minus : std::conj(minus);
}

cd delta_spin_oracle(const ScalarContext& ctx, cd alpha) {
  cd total(0.0, 0.0);
  cd ta = twist_scalar(ctx, alpha);
  for (int k = 1; k <= ctx.r / 2; ++k) {
    cd bk = alpha + cd(2.0 * k - 1.0, 0.0);
    total += mod_dim(ctx, bk) * (-double(ctx.r) * ctx.qpow(bk * alpha)) / (ta * twist_scalar(ctx, bk));
  }
  return total / mod_dim(ctx, alpha);
}

}  // namespace nss
