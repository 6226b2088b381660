#pragma once

#include <complex>
#include <vector>

#include "nss/errors.hpp"

namespace nss {

using cd = std::complex<double>;

// Arithmetic anchored at the 2r-th root of unity q = exp(i*pi/r), r = 0 mod 4.
// Everything downstream (quantum integers, modified dimensions, twists, Gauss
// sums, the stabilization constants) is a pure function of this context.
struct ScalarContext {
  int r = 4;
  cd q;
  double tol = 1e-9;    // absolute comparison tolerance
  double rtol = 1e-8;   // relative comparison tolerance

  static ScalarContext make(int r, double tol = 1e-9, double rtol = 1e-8);

  // q^x = exp(i*pi*x/r) for complex exponent x.
  cd qpow(cd x) const;
  // {x} = q^x - q^{-x} = 2i sin(pi x / r)
  cd bracket(cd x) const;
  // [n] = {n}/{1}
  cd qint(long long n) const;
  // [n]! with [0]! = 1
  cd qfact(long long n) const;

  bool close(cd a, cd b) const;
};

// Element of C/2Z: a complex number whose real part only matters modulo 2.
// Canonical representative keeps the real part in [0,2).
class Mod2C {
 public:
  Mod2C() : v_(0.0, 0.0) {}
  explicit Mod2C(cd v) : v_(reduce(v)) {}
  Mod2C(double re, double im) : v_(reduce(cd(re, im))) {}

  cd rep() const { return v_; }

  Mod2C operator+(const Mod2C& o) const { return Mod2C(v_ + o.v_); }
  Mod2C operator-(const Mod2C& o) const { return Mod2C(v_ - o.v_); }
  Mod2C operator-() const { return Mod2C(-v_); }
  Mod2C scaled(long long n) const { return Mod2C(double(n) * v_); }

  bool eq(const Mod2C& o, double tol = 1e-9) const;
  bool is_zero(double tol = 1e-9) const { return eq(Mod2C(), tol); }
  // x in Z/2Z: representative within tol of 0 or 1, with zero imaginary part.
  bool is_integral(double tol = 1e-9) const;

  static cd reduce(cd v);

 private:
  cd v_;
};

// {alpha} as a value: 2i sin(pi alpha / r).
cd qnum(const ScalarContext& ctx, cd alpha);

// Membership in the index set of simple projective colors: (C \ Z) u rZ.
bool in_ddc(const ScalarContext& ctx, cd alpha);

// Modified dimension d(alpha) = -r {alpha}/{r alpha}.  On rZ the analytic
// limit (-1)^{n+1} at alpha = n r is used.  Integers outside rZ are invalid.
cd mod_dim(const ScalarContext& ctx, cd alpha);

// Twist scalar theta_alpha = q^{(alpha^2 - (r-1)^2)/2}.
cd twist_scalar(const ScalarContext& ctx, cd alpha);

// Full Gauss sum  sum_{k=-r/2+1}^{r/2} q^{-2k^2}  (= (1-i) sqrt r).
cd gauss_sum(const ScalarContext& ctx);
// Half sums  sum_{k=1}^{r/2} q^{-2k^2}  and  sum_{k=1}^{r/2} q^{-2(k-1)^2}.
cd gauss_half_sum(const ScalarContext& ctx);
cd gauss_half_sum_shifted(const ScalarContext& ctx);

// Stabilization constants, keyed by the framing sign of the blown-up meridian:
// delta_spin(ctx,-1) equals the Kirby-colored -1-framed meridian diagram and
// the closed form (1-i)/2 (rq)^{3/2}; delta_spin(ctx,+1) is its conjugate
// (1+i)/2 r^{3/2} q^{-3/2}, the value of the +1-framed picture.  A positive
// KI^{+/-} move multiplies F' by delta_spin(+/-1) while b_{+/-} grows by one,
// so Delta(L) = delta_spin(+1)^{-b+} delta_spin(-1)^{-b-} cancels it.
cd delta_spin(const ScalarContext& ctx, int sign);

// Independent oracle: first line of the meridian evaluation,
//   (1/d(a)) sum_{k=1}^{r/2} d(a+2k-1) (-r q^{(a+2k-1)a}) / (theta_a theta_{a+2k-1}).
// Must be independent of a and equal delta_spin(ctx,-1).
cd delta_spin_oracle(const ScalarContext& ctx, cd alpha);

}  // namespace nss
