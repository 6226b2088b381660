#include <doctest.h>

#include <cmath>

#include "nss/scalars.hpp"

using namespace nss;

namespace {
constexpr double kPi = 3.14159265358979323846;
double dist(cd a, cd b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("context validates the level") {
  CHECK_THROWS_AS(ScalarContext::make(2), Error);
  CHECK_THROWS_AS(ScalarContext::make(6), Error);
  CHECK_THROWS_AS(ScalarContext::make(-4), Error);
  for (int r : {4, 8, 12, 16}) {
    ScalarContext ctx = ScalarContext::make(r);
    CHECK(dist(std::pow(ctx.q, 2 * r), cd(1, 0)) < 1e-12);
    CHECK(dist(std::pow(ctx.q, r), cd(-1, 0)) < 1e-12);
  }
}

TEST_CASE("quantum numbers") {
  ScalarContext c4 = ScalarContext::make(4);
  CHECK(dist(qnum(c4, cd(1, 0)), cd(0, std::sqrt(2.0))) < 1e-12);  // 2i sin(pi/4)
  CHECK(dist(qnum(c4, cd(0, 0)), cd(0, 0)) < 1e-12);
  ScalarContext c8 = ScalarContext::make(8);
  CHECK(dist(qnum(c8, cd(4, 0)), cd(0, 2)) < 1e-12);
  // {-a} = -{a}, {a+2r} = {a}, [r] = 0
  cd a(0.37, 0.21);
  CHECK(dist(qnum(c4, -a), -qnum(c4, a)) < 1e-12);
  CHECK(dist(qnum(c4, a + cd(8, 0)), qnum(c4, a)) < 1e-10);
  CHECK(dist(c4.qint(4), cd(0, 0)) < 1e-12);
}

TEST_CASE("modified dimension") {
  ScalarContext ctx = ScalarContext::make(4);
  // direct evaluation at 1/2
  CHECK(dist(mod_dim(ctx, cd(0.5, 0)), cd(-4.0 * std::sin(kPi / 8) / std::sin(kPi / 2), 0)) <
        1e-9);
  CHECK(mod_dim(ctx, cd(0.5, 0)).real() == doctest::Approx(-1.530734).epsilon(1e-5));
  // sign rule d(a + nr) = (-1)^n d(a)
  cd a(0.5, 0.0);
  for (int n : {1, 2, 3})
    CHECK(dist(mod_dim(ctx, a + cd(4.0 * n, 0)), std::pow(-1.0, n) * mod_dim(ctx, a)) < 1e-9);
  CHECK(dist(mod_dim(ctx, -a), mod_dim(ctx, a)) < 1e-12);
  // rZ limit: Richardson extrapolation of -r{a}/{ra} toward 0
  auto raw = [&](double eps) {
    return (-4.0 * qnum(ctx, cd(eps, 0)) / qnum(ctx, cd(4 * eps, 0))).real();
  };
  double f1 = raw(1e-6), f2 = raw(5e-7);
  double extrap = f2 + (f2 - f1) / 3.0;
  CHECK(mod_dim(ctx, cd(0, 0)).real() == doctest::Approx(extrap).epsilon(1e-8));
  CHECK(dist(mod_dim(ctx, cd(0, 0)), cd(-1, 0)) < 1e-12);
  CHECK(dist(mod_dim(ctx, cd(4, 0)), cd(1, 0)) < 1e-12);
  // integers outside rZ are invalid colors
  CHECK_THROWS_AS(mod_dim(ctx, cd(1, 0)), Error);
  CHECK_THROWS_AS(mod_dim(ctx, cd(-3, 0)), Error);
  // nonzero on sample admissible colors
  for (cd s : {cd(0.5, 0), cd(1.2, 0.4), cd(-0.9, -2.3), cd(4, 0)})
    CHECK(std::abs(mod_dim(ctx, s)) > 1e-6);
}

TEST_CASE("twist scalar") {
  ScalarContext c4 = ScalarContext::make(4);
  CHECK(dist(twist_scalar(c4, cd(3, 0)), cd(1, 0)) < 1e-12);  // alpha = r-1
  CHECK(dist(twist_scalar(c4, cd(0.5, 0)), std::exp(cd(0, -35.0 * kPi / 32.0))) < 1e-12);
  ScalarContext c8 = ScalarContext::make(8);
  CHECK(dist(twist_scalar(c8, cd(7, 0)), cd(1, 0)) < 1e-12);
}

TEST_CASE("gauss sums") {
  for (int r : {4, 8, 12, 16}) {
    ScalarContext ctx = ScalarContext::make(r);
    cd expect = cd(1, -1) * std::sqrt(double(r));
    CHECK(dist(gauss_sum(ctx), expect) < 1e-10);
    CHECK(dist(gauss_half_sum(ctx), expect / 2.0) < 1e-10);
    CHECK(dist(gauss_half_sum_shifted(ctx), expect / 2.0) < 1e-10);
  }
  ScalarContext c4 = ScalarContext::make(4);
  CHECK(dist(gauss_sum(c4), cd(2, -2)) < 1e-12);
  ScalarContext c8 = ScalarContext::make(8);
  CHECK(dist(gauss_sum(c8), cd(1, -1) * 2.0 * std::sqrt(2.0)) < 1e-12);
  ScalarContext c12 = ScalarContext::make(12);
  CHECK(dist(gauss_sum(c12), cd(1, -1) * 2.0 * std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("delta spin constants and oracle") {
  for (int r : {4, 8}) {
    ScalarContext ctx = ScalarContext::make(r);
    cd dm = delta_spin(ctx, -1), dp = delta_spin(ctx, +1);
    CHECK(dist(dp, std::conj(dm)) < 1e-12);
    CHECK(std::abs(std::abs(dp) - std::pow(double(r), 1.5) / std::sqrt(2.0)) < 1e-10);
    // the printed closed form of the displayed equation wins (not its 2x
    // variant); the oracle is alpha-independent
    cd closed = cd(0.5, -0.5) * std::pow(double(r), 1.5) * ctx.qpow(cd(1.5, 0));
    CHECK(dist(dm, closed) < 1e-12);
    for (cd a : {cd(0.3, 0), cd(0.7, 0.1), cd(1.4, -0.3), cd(0.51, 0), cd(1.9, 0.2)})
      CHECK(dist(delta_spin_oracle(ctx, a), dm) < 1e-8 * std::abs(dm));
    cd twice = 2.0 * closed;
    CHECK(dist(delta_spin_oracle(ctx, cd(0.3, 0)), twice) > 1.0);
  }
  ScalarContext c4 = ScalarContext::make(4);
  CHECK(dist(delta_spin(c4, -1), cd(5.226251859505506, 2.1647844005847876)) < 1e-10);
}

TEST_CASE("Mod2C arithmetic") {
  Mod2C a(3.7, 0.25);
  CHECK(a.rep().real() == doctest::Approx(1.7));
  CHECK(a.rep().real() >= 0.0);
  CHECK(a.rep().real() < 2.0);
  CHECK((a + (-a)).is_zero());
  CHECK(Mod2C(1.9999999999, 0).eq(Mod2C(0.0, 0), 1e-8));
  CHECK(Mod2C(0.5, 0).scaled(4).is_zero());
  CHECK(Mod2C(1, 0).is_integral());
  CHECK(Mod2C(0, 0).is_integral());
  CHECK(!Mod2C(0.5, 0).is_integral());
  CHECK(!Mod2C(1, 0.2).is_integral());
  CHECK((Mod2C(1.5, 0.1) + Mod2C(0.7, -0.1)).eq(Mod2C(0.2, 0), 1e-9));
}
