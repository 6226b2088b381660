// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned in code next to each check.
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "corpus.hpp"

using namespace nss;
using corpus::rel_dev;

namespace {

int g_failures = 0;

void line(int idx, const char* name, bool ok, double worst) {
  std::printf("criterion %2d [%s] %s (worst %.3e)\n", idx, name, ok ? "PASS" : "FAIL", worst);
  if (!ok) ++g_failures;
}

std::vector<cd> random_colors(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> re(0.05, 1.95), im(-0.5, 0.5);
  std::vector<cd> out;
  while ((int)out.size() < n) {
    cd a(re(rng), im(rng));
    if (std::abs(a.real() - std::round(a.real())) > 0.02) out.push_back(a);
  }
  return out;
}

// 1. Gauss sums at r in {4,8,12,16}, absolute error < 1e-10
void criterion1() {
  double worst = 0;
  for (int r : {4, 8, 12, 16}) {
    ScalarContext ctx = ScalarContext::make(r);
    worst = std::max(worst, std::abs(gauss_sum(ctx) - cd(1, -1) * std::sqrt(double(r))));
  }
  line(1, "gauss sum", worst < 1e-10, worst);
}

// 2. Algebra relations on 10 random colors at r = 4, 8; E^r = F^r = 0 exactly
void criterion2() {
  double worst = 0;
  bool nilpotent = true;
  for (int r : {4, 8}) {
    ScalarContext ctx = ScalarContext::make(r);
    for (cd a : random_colors(10, 100 + r)) {
      ModuleData m = build_simple(ctx, a);
      worst = std::max(worst, relations_residual(ctx, m));
      MatC En = MatC::Identity(r, r), Fn = En;
      for (int i = 0; i < r; ++i) {
        En *= m.E;
        Fn *= m.F;
      }
      nilpotent = nilpotent && En.norm() == 0.0 && Fn.norm() == 0.0;
    }
  }
  line(2, "algebra relations", worst < 1e-10 && nilpotent, worst);
}

// 3. Category anchors: YBE on 3 random triples < 1e-8, diagrammatic twist on
//    5 random colors < 1e-9, eps rules including the -1 loop
void criterion3() {
  double worst_ybe = 0, worst_twist = 0, worst_eps = 0;
  for (int r : {4, 8}) {
    ScalarContext ctx = ScalarContext::make(r);
    ModuleCache cache(ctx);
    auto cs = random_colors(9, 200 + r);
    for (int t = 0; t < 3; ++t)
      worst_ybe = std::max(worst_ybe,
                           yang_baxter_residual(ctx, cs[3 * t], cs[3 * t + 1], cs[3 * t + 2]));
    for (cd a : random_colors(5, 300 + r))
      worst_twist = std::max(
          worst_twist, std::abs(twist_matrix(ctx, build_simple(ctx, a)) - twist_scalar(ctx, a)));
    // eps rules
    ModuleData e = build_eps(ctx, 1);
    MatC cee = braiding(ctx, e, e);
    worst_eps = std::max(worst_eps, std::abs(cee(0, 0) - cd(1, 0)));
    cd a = cs[0];
    ModuleData v = build_simple(ctx, a);
    MatC dbl = braiding(ctx, v, e) * braiding(ctx, e, v);
    cd q_deg = ctx.qpow(double(r) * (a + cd(1, 0)));
    worst_eps = std::max(worst_eps,
                         (dbl - q_deg * MatC::Identity(dbl.rows(), dbl.cols())).norm());
    TangleDiagram unk = unknot_word();
    cd loop = evaluate_rt(cache, unk, trace(unk), {Color::eps(1)});
    worst_eps = std::max(worst_eps, std::abs(loop - cd(-1, 0)));
  }
  line(3, "category anchors", worst_ybe < 1e-8 && worst_twist < 1e-9 && worst_eps < 1e-9,
       std::max({worst_ybe, worst_twist, worst_eps}));
}

// 4. F'(unknot) = d; F'(Hopf) = -r q^{ab} on 5 random pairs < 1e-8 relative;
//    ambidexterity on a 10-link corpus < 1e-8
void criterion4() {
  double worst = 0;
  for (int r : {4, 8}) {
    ScalarContext ctx = ScalarContext::make(r);
    ModuleCache cache(ctx);
    TangleDiagram unk = unknot_word();
    TraceResult ut = trace(unk);
    TangleDiagram hopf = two_component_word(+1, {}, {});
    TraceResult ht = trace(hopf);
    auto cs = random_colors(10, 400 + r);
    for (int t = 0; t < 5; ++t) {
      cd a = cs[2 * t], b = cs[2 * t + 1];
      worst = std::max(worst, rel_dev(f_prime(cache, unk, ut, {Color::simple(a)}),
                                      mod_dim(ctx, a)));
      cd fp = f_prime(cache, hopf, ht, {Color::simple(a), Color::simple(b)});
      worst = std::max(worst, rel_dev(fp, -double(r) * ctx.qpow(a * b)));
    }
  }
  // ambidexterity corpus at r = 4
  ScalarContext ctx = ScalarContext::make(4);
  ModuleCache cache(ctx);
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> re(0.1, 1.9), im(-0.4, 0.4);
  int done = 0;
  for (int trial = 0; done < 10 && trial < 60; ++trial) {
    WordBuilder w;
    w.cup(0, false).cup(1, false);
    int len = 2 + (int)(rng() % 5);
    for (int i = 0; i < len; ++i) w.cross(2, (rng() % 2) ? +1 : -1);
    w.cap(1, false).cap(0, false);
    TangleDiagram d = w.take();
    TraceResult t;
    try {
      t = trace(d);
    } catch (const Error&) {
      continue;
    }
    if (t.ncomp() != 2) continue;
    ++done;
    cd a(re(rng), im(rng)), b(re(rng), im(rng));
    std::vector<Color> cols = {Color::simple(a), Color::simple(b)};
    cd va = mod_dim(ctx, a) * evaluate_open(cache, open_component(d, t, 0), cols);
    cd vb = mod_dim(ctx, b) * evaluate_open(cache, open_component(d, t, 1), cols);
    worst = std::max(worst, rel_dev(va, vb));
  }
  line(4, "renormalized invariant", done == 10 && worst < 1e-8, worst);
}

// 5. Delta^Spin oracle alpha-independent (5 random colors, < 1e-8 relative)
//    and equal to exactly one printed closed form
void criterion5() {
  double worst = 0;
  bool unique_form = true;
  for (int r : {4, 8}) {
    ScalarContext ctx = ScalarContext::make(r);
    cd half_form = cd(0.5, -0.5) * std::pow(double(r), 1.5) * ctx.qpow(cd(1.5, 0));
    cd full_form = 2.0 * half_form;
    for (cd a : random_colors(5, 500 + r))
      worst = std::max(worst, rel_dev(delta_spin_oracle(ctx, a), half_form));
    cd probe = delta_spin_oracle(ctx, cd(0.3, 0));
    bool matches_half = std::abs(probe - half_form) < 1e-8 * std::abs(half_form);
    bool matches_full = std::abs(probe - full_form) < 1e-8 * std::abs(full_form);
    unique_form = unique_form && matches_half && !matches_full;
    unique_form = unique_form && std::abs(delta_spin(ctx, -1) - half_form) < 1e-12;
  }
  line(5, "Delta^Spin oracle", worst < 1e-8 && unique_form, worst);
}

// 6. solve_spin counts {1,4,8} for B = [1],[4],[8]; parallel calibration on
//    the full corpus resolves the characteristic convention
void criterion6() {
  bool ok = true;
  double worst = 0;
  auto count = [&](long long fr) {
    IntMat B(1, 1);
    B.at(0, 0) = fr;
    auto res = solve_spin(B, IntMat(1, 0), {});
    return res.solution ? (long long)res.solution->enumerate().size() : -1;
  };
  ok = ok && count(1) == 1 && count(4) == 4 && count(8) == 8;

  // corpus calibration: for each presentation, every enumerated solution of
  // the adopted convention evaluates all surgery parallels to 1, and any
  // solution of the rejected convention that differs fails it
  struct Case {
    IntMat B, lk;
    std::vector<Mod2C> w;
  };
  std::vector<Case> cases;
  {
    Case c1;
    c1.B = IntMat(1, 1);
    c1.B.at(0, 0) = 4;
    c1.lk = IntMat(1, 1);
    c1.lk.at(0, 0) = 1;
    c1.w = {Mod2C(1.3, 0)};
    cases.push_back(c1);
    Case c2;  // Hopf pair of surgery components
    c2.B = IntMat(2, 2);
    c2.B.at(0, 1) = c2.B.at(1, 0) = 1;
    c2.lk = IntMat(2, 0);
    cases.push_back(c2);
    Case c3;
    c3.B = IntMat(1, 1);
    c3.B.at(0, 0) = 1;
    c3.lk = IntMat(1, 1);
    c3.lk.at(0, 0) = 2;
    c3.w = {Mod2C(0.7, 0.2)};
    cases.push_back(c3);
  }
  for (const Case& c : cases) {
    auto res = solve_spin(c.B, c.lk, c.w, CharConvention::bc_plus_cprime);
    if (!res.solution || !res.solution->finite()) {
      ok = false;
      continue;
    }
    for (const auto& sol : res.solution->enumerate()) {
      SpinColoring s{sol, c.w};
      for (int i = 0; i < c.B.rows; ++i) {
        std::vector<long long> lkL(c.B.rows), lkK(c.lk.cols);
        for (int j = 0; j < c.B.rows; ++j) lkL[j] = c.B.at(i, j);
        for (int j = 0; j < c.lk.cols; ++j) lkK[j] = c.lk.at(i, j);
        Mod2C par = eval_curve(c.B.at(i, i), lkL, lkK, s);
        if (!par.eq(Mod2C(1, 0), 1e-9)) ok = false;
        worst = std::max(worst, std::abs((par - Mod2C(1, 0)).rep()));
        // residual of the adopted convention vanishes iff parallels are 1
        auto resid = char_residual(c.B, c.lk, sol, c.w, CharConvention::bc_plus_cprime);
        if (!resid[i].is_zero(1e-9)) ok = false;
      }
    }
  }
  // the rejected convention disagrees on the discriminating case
  {
    const Case& c = cases[0];
    auto alt = solve_spin(c.B, c.lk, c.w, CharConvention::b_times_c_plus_cprime);
    if (alt.solution)
      for (const auto& sol : alt.solution->enumerate()) {
        SpinColoring s{sol, c.w};
        if (eval_curve(4, {4}, {1}, s).eq(Mod2C(1, 0), 1e-9)) ok = false;
      }
  }
  line(6, "spin combinatorics", ok, worst);
}

// 7. Move invariance: >= 3 computable instances per move, net deviation < 1e-6
void criterion7() {
  double worst = 0;
  int instances = 0;
  auto net = [&](const ModuleCache& cache, const LinkPresentation& a,
                 const LinkPresentation& b) {
    double dev = rel_dev(invariant_N(cache, a).value, invariant_N(cache, b).value);
    worst = std::max(worst, dev);
    ++instances;
    return dev;
  };
  bool ok = true;

  ScalarContext c4 = ScalarContext::make(4);
  ModuleCache m4(c4);
  ScalarContext c8 = ScalarContext::make(8);
  ModuleCache m8(c8);

  // orientation move
  for (double c : {0.5, 1.5, 0.175}) {
    LinkPresentation p = c == 0.175 ? corpus::lens_with_meridian(4, 4, Mod2C(c, 0), cd(0.3, 0))
                                    : corpus::lens(4, 4, Mod2C(c, 0));
    ok = ok && net(m4, p, orientation_move(p, 0).p) < 1e-6;
  }
  // KI+/-
  for (auto [sign, alpha] : {std::pair{+1, 0.3}, {-1, 0.3}, {+1, 0.7}}) {
    LinkPresentation p = corpus::unknot_alpha(4, cd(alpha, 0));
    ok = ok && net(m4, p, k1_move(p, 0, sign).p) < 1e-6;
  }
  {
    LinkPresentation p = corpus::unknot_alpha(8, cd(0.3, 0));
    ok = ok && net(m8, p, k1_move(p, 0, +1).p) < 1e-6;
  }
  // KII (r = 4: cabling the slid-over component is the widest contraction in
  // the suite, and 8-dimensional strands would blow past the width guard)
  {
    LinkPresentation p = corpus::lens_with_meridian(4, 4, Mod2C(0.175, 0), cd(0.3, 0));
    ok = ok && net(m4, p, k2_move(p, 1, 0).p) < 1e-6;
    LinkPresentation q = corpus::lens_with_meridian(4, 2, Mod2C(1.35, 0), cd(0.3, 0));
    // char: 2c + 1.3 = 2 mod 2 -> c = 0.35 or 1.35
    ok = ok && net(m4, q, k2_move(q, 1, 0).p) < 1e-6;
    // 0-framed surgery circle with two opposite alpha-meridians (their
    // contributions cancel in the characteristic equation; no cabled kinks)
    LinkPresentation w;
    w.r = 4;
    WordBuilder wb;
    wb.cup(0);
    wb.meridian(0, +1);
    wb.meridian(0, -1);
    wb.cap(0);
    w.diagram = wb.take();
    ComponentData L, K;
    L.role = Role::surgery;
    L.spin = Mod2C(0.5, 0);
    K.role = Role::physical;
    K.color = ColorSpec::simple(cd(0.3, 0));
    K.spin = Mod2C(1.3, 0);
    w.comps = {L, K, K};
    ok = ok && net(m4, w, k2_move(w, 1, 0).p) < 1e-6;
  }
  // Hopf stabilization
  for (auto [r, b] : {std::pair{4, cd(0.45, 0.0)}, {4, cd(0.7, 0.1)}, {8, cd(0.45, 0.0)}}) {
    LinkPresentation p = corpus::unknot_alpha(r, cd(0.3, 0));
    ModuleCache& mc = r == 4 ? m4 : m8;
    ok = ok && net(mc, p, hopf_stabilize(p, 0, b).p) < 1e-6;
  }
  // birth move (1e-7 demanded by the spec example; keep 1e-6 gate, record)
  {
    LinkPresentation p = corpus::unknot_alpha(4, cd(0.3, 0));
    ok = ok && net(m4, p, birth_move(p, 1, 0, 0).p) < 1e-7;
    LinkPresentation q = corpus::unknot_alpha(4, cd(0.7, 0.2), 1);
    ok = ok && net(m4, q, birth_move(q, 1, 0, 0).p) < 1e-7;
    LinkPresentation w = corpus::lens_with_meridian(4, 4, Mod2C(0.175, 0), cd(0.3, 0));
    ok = ok && net(m4, w, birth_move(w, 1, 0, 0).p) < 1e-7;
  }
  line(7, "move invariance", ok && instances >= 15, worst);
}

// 8. Well-definedness: L(4,1) with c = 1/2 across a recorded (KII, KI+-)
//    sequence < 1e-6; representative shift and Omega~ < 1e-8
void criterion8() {
  ScalarContext ctx = ScalarContext::make(4);
  ModuleCache cache(ctx);
  double worst = 0;
  LinkPresentation p = corpus::lens(4, 4, Mod2C(0.5, 0));
  cd base = invariant_N(cache, p).value;
  MoveResult s1 = k1_move(p, 0, +1);
  MoveResult s2 = k2_move(s1.p, 1, 0);
  LinkPresentation q = is_computable(s2.p) ? s2.p : s1.p;
  worst = std::max(worst, rel_dev(base, invariant_N(cache, q).value));
  MoveResult s3 = k1_move(s2.p, 0, -1);
  if (is_computable(s3.p))
    worst = std::max(worst, rel_dev(base, invariant_N(cache, s3.p).value));
  bool ok = worst < 1e-6;

  ShiftCheck sc = kirby_color_shift_check(cache, p, 0);
  double worst2 = std::max(rel_dev(sc.base, sc.shifted), rel_dev(sc.base, sc.tilde));
  ok = ok && worst2 < 1e-8;
  line(8, "well-definedness of N", ok, std::max(worst, worst2));
}

// 9. Connected-sum law on 3 instances < 1e-6; N0(S^3, empty, integral) = 1
//    and alpha-independence < 1e-8
void criterion9() {
  ScalarContext ctx = ScalarContext::make(4);
  ModuleCache cache(ctx);
  double worst = 0;
  cd a(0.3, 0.0);
  cd da = mod_dim(ctx, a);
  LinkPresentation u = corpus::unknot_alpha(4, a);
  LinkPresentation h = corpus::hopf_phys(4, a, cd(0.45, 0));
  LinkPresentation lm = corpus::lens_with_meridian(4, 4, Mod2C(1.175, 0), a);
  struct Pair {
    const LinkPresentation *p1, *p2;
    int m1, m2;
  };
  for (Pair pr : {Pair{&u, &u, 0, 0}, Pair{&h, &u, 0, 0}, Pair{&lm, &lm, 1, 1}}) {
    cd n1 = invariant_N(cache, *pr.p1).value;
    cd n2 = invariant_N(cache, *pr.p2).value;
    cd ns = invariant_N(cache, connected_sum(*pr.p1, pr.m1, *pr.p2, pr.m2)).value;
    worst = std::max(worst, rel_dev(ns, n1 * n2 / da));
  }
  bool ok = worst < 1e-6;

  LinkPresentation s3 = corpus::lens(4, 1, Mod2C(1, 0));
  cd n0a = invariant_N0(cache, s3, cd(0.3, 0));
  cd n0b = invariant_N0(cache, s3, cd(0.7, 0.1));
  double w2 = std::max(rel_dev(n0a, cd(1, 0)), rel_dev(n0a, n0b));
  ok = ok && rel_dev(n0a, cd(1, 0)) < 1e-6 && rel_dev(n0a, n0b) < 1e-8;
  line(9, "structure laws", ok, std::max(worst, w2));
}

// 10. Integral route: two Hopf stabilizations (beta = 0.3 vs 0.7+0.1i) of an
//     rZ-colored integral triple give equal N < 1e-6
void criterion10() {
  ScalarContext ctx = ScalarContext::make(4);
  ModuleCache cache(ctx);
  // (S^1 x S^2, two V_0-colored meridians, integral sigma)
  LinkPresentation p = corpus::s1s2_two_meridians(4);
  auto route = [&](cd beta) {
    MoveResult st = hopf_stabilize(p, 1, beta);
    return invariant_N(cache, make_computable(st.p)).value;
  };
  cd n1 = route(cd(0.3, 0.0));
  cd n2 = route(cd(0.7, 0.1));
  double worst = rel_dev(n1, n2);
  line(10, "integral-case route", worst < 1e-6 && std::abs(n1) > 1.0, worst);
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9, criterion10};
  for (int i = 0; i < 10; ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      std::printf("criterion %2d [exception] FAIL: %s\n", i + 1, e.what());
      ++g_failures;
    }
  }
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
