// Command-line interface: evaluate renormalized link invariants, compute the
// spin 3-manifold invariant N, solve the characteristic equation, apply
// Kirby-type moves, and run the anchor self-test.
#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "nss/errors.hpp"
#include "nss/invariant.hpp"
#include "nss/io.hpp"
#include "nss/kernels.hpp"

namespace {

using namespace nss;

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::invalid_input:
      return 1;
    case ErrorKind::not_computable:
      return 2;
    case ErrorKind::resource_exhausted:
      return 3;
  }
  return 1;
}

void print_value(cd v) { std::printf("%.15g %.15g\n", v.real(), v.imag()); }

struct CommonFlags {
  double tol = -1.0;
  long long terms_max = -1;
};

LinkPresentation load(const std::string& path, const CommonFlags& flags) {
  ParsedFile f = read_presentation_file(path);
  for (size_t i = 0; i < f.spin_given.size(); ++i)
    if (!f.spin_given[i]) fail_invalid("component " + std::to_string(i) + " has no spin value");
  if (flags.tol > 0) f.p.tol = flags.tol;
  return f.p;
}

EvalOptions eval_options(const CommonFlags& flags) {
  EvalOptions o;
  if (flags.terms_max > 0) o.max_terms = flags.terms_max;
  return o;
}

int cmd_eval(const std::string& path, int open_id, const CommonFlags& flags) {
  LinkPresentation p = load(path, flags);
  require_valid(p);
  ScalarContext ctx = p.ctx();
  ModuleCache cache(ctx);
  TraceResult t = p.traced();
  std::vector<Color> colors;
  for (const auto& c : p.comps) {
    if (c.color.type == ColorSpec::Type::none)
      fail_invalid("eval: every component needs a concrete color (surgery links are "
                   "evaluated by `invariant`)");
    colors.push_back(make_color(ctx, c.color));
  }
  std::optional<int> open;
  if (open_id >= 0) open = open_id;
  cd v = f_prime(cache, p.diagram, t, colors, open, eval_options(flags));
  print_value(v);
  return 0;
}

int cmd_invariant(const std::string& path, const CommonFlags& flags) {
  LinkPresentation p = load(path, flags);
  ValidationReport rep = validate_presentation(p);
  if (!rep.valid()) {
    for (const auto& v : rep.violations) std::fprintf(stderr, "invalid: %s\n", v.c_str());
    return 1;
  }
  ModuleCache cache(p.ctx());
  NOptions opts;
  opts.eval = eval_options(flags);
  NResult n = invariant_N(cache, p, opts);
  std::printf("N %.15g %.15g\n", n.value.real(), n.value.imag());
  std::printf("signature %d %d %d\n", n.b_plus, n.b_zero, n.b_minus);
  std::printf("terms %lld\n", n.terms);
  std::printf("computable %s\n", rep.computable ? "yes" : "no");
  std::printf("admissible %s\n", rep.admissible ? "yes" : "no");
  return 0;
}

int cmd_spin_solve(const std::string& path, const CommonFlags& flags) {
  ParsedFile f = read_presentation_file(path);
  if (flags.tol > 0) f.p.tol = flags.tol;
  LinkPresentation& p = f.p;
  ScalarContext ctx = p.ctx();
  TraceResult t = p.traced();
  LinkingData lk = p.linking(t);
  // w values come from the physical colors (compatibility pins them)
  std::vector<Mod2C> w;
  for (int id : lk.physical_ids) {
    if (p.comps[id].color.type == ColorSpec::Type::none)
      fail_invalid("spin-solve: physical component " + std::to_string(id) + " has no color");
    w.push_back(make_color(ctx, p.comps[id].color).degree(ctx));
  }
  SpinSolveResult res = solve_spin(lk.B, lk.lkLK, w);
  if (!res.solution) {
    std::printf("no-solution row %d\n", res.obstruction_row);
    return 0;
  }
  const SpinSolution& s = *res.solution;
  auto print_vec = [&](const char* label, const std::vector<Mod2C>& v) {
    std::printf("%s", label);
    for (const auto& x : v) std::printf(" %.15g %.15g", x.rep().real(), x.rep().imag());
    std::printf("\n");
  };
  print_vec("particular", s.particular);
  for (const auto& tor : s.torsion) {
    std::printf("torsion order %lld generator", tor.order);
    for (const auto& x : tor.generator)
      std::printf(" %.15g %.15g", x.rep().real(), x.rep().imag());
    std::printf("\n");
  }
  std::printf("free-rank %zu\n", s.free_dirs.size());
  if (s.finite()) {
    for (const auto& c : s.enumerate()) {
      LinkPresentation q = p;
      for (size_t i = 0; i < lk.surgery_ids.size(); ++i) q.comps[lk.surgery_ids[i]].spin = c[i];
      for (size_t j = 0; j < lk.physical_ids.size(); ++j) q.comps[lk.physical_ids[j]].spin = w[j];
      std::printf("solution");
      for (const auto& x : c) std::printf(" %.15g %.15g", x.rep().real(), x.rep().imag());
      std::printf(" computable %s\n", is_computable(q) ? "yes" : "no");
    }
  }
  return 0;
}

int cmd_kirby(const std::string& path, const std::vector<std::string>& move,
              const std::string& out_path, bool check, const CommonFlags& flags) {
  LinkPresentation p = load(path, flags);
  require_valid(p);
  ModuleCache cache(p.ctx());
  if (move.empty()) fail_invalid("kirby: --move required");
  const std::string& kind = move[0];
  auto want = [&](size_t n, const char* usage) {
    if (move.size() != n) fail_invalid(std::string("kirby: usage --move \"") + usage + "\"");
  };
  MoveResult res;
  if (kind == "orient") {
    want(2, "orient <component>");
    res = orientation_move(p, std::stoi(move[1]));
  } else if (kind == "k1+" || kind == "k1-") {
    want(2, "k1+|k1- <component>");
    res = k1_move(p, std::stoi(move[1]), kind == "k1+" ? +1 : -1);
  } else if (kind == "k1del") {
    want(2, "k1del <meridian-component>");
    res = k1_delete(p, std::stoi(move[1]));
  } else if (kind == "k2") {
    want(3, "k2 <slider> <surgery-component>");
    res = k2_move(p, std::stoi(move[1]), std::stoi(move[2]));
  } else if (kind == "hopf") {
    if (move.size() != 3 && move.size() != 4) fail_invalid("kirby: usage --move \"hopf <component> <beta-re> [beta-im]\"");
    cd beta(std::stod(move[2]), move.size() == 4 ? std::stod(move[3]) : 0.0);
    res = hopf_stabilize(p, std::stoi(move[1]), beta);
  } else if (kind == "birth") {
    want(4, "birth <event> <from-pos> <to-pos>");
    res = birth_move(p, std::stoi(move[1]), std::stoi(move[2]), std::stoi(move[3]));
  } else {
    fail_invalid("kirby: unknown move '" + kind + "'");
  }

  std::string text = write_presentation(res.p);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) fail_invalid("cannot write '" + out_path + "'");
    out << text;
  }
  if (check) {
    NOptions opts;
    opts.eval = eval_options(flags);
    cd before = invariant_N(cache, p, opts).value;
    cd after = invariant_N(cache, res.p, opts).value;
    double dev = std::abs(before - after) / std::max(1e-300, std::abs(before));
    std::fprintf(stderr, "check N before % .15g %+.15gi\n", before.real(), before.imag());
    std::fprintf(stderr, "check N after  % .15g %+.15gi\n", after.real(), after.imag());
    std::fprintf(stderr, "check relative deviation %.3e\n", dev);
  }
  return 0;
}

int cmd_selftest(int r) {
  ScalarContext ctx = ScalarContext::make(r);
  ModuleCache cache(ctx);
  int failures = 0;
  auto report = [&](const char* name, bool ok, double resid) {
    std::printf("%-34s %s  (resid %.2e)\n", name, ok ? "pass" : "FAIL", resid);
    if (!ok) ++failures;
  };

  {
    cd g = gauss_sum(ctx);
    cd expect = cd(1.0, -1.0) * std::sqrt(double(r));
    report("gauss sum", std::abs(g - expect) < 1e-10, std::abs(g - expect));
  }
  {
    double worst = 0.0;
    for (cd a : {cd(0.3, 0.0), cd(0.7, 0.1), cd(1.31, -0.2)})
      worst = std::max(worst, relations_residual(ctx, build_simple(ctx, a)));
    report("algebra relations", worst < 1e-10, worst);
  }
  {
    double resid = yang_baxter_residual(ctx, cd(0.3, 0.0), cd(0.45, 0.0), cd(1.21, 0.0));
    report("Yang-Baxter", resid < 1e-8, resid);
  }
  {
    double worst = 0.0;
    for (cd a : {cd(0.3, 0.0), cd(0.7, 0.1), cd(1.9, 0.0)}) {
      cd tw = twist_matrix(ctx, build_simple(ctx, a));
      worst = std::max(worst, std::abs(tw - twist_scalar(ctx, a)));
    }
    report("diagrammatic twist", worst < 1e-9, worst);
  }
  {
    TangleDiagram d = two_component_word(+1, {}, {});
    TraceResult t = trace(d);
    ModuleCache mc(ctx);
    cd a(0.3, 0.0), b(0.45, 0.0);
    cd fp = f_prime(mc, d, t, {Color::simple(a), Color::simple(b)}, 0);
    cd expect = -double(ctx.r) * ctx.qpow(a * b);
    report("Hopf anchor", std::abs(fp - expect) < 1e-8 * std::abs(expect), std::abs(fp - expect));
  }
  {
    double worst = 0.0;
    cd ref = delta_spin(ctx, -1);
    for (cd a : {cd(0.3, 0.0), cd(0.7, 0.1), cd(1.4, -0.3), cd(0.51, 0.0), cd(1.9, 0.2)})
      worst = std::max(worst, std::abs(delta_spin_oracle(ctx, a) - ref) / std::abs(ref));
    report("Delta^Spin oracle", worst < 1e-8, worst);
  }
  {
    // char-equation convention calibration: B=[4] with a meridian colored
    // V_alpha; parallels evaluate to 1 exactly for the adopted convention
    IntMat B(1, 1);
    B.at(0, 0) = 4;
    IntMat lkm(1, 1);
    lkm.at(0, 0) = 1;
    cd alpha(0.3, 0.0);
    std::vector<Mod2C> w = {Mod2C(alpha + cd(1.0, 0.0))};
    auto sol = solve_spin(B, lkm, w);
    bool ok = sol.solution.has_value();
    double worst = 0.0;
    if (ok)
      for (const auto& c : sol.solution->enumerate()) {
        SpinColoring s{c, w};
        Mod2C par = eval_curve(4, {4}, {1}, s);
        if (!par.eq(Mod2C(1.0, 0.0), 1e-9)) ok = false;
        auto resid = char_residual(B, lkm, c, w);
        worst = std::max(worst, std::abs(resid[0].rep()));
      }
    report("char-equation calibration", ok, worst);
  }
  std::printf("kernel: %s\n", kernels::active_kernel_name().c_str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-semisimple spin quantum invariants of 3-manifolds"};
  app.require_subcommand(1);
  CommonFlags flags;

  std::string file, out_path;
  int open_id = -1;
  bool check = false;
  std::vector<std::string> move;
  int selftest_r = 4;

  auto* eval = app.add_subcommand("eval", "renormalized link invariant F' of a colored link");
  eval->add_option("file", file)->required();
  eval->add_option("--open", open_id, "component to open");
  eval->add_option("--tol", flags.tol);
  eval->add_option("--terms-max", flags.terms_max);

  auto* inv = app.add_subcommand("invariant", "spin 3-manifold invariant N");
  inv->add_option("file", file)->required();
  inv->add_option("--tol", flags.tol);
  inv->add_option("--terms-max", flags.terms_max);

  auto* solve = app.add_subcommand("spin-solve", "solve the characteristic equation");
  solve->add_option("file", file)->required();
  solve->add_option("--tol", flags.tol);

  auto* kirby = app.add_subcommand("kirby", "apply a move to a presentation");
  kirby->add_option("file", file)->required();
  kirby->add_option("--move", move, "orient|k1+|k1-|k1del|k2|hopf|birth + arguments")
      ->required()
      ->delimiter(' ');
  kirby->add_option("-o,--out", out_path, "output file (default stdout)");
  kirby->add_flag("--check", check, "re-evaluate N on both sides");
  kirby->add_option("--tol", flags.tol);
  kirby->add_option("--terms-max", flags.terms_max);

  auto* self = app.add_subcommand("selftest", "run the anchor suite");
  self->add_option("--r", selftest_r, "level (multiple of 4)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(eval)) return cmd_eval(file, open_id, flags);
    if (app.got_subcommand(inv)) return cmd_invariant(file, flags);
    if (app.got_subcommand(solve)) return cmd_spin_solve(file, flags);
    if (app.got_subcommand(kirby)) return cmd_kirby(file, move, out_path, check, flags);
    if (app.got_subcommand(self)) return cmd_selftest(selftest_r);
  } catch (const nss::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
