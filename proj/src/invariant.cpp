#include "nss/invariant.hpp"

#include <cmath>

#include "nss/errors.hpp"

namespace nss {

std::tuple<int, int, int> signature(const IntMat& B) { return signature_counts(B); }

NResult invariant_N(const ModuleCache& cache, const LinkPresentation& p, const NOptions& opts) {
  require_valid(p);
  if (!is_computable(p))
    fail_not_computable("invariant_N: presentation is not computable (integral surgery "
                        "colors; slide or Hopf-stabilize first)");
  ScalarContext ctx = p.ctx();
  TraceResult t = p.traced();
  LinkingData lk = p.linking(t);

  long long guard = 1;
  std::vector<Color> colors(p.comps.size(), Color::eps(0));
  for (size_t c = 0; c < p.comps.size(); ++c) {
    if (p.comps[c].role == Role::physical) {
      colors[c] = make_color(ctx, p.comps[c].color);
    } else {
      cd rep = kirby_representative(ctx, p.comps[c].spin);
      if ((int)c == opts.shift_component) rep += opts.rep_shift;
      colors[c] = opts.use_tilde ? kirby_color_tilde(ctx, rep) : kirby_color(ctx, rep);
    }
    guard *= (long long)colors[c].expand().size();
    if (guard > opts.eval.max_terms)
      fail_resource("invariant_N: Kirby expansion exceeds the term guard");
  }

  NResult out;
  out.terms = guard;
  auto [bp, bz, bm] = signature(lk.B);
  out.b_plus = bp;
  out.b_zero = bz;
  out.b_minus = bm;
  out.f_prime = f_prime(cache, p.diagram, t, colors, std::nullopt, opts.eval);
  out.delta_factor = std::pow(delta_spin(ctx, +1), -bp) * std::pow(delta_spin(ctx, -1), -bm);
  out.value = out.delta_factor * out.f_prime;
  return out;
}

cd invariant_N0(const ModuleCache& cache, const LinkPresentation& p, cd alpha,
                const NOptions& opts) {
  require_valid(p);
  if (is_admissible(p)) return cd(0.0, 0.0);
  ScalarContext ctx = p.ctx();

  LinkPresentation ref;
  ref.r = p.r;
  ref.tol = p.tol;
  ref.diagram = unknot_word();
  ComponentData kc;
  kc.role = Role::physical;
  kc.color = ColorSpec::simple(alpha);
  kc.spin = Mod2C(alpha + cd(1.0, 0.0));
  ref.comps = {kc};

  UnionResult u = disjoint_union(ref, p);
  LinkPresentation joined = make_computable(u.p);
  NResult n = invariant_N(cache, joined, opts);
  return n.value / mod_dim(ctx, alpha);
}

ShiftCheck kirby_color_shift_check(const ModuleCache& cache, const LinkPresentation& p,
                                   int component, const NOptions& opts) {
  ShiftCheck out;
  out.base = invariant_N(cache, p, opts).value;
  NOptions shifted = opts;
  shifted.shift_component = component;
  shifted.rep_shift = cd(2.0, 0.0);
  out.shifted = invariant_N(cache, p, shifted).value;
  NOptions tilde = opts;
  tilde.use_tilde = true;
  out.tilde = invariant_N(cache, p, tilde).value;
  return out;
}

}  // namespace nss
