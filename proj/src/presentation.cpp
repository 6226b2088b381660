#include "nss/presentation.hpp"

#include <algorithm>
#include <cmath>

#include "nss/errors.hpp"

namespace nss {

std::vector<bool> LinkPresentation::surgery_mask() const {
  std::vector<bool> m(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) m[i] = comps[i].role == Role::surgery;
  return m;
}

SpinColoring LinkPresentation::spin_coloring(const LinkingData& lk) const {
  SpinColoring s;
  for (int id : lk.surgery_ids) s.c.push_back(comps[id].spin);
  for (int id : lk.physical_ids) s.w.push_back(comps[id].spin);
  return s;
}

cd kirby_representative(const ScalarContext& ctx, const Mod2C& degree) {
  double re = degree.rep().real();  // already in [0, 2)
  double im = degree.rep().imag();
  if (re <= ctx.tol) re += 2.0;  // tie at 0: +2 shift
  return cd(re, im);
}

Color kirby_color(const ScalarContext& ctx, cd alpha, cd scale) {
  std::vector<std::pair<cd, Color>> terms;
  for (int k = 1; k <= ctx.r / 2; ++k) {
    cd a = alpha + cd(2.0 * k - 1.0, 0.0);
    terms.emplace_back(scale * mod_dim(ctx, a), Color::simple(a));
  }
  return Color::formal(std::move(terms));
}

Color kirby_color_tilde(const ScalarContext& ctx, cd alpha, cd scale) {
  std::vector<std::pair<cd, Color>> terms;
  for (int k = 1; k <= ctx.r; ++k) {
    cd a = alpha + cd(2.0 * k - ctx.r - 1.0, 0.0);
    terms.emplace_back(0.5 * scale * mod_dim(ctx, a), Color::simple(a));
  }
  return Color::formal(std::move(terms));
}

Color make_color(const ScalarContext& ctx, const ColorSpec& spec) {
  switch (spec.type) {
    case ColorSpec::Type::simple: {
      Color c = Color::simple(spec.alpha);
      if (spec.scale == cd(1.0, 0.0)) return c;
      return Color::formal({{spec.scale, c}});
    }
    case ColorSpec::Type::eps: {
      Color c = Color::eps(spec.k);
      if (spec.scale == cd(1.0, 0.0)) return c;
      return Color::formal({{spec.scale, c}});
    }
    case ColorSpec::Type::kirby:
      return kirby_color(ctx, spec.alpha, spec.scale);
    case ColorSpec::Type::none:
      break;
  }
  fail_invalid("component has no concrete color");
}

ValidationReport validate_presentation(const LinkPresentation& p) {
  ValidationReport rep;
  auto note = [&](const std::string& s) { rep.violations.push_back(s); };

  TraceResult t;
  try {
    t = trace(p.diagram);
  } catch (const Error& e) {
    note(std::string("word: ") + e.what());
    return rep;
  }
  if (t.ncomp() != (int)p.comps.size()) {
    note("component count mismatch: word has " + std::to_string(t.ncomp()) + ", data has " +
         std::to_string(p.comps.size()));
    return rep;
  }
  ScalarContext ctx = p.ctx();
  for (int c = 0; c < t.ncomp(); ++c) {
    if (p.comps[c].orientation != t.comps[c].orientation)
      note("component " + std::to_string(c) + ": orientation field conflicts with the word");
    if (p.comps[c].role == Role::physical && p.comps[c].color.type == ColorSpec::Type::none)
      note("component " + std::to_string(c) + ": physical component without color");
    if (p.comps[c].role == Role::surgery && p.comps[c].color.type != ColorSpec::Type::none)
      note("component " + std::to_string(c) + ": surgery component must not carry a color");
  }
  if (!rep.violations.empty()) return rep;

  LinkingData lk = p.linking(t);
  SpinColoring s = p.spin_coloring(lk);
  // compatibility: physical color degree equals w
  for (size_t j = 0; j < lk.physical_ids.size(); ++j) {
    int id = lk.physical_ids[j];
    try {
      Mod2C deg = make_color(ctx, p.comps[id].color).degree(ctx);
      if (!deg.eq(s.w[j], ctx.tol))
        note("component " + std::to_string(id) + ": color degree does not match its spin value");
    } catch (const Error& e) {
      note("component " + std::to_string(id) + ": " + e.what());
    }
  }
  // extension: characteristic residual must vanish
  auto resid = char_residual(lk.B, lk.lkLK, s.c, s.w);
  for (size_t i = 0; i < resid.size(); ++i)
    if (!resid[i].is_zero(1e-7))
      note("characteristic equation fails at surgery row " + std::to_string(i));

  rep.computable = is_computable(p);
  rep.admissible = is_admissible(p);
  return rep;
}

void require_valid(const LinkPresentation& p) {
  ValidationReport rep = validate_presentation(p);
  if (!rep.valid()) {
    std::string msg = "invalid presentation:";
    for (const auto& v : rep.violations) msg += "\n  - " + v;
    fail_invalid(msg);
  }
}

namespace {

bool has_ddc_physical(const LinkPresentation& p) {
  ScalarContext ctx = p.ctx();
  for (const auto& c : p.comps)
    if (c.role == Role::physical && c.color.type == ColorSpec::Type::simple &&
        in_ddc(ctx, c.color.alpha))
      return true;
  return false;
}

}  // namespace

bool is_computable(const LinkPresentation& p) {
  bool any_surgery = false;
  for (const auto& c : p.comps) {
    if (c.role != Role::surgery) continue;
    any_surgery = true;
    if (c.spin.is_integral(p.tol)) return false;
  }
  if (any_surgery) return true;
  return has_ddc_physical(p);
}

bool is_admissible(const LinkPresentation& p) {
  if (has_ddc_physical(p)) return true;
  for (const auto& c : p.comps)
    if (!c.spin.is_integral(p.tol)) return true;
  return false;
}

WordBuilder& WordBuilder::cup(int pos, bool left_up) {
  events_.push_back({Event::Type::cup, pos, left_up, +1});
  return *this;
}
WordBuilder& WordBuilder::cap(int pos, bool left_up) {
  events_.push_back({Event::Type::cap, pos, left_up, +1});
  return *this;
}
WordBuilder& WordBuilder::cross(int pos, int sign) {
  events_.push_back({Event::Type::cross, pos, true, sign});
  return *this;
}

WordBuilder& WordBuilder::kink(int pos, int sign, bool up) {
  cup(pos + 1, up);
  cross(pos, sign);
  cap(pos + 1, up);
  return *this;
}

WordBuilder& WordBuilder::meridian(int pos, int lk_sign, const std::vector<int>& kinks,
                                   bool reversed) {
  cup(pos + 1, !reversed);
  for (int s : kinks) kink(pos + 1, s, !reversed);
  if (!reversed) {
    cross(pos, lk_sign);
    cross(pos + 1, -lk_sign);
  } else {
    cross(pos, -lk_sign);
    cross(pos + 1, lk_sign);
  }
  cap(pos, !reversed);
  return *this;
}

WordBuilder& WordBuilder::circle(int a, int b, const std::vector<int>& kinks, bool reversed) {
  cup(b + 1, !reversed);
  for (int s : kinks) kink(b + 1, s, !reversed);
  for (int j = b; j >= a; --j) cross(j, +1);        // lower edge: strands over
  for (int j = b + 1; j >= a + 1; --j) cross(j, -1);  // upper edge: strands under
  cap(a, !reversed);
  return *this;
}

TangleDiagram WordBuilder::take() {
  TangleDiagram d;
  d.word = std::move(events_);
  events_.clear();
  return d;
}

TangleDiagram unknot_word(const std::vector<int>& kink_signs) {
  WordBuilder w;
  w.cup(0);
  for (int s : kink_signs) w.kink(0, s);
  w.cap(0);
  return w.take();
}

TangleDiagram two_component_word(int lk_sign, const std::vector<int>& kinksA,
                                 const std::vector<int>& kinksB) {
  WordBuilder w;
  w.cup(0);  // A: [A+ A-]
  for (int s : kinksA) w.kink(0, s);
  w.cup(1);  // B inside A: [A+ B+ B- A-]
  for (int s : kinksB) w.kink(1, s);
  if (lk_sign != 0) {
    w.cross(0, lk_sign);
    w.cross(1, -lk_sign);
    w.cap(0);  // after the crossings the pair at (0,1) is B
    w.cap(0);
  } else {
    w.cap(1);  // B
    w.cap(0);  // A
  }
  return w.take();
}

UnionResult disjoint_union(const LinkPresentation& p1, const LinkPresentation& p2,
                           int pause_event) {
  TraceResult t1 = trace(p1.diagram);
  if (pause_event < 0) {
    size_t best = 0;
    for (size_t i = 0; i < t1.slices.size(); ++i)
      if (t1.slices[i].size() > t1.slices[best].size()) best = i;
    pause_event = (int)best;
  }
  int width = (int)t1.slices[pause_event].size();

  UnionResult out;
  out.p.r = p1.r;
  out.p.tol = p1.tol;
  if (p1.r != p2.r) fail_invalid("disjoint_union: mismatched levels r");
  auto& word = out.p.diagram.word;
  word.insert(word.end(), p1.diagram.word.begin(), p1.diagram.word.begin() + pause_event);
  for (Event e : p2.diagram.word) {
    e.pos += width;
    word.push_back(e);
  }
  word.insert(word.end(), p1.diagram.word.begin() + pause_event, p1.diagram.word.end());

  TraceResult t = trace(out.p.diagram);
  out.p.comps.resize(t.ncomp());
  out.map1.assign(p1.comps.size(), -1);
  out.map2.assign(p2.comps.size(), -1);
  TraceResult t2 = trace(p2.diagram);
  for (int c = 0; c < t1.ncomp(); ++c) {
    int e = t1.comps[c].first_cup_event;
    int ne = e < pause_event ? e : e + (int)p2.diagram.word.size();
    out.map1[c] = t.event_comp[ne];
    out.p.comps[out.map1[c]] = p1.comps[c];
  }
  for (int c = 0; c < t2.ncomp(); ++c) {
    int ne = pause_event + t2.comps[c].first_cup_event;
    out.map2[c] = t.event_comp[ne];
    out.p.comps[out.map2[c]] = p2.comps[c];
  }
  return out;
}

}  // namespace nss
