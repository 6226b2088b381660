#include "nss/moves.hpp"

#include <algorithm>

#include "nss/errors.hpp"

namespace nss {

namespace {

// Where to attach gadgets on a component: the slice right after its first
// cup, at the up-oriented leg.
struct AttachPoint {
  int event;  // insertion index (right after the first cup)
  int pos;    // position of the up strand at that slice
};

AttachPoint attach_point(const TraceResult& t, const TangleDiagram& d, int comp) {
  int e = t.comps[comp].first_cup_event;
  int p = d.word[e].pos;
  AttachPoint a;
  a.event = e + 1;
  a.pos = d.word[e].left_up ? p : p + 1;
  return a;
}

// Rebuild component metadata after a word edit.  `provenance[i]` is, for old
// component i, an event index in the NEW word known to belong to it (a cup or
// cap).  Extra new components are reported for the caller to fill.
struct Remap {
  LinkPresentation p;
  TraceResult traced;
  std::vector<int> old_to_new;
  std::vector<int> fresh;  // new component ids with no old source
};

Remap remap_components(const LinkPresentation& base, TangleDiagram word,
                       const std::vector<int>& provenance) {
  Remap out;
  out.p.r = base.r;
  out.p.tol = base.tol;
  out.p.diagram = std::move(word);
  out.traced = trace(out.p.diagram);
  out.p.comps.resize(out.traced.ncomp());
  out.old_to_new.assign(base.comps.size(), -1);
  std::vector<bool> taken(out.traced.ncomp(), false);
  for (size_t i = 0; i < provenance.size(); ++i) {
    int nc = out.traced.event_comp[provenance[i]];
    if (nc < 0) fail_invalid("remap: provenance event is not a cup/cap");
    out.old_to_new[i] = nc;
    out.p.comps[nc] = base.comps[i];
    out.p.comps[nc].orientation = out.traced.comps[nc].orientation;
    taken[nc] = true;
  }
  for (int c = 0; c < out.traced.ncomp(); ++c)
    if (!taken[c]) out.fresh.push_back(c);
  return out;
}

std::vector<int> shifted_provenance(const LinkPresentation& p, const TraceResult& t,
                                    int insert_at, int inserted_len) {
  std::vector<int> prov(p.comps.size());
  for (size_t i = 0; i < p.comps.size(); ++i) {
    int e = t.comps[i].first_cup_event;
    prov[i] = e < insert_at ? e : e + inserted_len;
  }
  return prov;
}

Mod2C spin_of(const LinkPresentation& p, int comp) { return p.comps[comp].spin; }

}  // namespace

MoveResult orientation_move(const LinkPresentation& p, int component) {
  if (component < 0 || component >= (int)p.comps.size()) fail_invalid("orientation_move: no such component");
  if (p.comps[component].role != Role::surgery)
    fail_invalid("orientation_move: component must be a surgery component");
  TraceResult t = p.traced();
  MoveResult out;
  out.p = p;
  for (size_t i = 0; i < out.p.diagram.word.size(); ++i) {
    Event& e = out.p.diagram.word[i];
    if (e.type != Event::Type::cross && t.event_comp[i] == component) e.left_up = !e.left_up;
  }
  out.p.comps[component].spin = -out.p.comps[component].spin;
  out.p.comps[component].orientation = -out.p.comps[component].orientation;
  return out;
}

MoveResult k1_move(const LinkPresentation& p, int component, int sign) {
  if (sign != 1 && sign != -1) fail_invalid("k1_move: sign must be +1 or -1");
  require_valid(p);
  TraceResult t = p.traced();
  AttachPoint at = attach_point(t, p.diagram, component);

  WordBuilder g;
  g.meridian(at.pos, -sign, {sign});  // o: framing `sign`, lk(o, J) = -sign
  g.kink(at.pos, sign);               // full twist on J
  std::vector<Event> gadget = g.events();

  TangleDiagram word = p.diagram;
  word.word.insert(word.word.begin() + at.event, gadget.begin(), gadget.end());

  std::vector<int> prov = shifted_provenance(p, t, at.event, (int)gadget.size());
  Remap rm = remap_components(p, std::move(word), prov);
  if (rm.fresh.size() != 1) fail_invalid("k1_move: expected exactly one new component");
  int o = rm.fresh[0];
  rm.p.comps[o].role = Role::surgery;
  rm.p.comps[o].color = ColorSpec::none();
  rm.p.comps[o].spin = spin_of(p, component) + Mod2C(1.0, 0.0);
  rm.p.comps[o].orientation = rm.traced.comps[o].orientation;

  MoveResult out;
  out.p = std::move(rm.p);
  out.fprime_factor = delta_spin(p.ctx(), sign);
  return out;
}

MoveResult k1_delete(const LinkPresentation& p, int meridian_component) {
  TraceResult t = p.traced();
  if (meridian_component < 0 || meridian_component >= t.ncomp())
    fail_invalid("k1_delete: no such component");
  if (p.comps[meridian_component].role != Role::surgery)
    fail_invalid("k1_delete: meridian must be a surgery component");
  const auto& w = p.diagram.word;
  int s = t.comps[meridian_component].first_cup_event;
  // expect the exact k1_move normal form: meridian(pos, -sign, {sign}) at s
  // followed by kink(pos, sign):
  //   cup(pos+1) cup(pos+2) x(pos+1,sign) cap(pos+2) x(pos,-sign)
  //   x(pos+1,sign) cap(pos+1) cup(pos+1) x(pos,sign) cap(pos+1)
  if (s + 9 >= (int)w.size() + 0 || s + 10 > (int)w.size())
    fail_not_computable("k1_delete: no eligible meridian (word too short)");
  int pos = w[s].pos - 1;
  auto is = [&](int off, Event::Type ty, int epos, int esign = 0) {
    const Event& e = w[s + off];
    if (e.type != ty || e.pos != epos) return false;
    if (ty == Event::Type::cross && e.sign != esign) return false;
    return true;
  };
  int sign = w[s + 2].type == Event::Type::cross ? w[s + 2].sign : 0;
  bool ok = pos >= 0 && sign != 0 && is(0, Event::Type::cup, pos + 1) &&
            is(1, Event::Type::cup, pos + 2) && is(2, Event::Type::cross, pos + 1, sign) &&
            is(3, Event::Type::cap, pos + 2) && is(4, Event::Type::cross, pos, -sign) &&
            is(5, Event::Type::cross, pos + 1, sign) && is(6, Event::Type::cap, pos) &&
            is(7, Event::Type::cup, pos + 1) && is(8, Event::Type::cross, pos, sign) &&
            is(9, Event::Type::cap, pos + 1);
  // all ten events must belong to the meridian or be the kink reabsorbed by J
  if (ok)
    for (int off : {0, 1, 3, 6})
      if (t.event_comp[s + off] != meridian_component) ok = false;
  if (!ok) fail_not_computable("k1_delete: no eligible meridian in normal form");

  TangleDiagram word = p.diagram;
  word.word.erase(word.word.begin() + s, word.word.begin() + s + 10);
  std::vector<int> prov;
  std::vector<ComponentData> keep;
  LinkPresentation base = p;
  base.comps.clear();
  for (int c = 0; c < t.ncomp(); ++c) {
    if (c == meridian_component) continue;
    int e = t.comps[c].first_cup_event;
    prov.push_back(e < s ? e : e - 10);
    base.comps.push_back(p.comps[c]);
  }
  Remap rm = remap_components(base, std::move(word), prov);
  if (!rm.fresh.empty()) fail_invalid("k1_delete: unexpected leftover component");
  MoveResult out;
  out.p = std::move(rm.p);
  out.fprime_factor = cd(1.0, 0.0) / delta_spin(p.ctx(), sign);
  return out;
}

namespace {

struct Doubled {
  TangleDiagram word;
  std::vector<int> emap;  // old event index -> first emitted new index
  int parallel_first_cup = -1;
};

Doubled double_component(const TangleDiagram& d, const TraceResult& t, int comp) {
  Doubled out;
  out.emap.resize(d.word.size());
  for (size_t i = 0; i < d.word.size(); ++i) {
    const Event& e = d.word[i];
    const auto& slice = t.slices[i];
    auto mapped = [&](int pos) {
      int extra = 0;
      for (int k = 0; k < pos; ++k)
        if (slice[k].comp == comp) ++extra;
      return pos + extra;
    };
    out.emap[i] = (int)out.word.word.size();
    int m = mapped(e.pos);
    bool lc = e.pos < (int)slice.size() && slice[e.pos].comp == comp;
    bool rc = (e.type != Event::Type::cup) && e.pos + 1 < (int)slice.size() &&
              slice[e.pos + 1].comp == comp;
    switch (e.type) {
      case Event::Type::cup: {
        bool mine = t.event_comp[i] == comp;
        out.word.word.push_back({Event::Type::cup, m, e.left_up, +1});
        if (mine) {
          out.word.word.push_back({Event::Type::cup, m + 1, e.left_up, +1});
          if (out.parallel_first_cup < 0 && (int)i == t.comps[comp].first_cup_event)
            out.parallel_first_cup = (int)out.word.word.size() - 1;
        }
        break;
      }
      case Event::Type::cap: {
        if (lc && rc) {  // doubled cap: inner then outer
          out.word.word.push_back({Event::Type::cap, m + 1, e.left_up, +1});
          out.word.word.push_back({Event::Type::cap, m, e.left_up, +1});
        } else {
          out.word.word.push_back({Event::Type::cap, m, e.left_up, +1});
        }
        break;
      }
      case Event::Type::cross: {
        if (lc && rc) {  // pair past pair: four crossings
          out.word.word.push_back({Event::Type::cross, m + 1, true, e.sign});
          out.word.word.push_back({Event::Type::cross, m, true, e.sign});
          out.word.word.push_back({Event::Type::cross, m + 2, true, e.sign});
          out.word.word.push_back({Event::Type::cross, m + 1, true, e.sign});
        } else if (lc) {  // (C1 C2 Z) -> (Z C1 C2)
          out.word.word.push_back({Event::Type::cross, m + 1, true, e.sign});
          out.word.word.push_back({Event::Type::cross, m, true, e.sign});
        } else if (rc) {  // (Z C1 C2) -> (C1 C2 Z)
          out.word.word.push_back({Event::Type::cross, m, true, e.sign});
          out.word.word.push_back({Event::Type::cross, m + 1, true, e.sign});
        } else {
          out.word.word.push_back({Event::Type::cross, m, true, e.sign});
        }
        break;
      }
    }
  }
  return out;
}

std::vector<Event> splice_gadget(int a, int b, bool a_up) {
  // band-sum of the strands at positions a < b (opposite directions): route
  // the a strand right, join, recreate, route back
  std::vector<Event> g;
  for (int j = a; j <= b - 2; ++j) g.push_back({Event::Type::cross, j, true, +1});
  g.push_back({Event::Type::cap, b - 1, a_up, +1});
  g.push_back({Event::Type::cup, b - 1, a_up, +1});
  for (int j = b - 2; j >= a; --j) g.push_back({Event::Type::cross, j, true, -1});
  return g;
}

}  // namespace

MoveResult k2_move(const LinkPresentation& p, int slider, int over_surgery) {
  require_valid(p);
  if (slider == over_surgery) fail_invalid("k2_move: slider must differ from the slide target");
  if (p.comps[over_surgery].role != Role::surgery)
    fail_invalid("k2_move: slide target must be a surgery component");
  TraceResult t = p.traced();

  Doubled db = double_component(p.diagram, t, over_surgery);
  TraceResult t2 = trace(db.word);
  int pid = t2.event_comp[db.parallel_first_cup];
  int jid = t2.event_comp[db.emap[t.comps[slider].first_cup_event]];

  // narrowest (then earliest) slice where the slider and the parallel expose
  // opposite strands; narrow slices keep the contraction state small
  int at = -1, a = -1, b = -1;
  bool a_up = true;
  for (size_t i = 0; i < t2.slices.size(); ++i) {
    const auto& sl = t2.slices[i];
    if (at >= 0 && sl.size() >= t2.slices[at].size()) continue;
    for (size_t x = 0; x < sl.size(); ++x) {
      if (sl[x].comp != jid) continue;
      bool found = false;
      for (size_t y = 0; y < sl.size(); ++y) {
        if (sl[y].comp != pid || sl[y].dir == sl[x].dir) continue;
        at = (int)i;
        a = (int)std::min(x, y);
        b = (int)std::max(x, y);
        a_up = sl[a].dir > 0;
        found = true;
        break;
      }
      if (found) break;
    }
  }
  if (at < 0)
    fail_invalid("k2_move: slider and parallel never coexist in this word (rebuild the "
                 "presentation interleaved)");

  std::vector<Event> g = splice_gadget(a, b, a_up);
  TangleDiagram word = db.word;
  word.word.insert(word.word.begin() + at, g.begin(), g.end());

  std::vector<int> prov(p.comps.size());
  for (size_t i = 0; i < p.comps.size(); ++i) {
    int e = db.emap[t.comps[i].first_cup_event];
    prov[i] = e < at ? e : e + (int)g.size();
  }
  Remap rm = remap_components(p, std::move(word), prov);
  // the parallel merged into the slider, so no fresh component may remain
  if (!rm.fresh.empty()) fail_invalid("k2_move: splice failed to merge the parallel");

  Mod2C cj = spin_of(p, slider);
  int li_new = rm.old_to_new[over_surgery];
  rm.p.comps[li_new].spin = spin_of(p, over_surgery) - cj;

  MoveResult out;
  out.p = std::move(rm.p);
  return out;
}

MoveResult hopf_stabilize(const LinkPresentation& p, int component, cd beta) {
  require_valid(p);
  ScalarContext ctx = p.ctx();
  const ComponentData& kc = p.comps[component];
  if (kc.role != Role::physical || kc.color.type != ColorSpec::Type::simple ||
      !in_ddc(ctx, kc.color.alpha))
    fail_invalid("hopf_stabilize: target must be a physical component with a simple "
                 "admissible color");
  if (!in_ddc(ctx, beta)) fail_invalid("hopf_stabilize: beta must be an admissible color");
  cd alpha = kc.color.alpha;
  cd lambda = mod_dim(ctx, alpha) / (-double(ctx.r) * ctx.qpow(beta * alpha));

  TraceResult t = p.traced();
  AttachPoint at = attach_point(t, p.diagram, component);
  WordBuilder g;
  g.meridian(at.pos, +1);  // 0-framed, positively linked
  std::vector<Event> gadget = g.events();
  TangleDiagram word = p.diagram;
  word.word.insert(word.word.begin() + at.event, gadget.begin(), gadget.end());

  Remap rm = remap_components(p, std::move(word),
                              shifted_provenance(p, t, at.event, (int)gadget.size()));
  if (rm.fresh.size() != 1) fail_invalid("hopf_stabilize: expected one new component");
  int o = rm.fresh[0];
  rm.p.comps[o].role = Role::physical;
  rm.p.comps[o].color = ColorSpec::simple(beta, lambda);
  rm.p.comps[o].spin = Mod2C(beta + cd(1.0, 0.0));
  rm.p.comps[o].orientation = rm.traced.comps[o].orientation;

  MoveResult out;
  out.p = std::move(rm.p);
  return out;
}

MoveResult birth_move(const LinkPresentation& p, int at_event, int a, int b) {
  require_valid(p);
  if (!is_computable(p)) fail_not_computable("birth_move: presentation must be computable");
  ScalarContext ctx = p.ctx();
  TraceResult t = p.traced();
  if (at_event < 0 || at_event > (int)p.diagram.word.size())
    fail_invalid("birth_move: event index out of range");
  const auto& slice = t.slices[at_event];
  if (a < 0 || b < a || b >= (int)slice.size())
    fail_invalid("birth_move: strand range out of range at this slice");

  LinkingData lk = p.linking(t);
  SpinColoring s = p.spin_coloring(lk);
  std::vector<long long> lkL(lk.surgery_ids.size(), 0), lkK(lk.physical_ids.size(), 0);
  for (int x = a; x <= b; ++x) {
    int c = slice[x].comp;
    for (size_t i = 0; i < lk.surgery_ids.size(); ++i)
      if (lk.surgery_ids[i] == c) lkL[i] += slice[x].dir;
    for (size_t j = 0; j < lk.physical_ids.size(); ++j)
      if (lk.physical_ids[j] == c) lkK[j] += slice[x].dir;
  }
  Mod2C abar = eval_curve(0, lkL, lkK, s);
  if (abar.is_integral(ctx.tol))
    fail_invalid("birth_move: sigma(dD) is integral; the disc is inadmissible");

  cd rep = kirby_representative(ctx, abar);
  cd scale = cd(1.0, 0.0) / std::abs(delta_spin(ctx, +1));

  WordBuilder g;
  g.circle(a, b, {+1}, /*reversed=*/true);   // K+
  g.circle(a, b, {-1}, /*reversed=*/false);  // K-
  std::vector<Event> gadget = g.events();
  int kplus_cup = 0;                                   // first event of the gadget
  int kminus_cup = (int)g.events().size() / 2;         // placeholder, fixed below
  // locate the two circle cups: the first event, and the first cup after the
  // K+ cap
  {
    int depth = 0;
    for (size_t i = 0; i < gadget.size(); ++i) {
      if (gadget[i].type == Event::Type::cup) ++depth;
      if (gadget[i].type == Event::Type::cap) --depth;
      if (depth == 0) {
        kminus_cup = (int)i + 1;
        break;
      }
    }
  }
  TangleDiagram word = p.diagram;
  word.word.insert(word.word.begin() + at_event, gadget.begin(), gadget.end());

  Remap rm = remap_components(p, std::move(word),
                              shifted_provenance(p, t, at_event, (int)gadget.size()));
  if (rm.fresh.size() != 2) fail_invalid("birth_move: expected two new components");
  int kp = rm.traced.event_comp[at_event + kplus_cup];
  int km = rm.traced.event_comp[at_event + kminus_cup];
  for (int c : {kp, km}) {
    rm.p.comps[c].role = Role::physical;
    rm.p.comps[c].color = ColorSpec::kirby(rep, scale);
    rm.p.comps[c].spin = abar;
    rm.p.comps[c].orientation = rm.traced.comps[c].orientation;
  }
  MoveResult out;
  out.p = std::move(rm.p);
  return out;
}

LinkPresentation connected_sum(const LinkPresentation& p1, int marked1,
                               const LinkPresentation& p2, int marked2) {
  ScalarContext ctx = p1.ctx();
  auto marked_color = [&](const LinkPresentation& p, int c) {
    if (p.comps[c].role != Role::physical || p.comps[c].color.type != ColorSpec::Type::simple)
      fail_invalid("connected_sum: marked components must be simple-colored physical components");
    return p.comps[c].color.alpha;
  };
  cd a1 = marked_color(p1, marked1), a2 = marked_color(p2, marked2);
  if (std::abs(a1 - a2) > ctx.tol) fail_invalid("connected_sum: marked colors differ");

  TraceResult t1 = trace(p1.diagram);
  int pause = t1.comps[marked1].first_cup_event + 1;
  UnionResult u = disjoint_union(p1, p2, pause);

  TraceResult tu = trace(u.p.diagram);
  int c1 = u.map1[marked1], c2 = u.map2[marked2];
  int width1 = (int)t1.slices[pause].size();
  TraceResult t2 = trace(p2.diagram);

  // splice right after the second marked component's first cup
  int e2 = pause + t2.comps[marked2].first_cup_event;  // index in the union word
  const Event& cup1 = p1.diagram.word[pause - 1];
  const Event& cup2 = p2.diagram.word[t2.comps[marked2].first_cup_event];
  int up1 = cup1.left_up ? cup1.pos : cup1.pos + 1;
  int dn2 = width1 + (cup2.left_up ? cup2.pos + 1 : cup2.pos);
  std::vector<Event> g = splice_gadget(up1, dn2, /*a_up=*/true);
  TangleDiagram word = u.p.diagram;
  word.word.insert(word.word.begin() + e2 + 1, g.begin(), g.end());

  std::vector<int> prov;
  std::vector<ComponentData> keep;
  LinkPresentation base = u.p;
  base.comps.clear();
  for (int c = 0; c < tu.ncomp(); ++c) {
    if (c == c2) continue;  // merges into c1
    int e = tu.comps[c].first_cup_event;
    prov.push_back(e <= e2 ? e : e + (int)g.size());
    base.comps.push_back(u.p.comps[c]);
  }
  Remap rm = remap_components(base, std::move(word), prov);
  if (!rm.fresh.empty()) fail_invalid("connected_sum: splice failed to merge the marked pair");
  (void)c1;
  return rm.p;
}

LinkPresentation make_computable(const LinkPresentation& p0) {
  LinkPresentation p = p0;
  for (int guard = 0; guard < 64; ++guard) {
    if (is_computable(p)) return p;
    int li = -1;
    for (size_t c = 0; c < p.comps.size(); ++c)
      if (p.comps[c].role == Role::surgery && p.comps[c].spin.is_integral(p.tol)) {
        li = (int)c;
        break;
      }
    if (li < 0) return p;
    int j = -1;
    for (size_t c = 0; c < p.comps.size(); ++c)
      if ((int)c != li && !p.comps[c].spin.is_integral(p.tol)) {
        if (j < 0 || (p.comps[c].role == Role::physical && p.comps[j].role == Role::surgery))
          j = (int)c;
      }
    if (j < 0)
      fail_not_computable("make_computable: no non-integral component to slide (integral "
                          "structure; Hopf-stabilize first)");
    p = k2_move(p, j, li).p;
  }
  fail_invalid("make_computable: did not converge");
}

}  // namespace nss
