#include "nss/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "nss/errors.hpp"
#include "nss/kernels.hpp"

namespace nss {

namespace {

struct Slot {
  Color obj;      // actual object: color or its dual, per strand direction
  ModulePtr mod;  // resolved module
  int dim;
};

// Boundary state of the contraction: a flat tensor over an optional free
// input axis (front) times the slot dimensions, leftmost slot slowest.
class Contraction {
 public:
  Contraction(const ModuleCache& cache, const EvalOptions& opts, size_t front)
      : cache_(cache), opts_(opts), front_(front) {
    state_.assign(front_, cd(1.0, 0.0));
  }

  const ModuleCache& cache() const { return cache_; }
  std::vector<cd>& state() { return state_; }
  size_t slot_count() const { return slots_.size(); }
  const Slot& slot(size_t i) const { return slots_[i]; }

  void push_slot_pair(int pos, Slot a, Slot b) {
    slots_.insert(slots_.begin() + pos, {std::move(a), std::move(b)});
  }

  void cup(int pos, bool left_up, const Color& color) {
    ModulePtr base = cache_.get(color);
    const VecC vec = left_up ? coev_vec(cache_.ctx(), *base) : coevp_vec(cache_.ctx(), *base);
    Color first = left_up ? color : Color::dual(color);
    Color second = left_up ? Color::dual(color) : color;
    ModulePtr fm = cache_.get(first), sm = cache_.get(second);
    apply(pos, 0, (size_t)base->dim * base->dim, 1, vec.data());
    slots_.insert(slots_.begin() + pos,
                  {Slot{first, fm, fm->dim}, Slot{second, sm, sm->dim}});
  }

  void cap(int pos, bool left_up) {
    const Slot& l = slots_[pos];
    // the base module is the one carried by the up-oriented leg
    const Color& base_color = left_up ? l.obj : slots_[pos + 1].obj;
    ModulePtr base = cache_.get(base_color);
    const VecC vec = left_up ? evp_vec(cache_.ctx(), *base) : ev_vec(cache_.ctx(), *base);
    apply(pos, 2, 1, (size_t)base->dim * base->dim, vec.data());
    slots_.erase(slots_.begin() + pos, slots_.begin() + pos + 2);
  }

  void cross(int pos, int sign) {
    const Slot l = slots_[pos], r = slots_[pos + 1];
    auto m = cache_.crossing(l.obj, r.obj, sign);
    size_t d = (size_t)l.dim * r.dim;
    apply(pos, 2, d, d, m->data());
    slots_[pos] = r;
    slots_[pos + 1] = l;
  }

  cd final_scalar() const {
    if (!slots_.empty()) fail_invalid("contraction finished with open strands");
    return state_[0];
  }

 private:
  // apply a dout x din matrix (column-major storage is irrelevant: duality
  // vectors are flat, crossing matrices are square Eigen column-major -- we
  // pass Eigen data for square matrices transposed via explicit copy)
  void apply(int pos, int consumed, size_t dout, size_t din, const cd* m_rowmajor) {
    size_t A = front_, B = 1;
    for (int i = 0; i < pos; ++i) A *= slots_[i].dim;
    for (size_t i = pos + consumed; i < slots_.size(); ++i) B *= slots_[i].dim;
    size_t out_size = A * dout * B;
    if ((long long)out_size > opts_.max_state)
      fail_resource("contraction state exceeds the width guard (" +
                    std::to_string(out_size) + " > " + std::to_string(opts_.max_state) + ")");
    scratch_.assign(out_size, cd(0.0, 0.0));
    kernels::apply_op(scratch_.data(), state_.data(), A, dout, din, B, m_rowmajor);
    state_.swap(scratch_);
  }

  const ModuleCache& cache_;
  const EvalOptions& opts_;
  size_t front_;
  std::vector<Slot> slots_;
  std::vector<cd> state_;
  std::vector<cd> scratch_;
};

void check_colors(const TraceResult& t, const std::vector<Color>& colors) {
  if ((int)colors.size() != t.ncomp())
    fail_invalid("color count (" + std::to_string(colors.size()) + ") != component count (" +
                 std::to_string(t.ncomp()) + ")");
}

}  // namespace

cd evaluate_rt(const ModuleCache& cache, const TangleDiagram& d, const TraceResult& t,
               const std::vector<Color>& colors, const EvalOptions& opts) {
  check_colors(t, colors);
  for (const Color& c : colors)
    if (!c.concrete()) fail_invalid("evaluate_rt: formal color; use f_prime for expansion");
  Contraction cx(cache, opts, 1);
  for (size_t i = 0; i < d.word.size(); ++i) {
    const Event& e = d.word[i];
    switch (e.type) {
      case Event::Type::cup:
        cx.cup(e.pos, e.left_up, colors[t.event_comp[i]]);
        break;
      case Event::Type::cap:
        cx.cap(e.pos, e.left_up);
        break;
      case Event::Type::cross:
        cx.cross(e.pos, e.sign);
        break;
    }
  }
  return cx.final_scalar();
}

OpenedTangle open_component(const TangleDiagram& d, const TraceResult& t, int component) {
  if (component < 0 || component >= t.ncomp()) fail_invalid("open_component: no such component");
  OpenedTangle ot;
  ot.diagram = d;
  ot.traced = t;
  ot.component = component;
  ot.cut_event = t.comps[component].first_cup_event;
  return ot;
}

cd evaluate_open(const ModuleCache& cache, const OpenedTangle& ot,
                 const std::vector<Color>& colors, const EvalOptions& opts, int route_sign) {
  const TangleDiagram& d = ot.diagram;
  const TraceResult& t = ot.traced;
  check_colors(t, colors);
  const Color& color = colors[ot.component];
  if (color.kind() != Color::Kind::simple || !in_ddc(cache.ctx(), color.alpha()))
    fail_invalid("opened component must carry a simple admissible color");
  const Event& cut = d.word[ot.cut_event];

  ModulePtr base = cache.get(color);
  size_t n = (size_t)base->dim;
  size_t front = opts.full_open_check ? n * n : n;

  Contraction cx(cache, opts, front);
  // seed: the would-be cup outputs as explicit boundary slots at (0, 1) with
  // state = identity on the probed input subspace (diagonal or full)
  Color first = cut.left_up ? color : Color::dual(color);
  Color second = cut.left_up ? Color::dual(color) : color;
  ModulePtr fm = cache.get(first), sm = cache.get(second);
  cx.push_slot_pair(0, Slot{first, fm, fm->dim}, Slot{second, sm, sm->dim});
  auto& st = cx.state();
  st.assign(front * n * n, cd(0.0, 0.0));
  for (size_t k = 0; k < front; ++k) {
    size_t x = opts.full_open_check ? k / n : k;
    size_t y = opts.full_open_check ? k % n : k;
    st[k * n * n + x * n + y] = cd(1.0, 0.0);
  }

  for (size_t i = 0; i < d.word.size(); ++i) {
    const Event& e = d.word[i];
    if ((int)i == ot.cut_event) {
      // braid the pair from (0,1) into (pos, pos+1); any route sign closes up
      // to an isotopic diagram
      for (int step = 0; step < e.pos; ++step) {
        cx.cross(step + 1, route_sign);
        cx.cross(step, route_sign);
      }
      continue;
    }
    int off = (int)i < ot.cut_event ? 2 : 0;
    switch (e.type) {
      case Event::Type::cup:
        cx.cup(e.pos + off, e.left_up, colors[t.event_comp[i]]);
        break;
      case Event::Type::cap:
        cx.cap(e.pos + off, e.left_up);
        break;
      case Event::Type::cross:
        cx.cross(e.pos + off, e.sign);
        break;
    }
  }
  if (cx.slot_count() != 0) fail_invalid("opened evaluation left stray strands");

  // the functional must be a multiple of the matching evaluation; project and
  // verify
  const VecC w_full = cut.left_up ? evp_vec(cache.ctx(), *base) : ev_vec(cache.ctx(), *base);
  std::vector<cd> w(front);
  for (size_t k = 0; k < front; ++k) {
    size_t x = opts.full_open_check ? k / n : k;
    size_t y = opts.full_open_check ? k % n : k;
    w[k] = w_full(x * n + y);
  }
  const std::vector<cd>& phi = cx.state();
  cd num(0.0, 0.0);
  double den = 0.0, phinorm = 0.0;
  for (size_t k = 0; k < front; ++k) {
    num += std::conj(w[k]) * phi[k];
    den += std::norm(w[k]);
    phinorm += std::norm(phi[k]);
  }
  cd scalar = num / den;
  double resid = 0.0;
  for (size_t k = 0; k < front; ++k) resid += std::norm(phi[k] - scalar * w[k]);
  resid = std::sqrt(resid);
  phinorm = std::sqrt(phinorm);
  if (phinorm < 1e-13) return cd(0.0, 0.0);
  if (resid > opts.scalar_rtol * phinorm)
    fail_invalid("opened tangle does not act by a scalar (residual " + std::to_string(resid) +
                 ")");
  return scalar;
}

namespace {

struct Term {
  cd coeff;
  std::vector<Color> colors;
};

std::vector<Term> expand_terms(const std::vector<Color>& colors, const EvalOptions& opts) {
  std::vector<Term> acc = {{cd(1.0, 0.0), {}}};
  for (const Color& c : colors) {
    auto terms = c.expand();
    if ((long long)acc.size() * (long long)terms.size() > opts.max_terms)
      fail_resource("formal expansion exceeds the term guard");
    std::vector<Term> next;
    next.reserve(acc.size() * terms.size());
    for (const auto& base : acc)
      for (const auto& [coef, cc] : terms) {
        Term t2 = base;
        t2.coeff *= coef;
        t2.colors.push_back(cc);
        next.push_back(std::move(t2));
      }
    acc = std::move(next);
  }
  return acc;
}

int pick_open(const ModuleCache& cache, const std::vector<Color>& term_colors,
              std::optional<int> open_comp) {
  if (open_comp) {
    const Color& c = term_colors[*open_comp];
    if (c.kind() != Color::Kind::simple || !in_ddc(cache.ctx(), c.alpha()))
      fail_invalid("requested opening component is not simple-admissible in this term");
    return *open_comp;
  }
  for (size_t i = 0; i < term_colors.size(); ++i)
    if (term_colors[i].kind() == Color::Kind::simple && in_ddc(cache.ctx(), term_colors[i].alpha()))
      return (int)i;
  fail_not_computable("no component carries a simple admissible color: not renormalizable");
}

}  // namespace

cd f_prime(const ModuleCache& cache, const TangleDiagram& d, const TraceResult& t,
           const std::vector<Color>& colors, std::optional<int> open_comp,
           const EvalOptions& opts) {
  check_colors(t, colors);
  std::vector<Term> terms = expand_terms(colors, opts);

  auto eval_term = [&](const Term& term) -> cd {
    int oc = pick_open(cache, term.colors, open_comp);
    OpenedTangle ot = open_component(d, t, oc);
    cd bracket = evaluate_open(cache, ot, term.colors, opts);
    return term.coeff * mod_dim(cache.ctx(), term.colors[oc].alpha()) * bracket;
  };

  std::vector<cd> results(terms.size());
  unsigned hw = opts.threads > 0 ? (unsigned)opts.threads : std::thread::hardware_concurrency();
  if (terms.size() >= 4 && hw > 1) {
    unsigned nt = std::min<unsigned>(hw, (unsigned)terms.size());
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (unsigned w = 0; w < nt; ++w)
      pool.emplace_back([&, w]() {
        try {
          for (size_t i = w; i < terms.size(); i += nt) results[i] = eval_term(terms[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  } else {
    for (size_t i = 0; i < terms.size(); ++i) results[i] = eval_term(terms[i]);
  }
  cd total(0.0, 0.0);
  for (const cd& v : results) total += v;  // fixed index order: deterministic
  return total;
}

std::pair<cd, cd> eps_shift_check(const ModuleCache& cache, const TangleDiagram& d,
                                  const TraceResult& t, const std::vector<Color>& colors,
                                  int component, int n, const EvalOptions& opts) {
  check_colors(t, colors);
  const Color& c = colors[component];
  if (c.kind() != Color::Kind::simple) fail_invalid("eps_shift_check: component must be simple-colored");
  std::vector<Color> shifted = colors;
  shifted[component] = Color::simple(c.alpha() + cd(double(n) * cache.ctx().r, 0.0));
  cd base = f_prime(cache, d, t, colors, component, opts);
  cd moved = f_prime(cache, d, t, shifted, component, opts);
  return {base, moved};
}

}  // namespace nss
