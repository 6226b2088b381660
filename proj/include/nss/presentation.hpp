#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nss/evaluate.hpp"
#include "nss/modules.hpp"
#include "nss/spin.hpp"
#include "nss/tangle.hpp"

namespace nss {

enum class Role { surgery, physical };

// User-facing color of a physical component; surgery components are colored
// by Kirby combinations at evaluation time and carry `none`.
struct ColorSpec {
  enum class Type { none, simple, eps, kirby };
  Type type = Type::none;
  cd alpha{0.0, 0.0};  // simple / kirby
  int k = 0;           // eps
  cd scale{1.0, 0.0};

  static ColorSpec none() { return {}; }
  static ColorSpec simple(cd a, cd s = cd(1.0, 0.0)) {
    return {Type::simple, a, 0, s};
  }
  static ColorSpec eps(int k, cd s = cd(1.0, 0.0)) { return {Type::eps, cd(0, 0), k, s}; }
  static ColorSpec kirby(cd a, cd s = cd(1.0, 0.0)) { return {Type::kirby, a, 0, s}; }
};

struct ComponentData {
  Role role = Role::surgery;
  ColorSpec color;
  Mod2C spin;           // c_i for surgery, w_j for physical
  int orientation = 1;  // must match the traced word
};

// Surgery link + colored physical link + spin coloring, all carried by one
// Morse word.  Components are indexed in traced order.
struct LinkPresentation {
  int r = 4;
  double tol = 1e-9;
  TangleDiagram diagram;
  std::vector<ComponentData> comps;

  ScalarContext ctx() const { return ScalarContext::make(r, tol); }
  TraceResult traced() const { return trace(diagram); }
  std::vector<bool> surgery_mask() const;
  LinkingData linking(const TraceResult& t) const { return split_linking(t, surgery_mask()); }
  // c over linking.surgery_ids order, w over physical_ids order
  SpinColoring spin_coloring(const LinkingData& lk) const;
};

// Canonical Kirby representative of a C/2Z degree: real part moved into
// (0, 2), ties at 0 resolved by the +2 shift.
cd kirby_representative(const ScalarContext& ctx, const Mod2C& degree);
// Omega_alpha = sum_{k=1}^{r/2} d(alpha+2k-1) [alpha+2k-1]
Color kirby_color(const ScalarContext& ctx, cd alpha, cd scale = cd(1.0, 0.0));
// Omega~_alpha = 1/2 sum_{k=1}^{r} d(alpha+2k-r-1) [alpha+2k-r-1]
Color kirby_color_tilde(const ScalarContext& ctx, cd alpha, cd scale = cd(1.0, 0.0));

// Materialize a physical color spec (throws on none).
Color make_color(const ScalarContext& ctx, const ColorSpec& spec);

struct ValidationReport {
  std::vector<std::string> violations;
  bool computable = false;
  bool admissible = false;
  bool valid() const { return violations.empty(); }
};

// Checks: word integrity, orientation fields, physical color degree vs w,
// characteristic residual; reports computability and admissibility.
ValidationReport validate_presentation(const LinkPresentation& p);
void require_valid(const LinkPresentation& p);  // throws invalid_input

bool is_computable(const LinkPresentation& p);
bool is_admissible(const LinkPresentation& p);

// Word construction helpers shared by the moves and the test corpus.
class WordBuilder {
 public:
  WordBuilder& cup(int pos, bool left_up = true);
  WordBuilder& cap(int pos, bool left_up = true);
  WordBuilder& cross(int pos, int sign);
  // curl on the strand at `pos`; `up` selects the strand direction it is
  // attached to.  Writhe contribution = sign, evaluation theta^sign.
  WordBuilder& kink(int pos, int sign, bool up = true);
  // simple closed circle around the strand at `pos` (one strand through it):
  // linking = lk_sign, framing = sum of kink signs
  WordBuilder& meridian(int pos, int lk_sign, const std::vector<int>& kinks = {},
                        bool reversed = false);
  // flat circle around the strand range [a, b] at the current slice, with
  // optional kinks; linking with a component = sum of its strand directions
  // in the range (orientation-reversed circle linking is negated)
  WordBuilder& circle(int a, int b, const std::vector<int>& kinks = {}, bool reversed = false);

  const std::vector<Event>& events() const { return events_; }
  TangleDiagram take();

 private:
  std::vector<Event> events_;
};

// Convenience words.
TangleDiagram unknot_word(const std::vector<int>& kink_signs = {});
// two components with the given mutual linking sign and per-component kinks
TangleDiagram two_component_word(int lk_sign, const std::vector<int>& kinksA,
                                 const std::vector<int>& kinksB);

struct UnionResult {
  LinkPresentation p;
  std::vector<int> map1, map2;  // old component id -> new component id
};

// Disjoint union, interleaved so that the components of p2 coexist with the
// widest slice of p1 (pause_event overrides the pause position).  Keeps all
// spins, roles and colors.
UnionResult disjoint_union(const LinkPresentation& p1, const LinkPresentation& p2,
                           int pause_event = -1);

}  // namespace nss
