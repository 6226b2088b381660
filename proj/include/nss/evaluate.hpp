#pragma once

#include <optional>

#include "nss/modules.hpp"
#include "nss/tangle.hpp"

namespace nss {

struct EvalOptions {
  long long max_state = 10'000'000;  // contraction width guard (complex entries)
  long long max_terms = 1'000'000;   // formal-color expansion guard
  double scalar_rtol = 1e-6;         // opened tangles must act by a scalar
  bool full_open_check = false;      // probe the full n^2 input space when opening
  int threads = 0;                   // 0 = hardware choice for term expansion
};

// Reshetikhin-Turaev contraction of a closed diagram with concrete colors
// (one Color per traced component).  Slice by slice, bottom to top.
cd evaluate_rt(const ModuleCache& cache, const TangleDiagram& d, const TraceResult& t,
               const std::vector<Color>& colors, const EvalOptions& opts = {});

// A closed diagram cut open at the first cup of one component, making a 1-1
// tangle with both endpoints carrying that component's color.
struct OpenedTangle {
  TangleDiagram diagram;
  TraceResult traced;
  int cut_event = 0;
  int component = 0;
};
OpenedTangle open_component(const TangleDiagram& d, const TraceResult& t, int component);

// Scalar by which the opened 1-1 tangle acts on its (simple) color.  The cut
// pair enters at the left boundary and is braided into position; naturality
// of the braiding keeps the closure isotopic to the original diagram, so the
// result is routing-independent (tested).  Throws not-a-scalar when the
// functional is not proportional to the matching evaluation.
cd evaluate_open(const ModuleCache& cache, const OpenedTangle& ot,
                 const std::vector<Color>& colors, const EvalOptions& opts = {},
                 int route_sign = -1);

// Renormalized invariant F' = d(alpha) <T>.  Formal colors are expanded
// multilinearly; each term opens `open_comp` when given (it must carry a
// simple admissible color in every term), otherwise the lowest-id component
// whose term color is Simple(alpha), alpha in the admissible set.
cd f_prime(const ModuleCache& cache, const TangleDiagram& d, const TraceResult& t,
           const std::vector<Color>& colors, std::optional<int> open_comp = std::nullopt,
           const EvalOptions& opts = {});

// (F' with alpha, F' with alpha + n r) on the given simple-colored component.
std::pair<cd, cd> eps_shift_check(const ModuleCache& cache, const TangleDiagram& d,
                                  const TraceResult& t, const std::vector<Color>& colors,
                                  int component, int n, const EvalOptions& opts = {});

}  // namespace nss
