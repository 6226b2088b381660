#pragma once

#include "nss/moves.hpp"
#include "nss/presentation.hpp"

namespace nss {

// (b+, b0, b-) of the surgery linking matrix.
std::tuple<int, int, int> signature(const IntMat& B);

struct NOptions {
  bool use_tilde = false;    // color surgery components by Omega~ instead of Omega
  int shift_component = -1;  // shift this component's Kirby representative ...
  cd rep_shift{0.0, 0.0};    // ... by this amount (legitimized by the mod-r proposition)
  EvalOptions eval;
};

struct NResult {
  cd value{0.0, 0.0};
  int b_plus = 0, b_zero = 0, b_minus = 0;
  long long terms = 1;  // expansion size actually evaluated
  cd f_prime{0.0, 0.0};
  cd delta_factor{1.0, 0.0};
};

// N(M, K, sigma) = Delta(L) F'(L, K, sigma) on a computable presentation;
// surgery components are colored by Kirby colors of degree c_i with the
// canonical representative.  Integral triples must be Hopf-stabilized and
// made computable by the caller (Theorem route).
NResult invariant_N(const ModuleCache& cache, const LinkPresentation& p,
                    const NOptions& opts = {});

// Secondary invariant for arbitrary compatible triples: zero on admissible
// ones; otherwise N(reference # p) / N(reference) with reference
// (S^3, unknot colored V_alpha).  Independent of alpha.
cd invariant_N0(const ModuleCache& cache, const LinkPresentation& p,
                cd alpha = cd(0.3, 0.0), const NOptions& opts = {});

struct ShiftCheck {
  cd base, shifted, tilde;
};
// N with the canonical representative, with the representative shifted by 2
// on one component, and with the Omega~ form everywhere; all must agree.
ShiftCheck kirby_color_shift_check(const ModuleCache& cache, const LinkPresentation& p,
                                   int component, const NOptions& opts = {});

}  // namespace nss
