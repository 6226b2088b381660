#pragma once

#include <optional>
#include <vector>

#include "nss/intmat.hpp"
#include "nss/scalars.hpp"

namespace nss {

// C/2Z coloring of a presentation: c on surgery components, w on physical
// ones.  Together they represent the spin structure (Prop-level bijection).
struct SpinColoring {
  std::vector<Mod2C> c;
  std::vector<Mod2C> w;
};

// Two readings of the characteristic equation.  The calibration test against
// eval_curve on surgery parallels selects bc_plus_cprime; the other form is
// kept so the test can demonstrate the rejection.
enum class CharConvention { bc_plus_cprime, b_times_c_plus_cprime };
inline constexpr CharConvention kCharConvention = CharConvention::bc_plus_cprime;

// Residual of the characteristic equation, one entry per surgery component:
//   convention A:  (B c)_j + c'_j - B_jj,   c'_j = sum_nu w_nu lk(L_j, K_nu)
//   convention B:  (B (c + c'))_j - B_jj
// Zero vector (in C/2Z) iff c extends to a spin structure on the surgery.
std::vector<Mod2C> char_residual(const IntMat& B, const IntMat& lkLK,
                                 const std::vector<Mod2C>& c,
                                 const std::vector<Mod2C>& w,
                                 CharConvention conv = kCharConvention);

// Solution set of the characteristic equation, described as a particular
// solution plus torsion generators (with orders) and free C/2Z directions.
struct SpinSolution {
  std::vector<Mod2C> particular;
  struct Torsion {
    std::vector<Mod2C> generator;  // adding it `order` times returns to start
    long long order;
  };
  std::vector<Torsion> torsion;
  std::vector<std::vector<long long>> free_dirs;  // integer directions, free C/2Z parameter each

  bool finite() const { return free_dirs.empty(); }
  long long count() const;  // number of solutions when finite
  std::vector<std::vector<Mod2C>> enumerate() const;  // finite case only
};

struct SpinSolveResult {
  std::optional<SpinSolution> solution;
  int obstruction_row = -1;  // row of the SNF system that blocks, when empty
};

SpinSolveResult solve_spin(const IntMat& B, const IntMat& lkLK,
                           const std::vector<Mod2C>& w,
                           CharConvention conv = kCharConvention);

// sigma(gamma) for a framed oriented curve gamma disjoint from L u K:
//   1 + f + sum_i lk(gamma, L_i) c_i + sum_j lk(gamma, K_j) w_j  in C/2Z.
Mod2C eval_curve(long long framing, const std::vector<long long>& lkL,
                 const std::vector<long long>& lkK, const SpinColoring& s);

bool all_integral(const std::vector<Mod2C>& v, double tol);

}  // namespace nss
