#pragma once

#include "nss/presentation.hpp"

namespace nss {

// A move returns the rewritten presentation together with the factor by
// which F' is expected to change (the invariance harness checks
// Delta(L') F'(p') == Delta(L) F'(p) regardless).
struct MoveResult {
  LinkPresentation p;
  cd fprime_factor{1.0, 0.0};
};

// Reverse the orientation of a surgery component; c_i -> -c_i, F' unchanged.
MoveResult orientation_move(const LinkPresentation& p, int component);

// Positive direction: blow up a sign-framed meridian o around component J
// (lk(o, J) = -sign) and give J a matching full twist; c(o) = c_sigma(J) + 1,
// F' gains delta_spin(sign) while b_sign grows by one.
MoveResult k1_move(const LinkPresentation& p, int component, int sign);
// Negative direction: remove a stabilization meridian in the normal form
// produced by k1_move (errors when no eligible meridian is recognized).
MoveResult k1_delete(const LinkPresentation& p, int meridian_component);

// Handle slide: J' = J band-summed with the blackboard parallel of surgery
// component Li; c(Li) -> c(Li) - c_sigma(J), everything else keeps its value.
MoveResult k2_move(const LinkPresentation& p, int slider, int over_surgery);

// Add a 0-framed meridian colored by d(alpha_i)/(-r q^{beta alpha_i}) times
// V_beta around a Ddc-colored physical component; F' unchanged.
MoveResult hopf_stabilize(const LinkPresentation& p, int component, cd beta);

// Birth move around the strand range [a, b] of the slice before event
// `at_event`: inserts K+ (reversed, +1-framed) and K- (-1-framed), both
// colored 1/|Delta^Spin| times a Kirby color of degree sigma(dD).
MoveResult birth_move(const LinkPresentation& p, int at_event, int a, int b);

// Banded connected sum along two marked components carrying the same simple
// color.
LinkPresentation connected_sum(const LinkPresentation& p1, int marked1,
                               const LinkPresentation& p2, int marked2);

// Slide non-integrally colored components over integral surgery components
// until the presentation is computable (Theorem route).  Errors if stuck.
LinkPresentation make_computable(const LinkPresentation& p);

}  // namespace nss
