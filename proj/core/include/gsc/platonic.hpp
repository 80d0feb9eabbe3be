#pragma once
// Ground forms and generators for the three exceptional rotation groups of
// the sphere, used as building blocks for curve families whose reduced
// automorphism group is tetrahedral, octahedral, or icosahedral.  The forms
// vanish on the special orbits; the invariant map f sends the sphere to the
// quotient line with the three special orbits over 0, 1, infinity.

#include "gsc/moebius.hpp"
#include "gsc/poly.hpp"

namespace gsc {

enum class PlatonicKind { Tetrahedral, Octahedral, Icosahedral };

struct PlatonicData {
  PlatonicKind kind;
  std::string name;
  long reduced_order;    // 12, 24, 60
  MoebiusMap gen_a;      // rotation fixing the first form's orbit setwise
  MoebiusMap gen_b;      // order-three rotation mixing the orbits
  Poly r1, r2, r3;       // ground forms; r3's orbit includes infinity
  long orbit1, orbit2, orbit3;  // point counts of the special orbits
  long stab1, stab2, stab3;     // stabilizer orders of those orbits
  // Invariant map f = f_num / f_den with coprime parts, degree reduced_order.
  Poly f_num, f_den;

  // Polynomial cutting out the fiber of f over c; c must avoid 0 and 1
  // (those fibers are the special orbits themselves).
  Poly orbit_factor(const CycNumber& c) const;
};

const PlatonicData& platonic_data(PlatonicKind kind);

struct EquivarianceIdentity {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct EquivarianceReport {
  PlatonicKind kind;
  std::vector<EquivarianceIdentity> identities;
  bool all_hold() const;
};

// Recompute every transformation identity of the ground forms exactly:
// behavior of r1, r2, r3 under both generators, invariance of f, the
// algebraic relation tying the three forms together, and the generator
// orders.  Everything is checked over exact cyclotomic arithmetic.
EquivarianceReport verify_equivariance(PlatonicKind kind);

}  // namespace gsc
