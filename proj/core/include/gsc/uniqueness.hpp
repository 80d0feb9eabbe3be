// Decides whether the vertical rotation subgroup of a family is unique up to
// conjugacy, by recognizing the exceptional branch shapes that admit a second
// cyclic projection and analyzing the extra symmetry they carry.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsc/signature.hpp"
#include "gsc/superelliptic.hpp"

namespace gsc {

// A successful match against the two-projection shape
// y^{2d} = x^2 * prod_j (x^2 - c_j^2)^{e_j} (up to exchanging the roles of 0
// and infinity and twisting every exponent by a unit). Matching inspects the
// presented factor structure only; a curve written in coordinates that hide
// the +-symmetry is not recognized.
struct ExceptionalShape {
  long d = 0;         // rotation order n = 2d
  bool swapped = false;  // the distinguished double point sits at infinity
  long unit = 1;      // exponent twist u with u * l0 = 2 mod n
  int shape_case = 0;  // 1: one odd pair exponent; 2: two, summing to n
  // Normalized pair exponents, odd entries first.
  std::vector<long> pair_exponents;
  // Normalized exponent at the second fixed point.
  long infinity_exponent = 0;
};

std::optional<ExceptionalShape> match_exceptional_shape(const CurveEquation& eq);

// The witness data for a matched shape: the extra symmetry eta = (-x, w_2d y)
// on the normalized model, the group it spans with the rotation, and the
// quotient by that group.
struct ExceptionalAnalysis {
  ExceptionalShape shape;
  CurveEquation normalized_equation;  // sample moduli c_j = j
  AutGenerator eta;
  AutPresentation extended;          // <tau, eta | tau^2d, eta^2 = tau^2>
  std::vector<long> invariants;      // elementary divisors of the extension
  Signature quotient;                // sphere quotient by <tau, eta>
  long genus = 0;
  std::vector<std::string> warnings;
};

ExceptionalAnalysis analyze_exceptional(const ExceptionalShape& shape);

enum class Uniqueness { Unique, PossiblyNonUnique };

struct UniquenessVerdict {
  Uniqueness status = Uniqueness::Unique;
  // Stable identifier of the deciding rule: n_odd_or_two,
  // centerless_reduced_group, no_half_level_cone_point, exceptional_shape,
  // or non_exceptional_shape.
  std::string rule;
  std::string detail;
  std::optional<ExceptionalAnalysis> exceptional;
};

// Applies the decision rules in a fixed order: rotation order two or odd;
// reduced groups with trivial center; absence of an order-n/2 cone point in
// the rotation quotient; and finally the shape match.
UniquenessVerdict uniqueness_verdict(const GSFamily& family);

}  // namespace gsc
