// Construction of cyclic-rotation surface families: curve equations, lifted
// automorphism generators, quotient signatures, and genus bookkeeping for
// every admissible reduced symmetry group on the sphere.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsc/moebius.hpp"
#include "gsc/platonic.hpp"
#include "gsc/poly.hpp"
#include "gsc/signature.hpp"

namespace gsc {

// Isomorphism type of the symmetry group induced on the x-line once the
// vertical rotation has been quotiented away.
enum class ReducedKind {
  Trivial,
  Cyclic,
  Dihedral,
  Tetrahedral,
  Octahedral,
  Icosahedral,
};

struct ReducedGroup {
  ReducedKind kind = ReducedKind::Trivial;
  // Rotation order for the cyclic and dihedral kinds; ignored otherwise.
  long m = 1;

  long order() const;
  std::string display_name() const;
  // Stable machine token: "trivial", "cyclic:4", "dihedral:3",
  // "tetrahedral", "octahedral", "icosahedral".
  std::string token() const;
  static ReducedGroup parse(const std::string& token);

  bool operator==(const ReducedGroup& other) const {
    return kind == other.kind && m == other.m;
  }
};

struct CurveFactor {
  Poly poly;
  long exponent = 1;
};

// y^n = product of the factors. The exponent of a point at infinity is
// implied by the total degree.
struct CurveEquation {
  long n = 0;
  std::vector<CurveFactor> factors;

  // Branching exponent at infinity, reduced to [0, n).
  long infinity_exponent() const;
  std::string to_string() const;
};

CurveEquation make_curve_equation(long n, std::vector<CurveFactor> factors);

// A finite product  c * prod_k p_k(x)^{e_k}  with monic polynomial bases and
// nonzero integer exponents. Keeping the factored form avoids the huge
// intermediate gcds a reduced rational function would need.
class FactoredMultiplier {
public:
  FactoredMultiplier() : constant_(CycNumber(1)) {}
  explicit FactoredMultiplier(CycNumber constant)
      : constant_(std::move(constant)) {}

  const CycNumber& constant() const { return constant_; }
  const std::vector<std::pair<Poly, long>>& factors() const {
    return factors_;
  }

  bool is_constant() const { return factors_.empty(); }
  // Collapses the factor list when it cancels to a constant; empty when the
  // product genuinely depends on x.
  std::optional<CycNumber> as_constant() const;

  // Multiplies by p(x)^e. The leading coefficient is absorbed into the
  // constant so stored bases stay monic; equal bases merge.
  void multiply_by(const Poly& p, long e);

  FactoredMultiplier times(const FactoredMultiplier& other) const;
  FactoredMultiplier pow(long e) const;
  // Substitutes x -> m(x), clearing denominators factor by factor.
  FactoredMultiplier composed_with(const MoebiusMap& m) const;

  std::string to_string() const;

private:
  CycNumber constant_;
  std::vector<std::pair<Poly, long>> factors_;
};

// One generator of the lifted symmetry group, acting as
// (x, y) -> (moebius(x), multiplier(x) * y).
struct AutGenerator {
  std::string name;
  MoebiusMap moebius;
  FactoredMultiplier multiplier;
  // False when the construction determines the x-action but exhibits no
  // closed-form y-multiplier (large icosahedral reflections).
  bool multiplier_known = true;
};

// A defining relation: the word evaluates to tau^{tau_power}. Letters k >= 0
// name generators[k]; -(k + 1) names the inverse of generators[k]. The
// leftmost letter acts last.
struct GroupRelation {
  std::string text;
  std::vector<int> word;
  long tau_power = 0;
  bool tau_power_known = true;
  // Predicted power from the closed-form exponent tables, when one exists;
  // disagreement with the computed power is reported as a warning.
  std::optional<long> shortcut_power;
};

struct AutPresentation {
  long n = 0;
  std::vector<AutGenerator> generators;
  std::vector<GroupRelation> relations;
  bool abelian = false;

  std::string to_string() const;
};

struct GSFamily {
  long n = 0;
  ReducedGroup reduced;
  long l0 = 0;
  std::vector<long> special_exponents;
  std::vector<long> orbit_exponents;
  long free_parameters = 0;
  CurveEquation equation;
  AutPresentation presentation;
  // Quotient by the vertical rotation alone (a sphere with cone points).
  Signature rotation_quotient;
  // Quotient by the full lifted group.
  Signature full_quotient;
  long genus = 0;
  std::vector<std::string> warnings;
};

// Builds the family with the given branch data over sample parameter values.
// orbit_exponents lists the exponents of the generic (free) orbits and must
// avoid zero; special_exponents lists the exponents on the distinguished
// orbits in the fixed order of the reduced kind (dihedral: x^m-1, x^m+1;
// tetrahedral: face-pair, edge; octahedral/icosahedral: face, vertex-ish,
// edge orbit) and may contain zeros. l0 is the exponent at the origin and
// must be zero unless the reduced group fixes a point.
// Throws InvalidInput for malformed data, ConstraintError (with a named
// constraint) when the branch data violates an admissibility congruence.
GSFamily build_family(long n, const ReducedGroup& reduced, long l0,
           const std::vector<long>& orbit_exponents,
           const std::vector<long>& special_exponents = {});

// Checks that (x, y) -> (m(x), mult(x) y) maps the curve to itself:
// mult^n * F must equal F after the substitution x -> m(x), projectively.
bool preserves_equation(const CurveEquation& eq, const MoebiusMap& m,
            const FactoredMultiplier& mult);

// Decides whether the vertical rotation is central given how the candidate
// reduced symmetry permutes branch points: every orbit must carry one
// exponent value.
bool rotation_is_central(const std::vector<std::vector<std::size_t>>& orbits,
            const std::vector<long>& exponents);

// Elementary divisors of the abelianized presentation (tau adjoined as an
// extra generator of order n). Requires presentation.abelian.
std::vector<long> abelian_invariants(const AutPresentation& presentation);

struct LiftedAction {
  MoebiusMap moebius;
  FactoredMultiplier multiplier;
  bool multiplier_known = true;
};

// Composes the named word of generators (same letter convention as
// GroupRelation::word).
LiftedAction evaluate_word(const AutPresentation& presentation,
             const std::vector<int>& word);

}  // namespace gsc
