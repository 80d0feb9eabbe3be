// Assembles surface families from branch data: validates the admissibility
// constraints, writes down a defining curve over sample parameter values,
// constructs the lifted symmetry generators with exact multipliers, and
// derives both quotient signatures together with the genus.

#include "gsc/superelliptic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "gsc/error.hpp"
#include "gsc/numeric.hpp"
#include "gsc/ratfunc.hpp"
#include "gsc/smith.hpp"

namespace gsc {

namespace {

// gcd(n, l) with the exponent read mod n and gcd(n, 0) = n, so n / result is
// the local rotation order over a point with branching exponent l.
long exponent_gcd(long n, long l) {
  l = mod_ll(l, n);
  return l == 0 ? n : std::gcd(n, l);
}

std::string tau_text(long power) {
  if (power == 0) return "1";
  if (power == 1) return "tau";
  return "tau^" + std::to_string(power);
}

std::string rational_text(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

Poly poly_x_pow_minus(long m, const CycNumber& c) {
  return Poly::monomial(m) - Poly(c);
}

CycNumber sqrt_two() {
  return CycNumber::root_of_unity(8, 1) - CycNumber::root_of_unity(8, 3);
}

// Exact realization of 2^{p/n} as a cyclotomic number, valid when n | 2p.
CycNumber two_power_realization(long p, long n) {
  long doubled = 2 * p / n;
  CycNumber out = CycNumber(2).pow(p / n);
  if (doubled % 2 != 0) out = out * sqrt_two();
  return out;
}

}  // namespace

long ReducedGroup::order() const {
  switch (kind) {
    case ReducedKind::Trivial: return 1;
    case ReducedKind::Cyclic: return m;
    case ReducedKind::Dihedral: return 2 * m;
    case ReducedKind::Tetrahedral: return 12;
    case ReducedKind::Octahedral: return 24;
    case ReducedKind::Icosahedral: return 60;
  }
  throw InternalError("unhandled reduced group kind");
}

std::string ReducedGroup::display_name() const {
  switch (kind) {
    case ReducedKind::Trivial: return "trivial";
    case ReducedKind::Cyclic: return "C" + std::to_string(m);
    case ReducedKind::Dihedral: return "D" + std::to_string(m);
    case ReducedKind::Tetrahedral: return "A4";
    case ReducedKind::Octahedral: return "S4";
    case ReducedKind::Icosahedral: return "A5";
  }
  throw InternalError("unhandled reduced group kind");
}

std::string ReducedGroup::token() const {
  switch (kind) {
    case ReducedKind::Trivial: return "trivial";
    case ReducedKind::Cyclic: return "cyclic:" + std::to_string(m);
    case ReducedKind::Dihedral: return "dihedral:" + std::to_string(m);
    case ReducedKind::Tetrahedral: return "tetrahedral";
    case ReducedKind::Octahedral: return "octahedral";
    case ReducedKind::Icosahedral: return "icosahedral";
  }
  throw InternalError("unhandled reduced group kind");
}

ReducedGroup ReducedGroup::parse(const std::string& token) {
  if (token == "trivial") return {ReducedKind::Trivial, 1};
  if (token == "tetrahedral") return {ReducedKind::Tetrahedral, 1};
  if (token == "octahedral") return {ReducedKind::Octahedral, 1};
  if (token == "icosahedral") return {ReducedKind::Icosahedral, 1};
  auto colon = token.find(':');
  if (colon != std::string::npos) {
    std::string head = token.substr(0, colon);
    std::string tail = token.substr(colon + 1);
    bool digits = !tail.empty() &&
                  std::all_of(tail.begin(), tail.end(),
                              [](unsigned char c) { return std::isdigit(c); });
    if (digits && tail.size() <= 9 && (head == "cyclic" || head == "dihedral")) {
      long m = std::stol(tail);
      if (m < 2)
        throw InvalidInput("reduced group '" + token + "' needs m >= 2");
      return {head == "cyclic" ? ReducedKind::Cyclic : ReducedKind::Dihedral, m};
    }
  }
  throw InvalidInput(
      "unknown reduced group token '" + token +
      "'; expected trivial, cyclic:M, dihedral:M, tetrahedral, octahedral, "
      "or icosahedral");
}

long CurveEquation::infinity_exponent() const {
  long degree_sum = 0;
  for (const auto& f : factors) degree_sum += f.poly.degree() * f.exponent;
  return mod_ll(-degree_sum, n);
}

std::string CurveEquation::to_string() const {
  std::ostringstream out;
  out << "y^" << n << " = ";
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out << " * ";
    first = false;
    std::string body = f.poly.to_string();
    bool bare = f.poly == Poly::variable();
    if (bare)
      out << "x";
    else
      out << "(" << body << ")";
    if (f.exponent != 1) out << "^" << f.exponent;
  }
  return out.str();
}

CurveEquation make_curve_equation(long n, std::vector<CurveFactor> factors) {
  if (n < 2) throw InvalidInput("curve equations need n >= 2");
  if (factors.empty())
    throw InvalidInput("curve equations need at least one branch factor");
  for (const auto& f : factors) {
    if (f.poly.is_constant())
      throw InvalidInput("curve factors must be nonconstant polynomials");
    if (f.exponent < 1 || f.exponent >= n)
      throw InvalidInput("curve factor exponents must lie in [1, n-1]");
  }
  // Root disjointness across factors is the callers' responsibility; the
  // builders only ever produce factors with pairwise disjoint root sets.
  CurveEquation eq;
  eq.n = n;
  eq.factors = std::move(factors);
  return eq;
}

std::optional<CycNumber> FactoredMultiplier::as_constant() const {
  if (factors_.empty()) return constant_;
  // Multiply the positive and negative parts out and divide once; the
  // factored bases need not match textually even when the product is
  // constant (composing can drop a root to infinity).
  Poly pos(CycNumber(1));
  Poly neg(CycNumber(1));
  for (const auto& [base, e] : factors_) {
    if (e > 0)
      pos = pos * base.pow(e);
    else
      neg = neg * base.pow(-e);
  }
  if (pos.degree() != neg.degree()) return std::nullopt;
  auto [quot, rem] = Poly::divmod(pos, neg);
  if (!rem.is_zero() || !quot.is_constant()) return std::nullopt;
  return constant_ * quot.coeff(0);
}

void FactoredMultiplier::multiply_by(const Poly& p, long e) {
  if (e == 0) return;
  if (p.is_zero()) throw InvalidInput("zero factor in a multiplier");
  if (p.is_constant()) {
    constant_ = constant_ * p.coeff(0).pow(e);
    return;
  }
  CycNumber lead = p.leading();
  if (!(lead == CycNumber(1))) constant_ = constant_ * lead.pow(e);
  Poly base = p.monic();
  for (auto& [existing, exp] : factors_) {
    if (existing == base) {
      exp += e;
      if (exp == 0) {
        std::erase_if(factors_, [&](const auto& f) { return f.second == 0; });
      }
      return;
    }
  }
  factors_.emplace_back(std::move(base), e);
}

FactoredMultiplier FactoredMultiplier::times(
    const FactoredMultiplier& other) const {
  FactoredMultiplier out = *this;
  out.constant_ = out.constant_ * other.constant_;
  for (const auto& [base, e] : other.factors_) out.multiply_by(base, e);
  return out;
}

FactoredMultiplier FactoredMultiplier::pow(long e) const {
  if (e == 0) return FactoredMultiplier(CycNumber(1));
  FactoredMultiplier out(constant_.pow(e));
  for (const auto& [base, exp] : factors_) out.multiply_by(base, exp * e);
  return out;
}

FactoredMultiplier FactoredMultiplier::composed_with(const MoebiusMap& m) const {
  FactoredMultiplier out(constant_);
  Poly line(std::vector<CycNumber>{m.d(), m.c()});
  for (const auto& [base, e] : factors_) {
    ClearedComposition cc = compose_cleared(base, m);
    out.multiply_by(cc.numerator, e);
    out.multiply_by(line, -e * cc.denominator_power);
  }
  return out;
}

std::string FactoredMultiplier::to_string() const {
  if (factors_.empty()) return constant_.to_string();
  std::ostringstream out;
  bool first = true;
  if (!(constant_ == CycNumber(1))) {
    out << "(" << constant_.to_string() << ")";
    first = false;
  }
  for (const auto& [base, e] : factors_) {
    if (!first) out << " * ";
    first = false;
    out << "(" << base.to_string() << ")";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

std::string AutPresentation::to_string() const {
  std::ostringstream out;
  out << "< tau";
  for (const auto& g : generators) out << ", " << g.name;
  out << " | tau^" << n << " = 1";
  for (const auto& r : relations) out << ", " << r.text;
  if (!generators.empty()) out << ", tau central";
  out << " >";
  return out.str();
}

LiftedAction evaluate_word(const AutPresentation& presentation,
                           const std::vector<int>& word) {
  LiftedAction acc;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int letter = *it;
    std::size_t index =
        letter >= 0 ? static_cast<std::size_t>(letter)
                    : static_cast<std::size_t>(-(letter + 1));
    if (index >= presentation.generators.size())
      throw InvalidInput("word letter names a generator that does not exist");
    const AutGenerator& g = presentation.generators[index];
    MoebiusMap step = g.moebius;
    FactoredMultiplier step_mult = g.multiplier;
    if (letter < 0) {
      step = g.moebius.inverse();
      if (g.multiplier_known)
        step_mult = g.multiplier.composed_with(step).pow(-1);
    }
    LiftedAction next;
    next.moebius = step * acc.moebius;
    next.multiplier_known = g.multiplier_known && acc.multiplier_known;
    if (next.multiplier_known)
      next.multiplier =
          step_mult.composed_with(acc.moebius).times(acc.multiplier);
    acc = std::move(next);
  }
  return acc;
}

bool preserves_equation(const CurveEquation& eq, const MoebiusMap& m,
                        const FactoredMultiplier& mult) {
  FactoredMultiplier rhs;
  for (const auto& f : eq.factors) rhs.multiply_by(f.poly, f.exponent);
  FactoredMultiplier lhs = mult.pow(eq.n).times(rhs);
  FactoredMultiplier ratio = lhs.times(rhs.composed_with(m).pow(-1));
  auto c = ratio.as_constant();
  return c.has_value() && *c == CycNumber(1);
}

bool rotation_is_central(const std::vector<std::vector<std::size_t>>& orbits,
                         const std::vector<long>& exponents) {
  for (const auto& orbit : orbits) {
    if (orbit.empty()) continue;
    for (std::size_t index : orbit)
      if (index >= exponents.size())
        throw InvalidInput("orbit names a branch point that does not exist");
    long first = exponents[orbit.front()];
    for (std::size_t index : orbit)
      if (exponents[index] != first) return false;
  }
  return true;
}

std::vector<long> abelian_invariants(const AutPresentation& presentation) {
  if (!presentation.abelian)
    throw InvalidInput(
        "abelian invariants requested for a presentation not marked abelian");
  std::size_t k = presentation.generators.size();
  std::vector<std::vector<Integer>> rows;
  std::vector<Integer> tau_row(k + 1, Integer(0));
  tau_row[0] = Integer(presentation.n);
  rows.push_back(std::move(tau_row));
  for (const auto& rel : presentation.relations) {
    if (!rel.tau_power_known)
      throw InvalidInput(
          "presentation has a relation with an undetermined rotation power");
    std::vector<Integer> row(k + 1, Integer(0));
    row[0] = Integer(-rel.tau_power);
    for (int letter : rel.word) {
      std::size_t index =
          letter >= 0 ? static_cast<std::size_t>(letter)
                      : static_cast<std::size_t>(-(letter + 1));
      if (index >= k)
        throw InvalidInput("relation word names a generator that does not exist");
      row[index + 1] += letter >= 0 ? 1 : -1;
    }
    rows.push_back(std::move(row));
  }
  return invariant_factors(rows);
}

namespace {

// Shared assembly state while a case builder runs.
struct FamilyDraft {
  GSFamily family;
  std::vector<long> rotation_orders;
  std::vector<long> full_orders;
  // One entry per finite branch point, for the independent per-point genus
  // route; every constructed factor is separable, so a factor of degree d
  // contributes d points.
  std::vector<long> point_exponents;
};

void push_rotation_orders(FamilyDraft& draft, long n, long exponent,
                          long count) {
  long order = n / exponent_gcd(n, exponent);
  if (order > 1)
    draft.rotation_orders.insert(draft.rotation_orders.end(), count, order);
}

void push_full_order(FamilyDraft& draft, long n, long exponent,
                     long stabilizer) {
  long order = stabilizer * n / exponent_gcd(n, exponent);
  if (order > 1) draft.full_orders.push_back(order);
}

void add_factor(FamilyDraft& draft, std::vector<CurveFactor>& factors,
                const Poly& poly, long exponent) {
  if (exponent == 0) return;
  factors.push_back({poly, exponent});
  for (long i = 0; i < poly.degree(); ++i)
    draft.point_exponents.push_back(exponent);
}

GroupRelation make_relation(const AutPresentation& presentation,
                            const std::string& lhs, std::vector<int> word,
                            std::optional<long> shortcut,
                            std::vector<std::string>& warnings) {
  LiftedAction result = evaluate_word(presentation, word);
  if (!result.moebius.is_identity())
    throw InternalError("relation word " + lhs +
                        " does not project to the identity on the line");
  GroupRelation rel;
  rel.word = std::move(word);
  rel.shortcut_power = shortcut;
  if (!result.multiplier_known) {
    rel.tau_power_known = false;
    rel.text = lhs + " = tau^l (power not determined)";
    return rel;
  }
  auto constant = result.multiplier.as_constant();
  if (!constant)
    throw InternalError("relation " + lhs +
                        " left a non-constant vertical multiplier");
  auto power = as_root_power(*constant, presentation.n);
  if (!power)
    throw InternalError("relation " + lhs +
                        " produced a multiplier outside the rotation group");
  rel.tau_power = mod_ll(*power, presentation.n);
  rel.text = lhs + " = " + tau_text(rel.tau_power);
  if (shortcut) {
    long predicted = mod_ll(*shortcut, presentation.n);
    if (predicted != rel.tau_power)
      warnings.push_back("closed-form exponent for " + lhs + " gives " +
                         tau_text(predicted) + " but exact composition gives " +
                         tau_text(rel.tau_power) +
                         "; using the computed value");
  }
  return rel;
}

void check_generators_preserve(const GSFamily& family) {
  for (const auto& g : family.presentation.generators) {
    if (!g.multiplier_known) continue;
    if (!preserves_equation(family.equation, g.moebius, g.multiplier))
      throw InternalError("constructed generator " + g.name +
                          " fails to preserve the curve equation");
  }
}

long checked_long(const Rational& value, const std::string& what) {
  if (value.get_den() != 1)
    throw InternalError(what + " is not an integer: " + rational_text(value));
  if (!value.get_num().fits_slong_p())
    throw InternalError(what + " exceeds the machine integer range");
  return value.get_num().get_si();
}

// Finalizes signatures, genus (three mutually checking routes), and the
// closed-form genus comparison.
void finish_family(FamilyDraft& draft,
                   std::optional<Rational> closed_form_genus) {
  GSFamily& fam = draft.family;
  fam.rotation_quotient = make_signature(0, draft.rotation_orders);
  fam.full_quotient = make_signature(0, draft.full_orders);

  Rational rotation_area = fam.rotation_quotient.area();
  if (rotation_area <= 0)
    throw InvalidInput(
        "the branch data yields a non-hyperbolic surface; enlarge the "
        "branching");
  Rational genus_rat =
      Rational(1) + Rational(fam.n) * rotation_area / Rational(2);
  long genus = checked_long(genus_rat, "genus");
  if (genus < 2)
    throw InvalidInput("the branch data yields genus " +
                       std::to_string(genus) + "; families need genus >= 2");

  long reduced_order = fam.reduced.order();
  Rational full_area = fam.full_quotient.area();
  Rational genus_full = Rational(1) + Rational(fam.n) *
                                          Rational(reduced_order) * full_area /
                                          Rational(2);
  if (genus_full != genus_rat)
    throw InternalError("the two quotient signatures disagree about the genus");

  long genus_points = genus_from_exponents(fam.n, draft.point_exponents);
  if (genus_points != genus)
    throw InternalError("per-point and signature genus routes disagree");

  if (!harvey_check(fam.n, fam.rotation_quotient.orders))
    throw InternalError(
        "assembled branch data fails the cyclic-cover existence criterion");

  fam.genus = genus;
  if (closed_form_genus && *closed_form_genus != genus_rat) {
    std::string printed = closed_form_genus->get_den() == 1
                              ? closed_form_genus->get_num().get_str()
                              : rational_text(*closed_form_genus);
    fam.warnings.push_back("closed-form genus shortcut gives " + printed +
                           " but the quotient signature gives " +
                           std::to_string(genus) +
                           " by Riemann-Hurwitz; using " +
                           std::to_string(genus));
  }
}

void require_primitivity(long n, const std::vector<long>& exponents) {
  long g = n;
  for (long e : exponents) g = std::gcd(g, e);
  if (g != 1)
    throw ConstraintError(
        "primitivity_gcd",
        "gcd of n with all branching exponents is " + std::to_string(g) +
            ", so the vertical rotation does not act with full order");
}

GSFamily build_trivial(long n, const std::vector<long>& orbit_exponents) {
  FamilyDraft draft;
  GSFamily& fam = draft.family;
  fam.n = n;
  fam.reduced = {ReducedKind::Trivial, 1};
  fam.orbit_exponents = orbit_exponents;
  if (orbit_exponents.empty())
    throw InvalidInput("the trivial case needs at least one branch point");

  long sum = 0;
  for (long e : orbit_exponents) sum = mod_ll(sum + e, n);
  long infinity = mod_ll(-sum, n);
  std::vector<long> all = orbit_exponents;
  if (infinity != 0) all.push_back(infinity);
  require_primitivity(n, all);

  std::vector<CurveFactor> factors;
  long position = 1;
  for (long e : orbit_exponents) {
    add_factor(draft, factors,
               poly_x_pow_minus(1, CycNumber(position)), e);
    ++position;
  }
  fam.equation = make_curve_equation(n, std::move(factors));

  for (long e : all) {
    push_rotation_orders(draft, n, e, 1);
    push_full_order(draft, n, e, 1);
  }

  fam.presentation.n = n;
  fam.presentation.abelian = true;
  fam.free_parameters = static_cast<long>(all.size()) - 3;

  finish_family(draft, std::nullopt);
  return fam;
}

GSFamily build_cyclic(long n, long m, long l0,
                      const std::vector<long>& orbit_exponents) {
  FamilyDraft draft;
  GSFamily& fam = draft.family;
  fam.n = n;
  fam.reduced = {ReducedKind::Cyclic, m};
  fam.l0 = l0;
  fam.orbit_exponents = orbit_exponents;
  long r = static_cast<long>(orbit_exponents.size());
  if (r < 1)
    throw InvalidInput(
        "the cyclic case needs at least one branch orbit besides the fixed "
        "points");

  std::vector<long> gcd_pool = orbit_exponents;
  gcd_pool.push_back(l0);
  require_primitivity(n, gcd_pool);

  long orbit_sum = 0;
  for (long e : orbit_exponents) orbit_sum += e;
  long tail = mod_ll(l0 + m * orbit_sum, n);
  if (l0 == 0 && tail != 0)
    throw ConstraintError(
        "cyclic_infinity_congruence",
        "with no branching at the origin the fixed point at infinity must be "
        "unbranched too (m * sum of orbit exponents is " +
            std::to_string(mod_ll(m * orbit_sum, n)) +
            " mod n); swap coordinates to move the branched fixed point to "
            "the origin");

  std::vector<CurveFactor> factors;
  add_factor(draft, factors, Poly::variable(), l0);
  long value = 1;
  for (long e : orbit_exponents) {
    add_factor(draft, factors,
               poly_x_pow_minus(m, CycNumber(value).pow(m)), e);
    ++value;
  }
  fam.equation = make_curve_equation(n, std::move(factors));

  // Signatures: the two fixed points, then m points per free orbit.
  push_rotation_orders(draft, n, l0, 1);
  push_rotation_orders(draft, n, tail, 1);
  push_full_order(draft, n, l0, m);
  push_full_order(draft, n, tail, m);
  for (long e : orbit_exponents) {
    push_rotation_orders(draft, n, e, m);
    push_full_order(draft, n, e, 1);
  }

  fam.presentation.n = n;
  fam.presentation.abelian = true;
  AutGenerator a;
  a.name = "A";
  a.moebius = MoebiusMap::scaling(CycNumber::root_of_unity(m));
  a.multiplier = FactoredMultiplier(CycNumber::root_of_unity(m * n, l0));
  fam.presentation.generators.push_back(std::move(a));
  fam.presentation.relations.push_back(
      make_relation(fam.presentation, "A^" + std::to_string(m),
                    std::vector<int>(m, 0), l0, fam.warnings));
  fam.free_parameters = r - 1;

  // Closed-form genus from the fixed-point branching pattern.
  long gcd_sum = 0;
  for (long e : orbit_exponents) gcd_sum += exponent_gcd(n, e);
  long lead;
  if (l0 == 0)
    lead = (r * m - 2) * n;
  else if (tail == 0)
    lead = (r * m - 1) * n;
  else
    lead = r * m * n;
  Rational closed = Rational(1) + Rational(lead - m * gcd_sum) / Rational(2);

  check_generators_preserve(fam);
  finish_family(draft, closed);
  return fam;
}

GSFamily build_dihedral(long n, long m, long l0,
                        const std::vector<long>& orbit_exponents,
                        const std::vector<long>& specials) {
  FamilyDraft draft;
  GSFamily& fam = draft.family;
  fam.n = n;
  fam.reduced = {ReducedKind::Dihedral, m};
  fam.l0 = l0;
  fam.special_exponents = specials;
  fam.orbit_exponents = orbit_exponents;
  long r = static_cast<long>(orbit_exponents.size());
  long s1 = specials[0];
  long s2 = specials[1];
  if (l0 == 0 && s1 == 0 && s2 == 0 && r == 0)
    throw InvalidInput("the dihedral case needs at least one branch orbit");

  std::vector<long> gcd_pool = orbit_exponents;
  gcd_pool.push_back(l0);
  gcd_pool.push_back(s1);
  gcd_pool.push_back(s2);
  require_primitivity(n, gcd_pool);

  long orbit_sum = 0;
  for (long e : orbit_exponents) orbit_sum += e;
  long total = 2 * l0 + m * (s1 + s2) + 2 * m * orbit_sum;
  if (mod_ll(total, n) != 0)
    throw ConstraintError(
        "dihedral_total_congruence",
        "2*l0 + m*(s1 + s2) + 2*m*sum of orbit exponents is " +
            std::to_string(mod_ll(total, n)) +
            " mod n, so the branching exponent at infinity cannot match the "
            "origin exponent as the reflection requires");
  long e_exp = total / n;

  std::vector<CurveFactor> factors;
  add_factor(draft, factors, Poly::variable(), l0);
  add_factor(draft, factors, poly_x_pow_minus(m, CycNumber(1)), s1);
  add_factor(draft, factors, poly_x_pow_minus(m, CycNumber(-1)), s2);
  long value = 2;
  for (long e : orbit_exponents) {
    CycNumber am = CycNumber(value).pow(m);
    add_factor(draft, factors, poly_x_pow_minus(m, am), e);
    add_factor(draft, factors, poly_x_pow_minus(m, am.pow(-1)), e);
    ++value;
  }
  fam.equation = make_curve_equation(n, std::move(factors));

  // Signatures: {0, infinity} is one orbit with rotation stabilizer, the two
  // vertex orbits have reflection stabilizers, free orbits have 2m points.
  push_rotation_orders(draft, n, l0, 2);
  push_rotation_orders(draft, n, s1, m);
  push_rotation_orders(draft, n, s2, m);
  push_full_order(draft, n, l0, m);
  push_full_order(draft, n, s1, 2);
  push_full_order(draft, n, s2, 2);
  for (long e : orbit_exponents) {
    push_rotation_orders(draft, n, e, 2 * m);
    push_full_order(draft, n, e, 1);
  }

  fam.presentation.n = n;
  AutGenerator a;
  a.name = "A";
  a.moebius = MoebiusMap::scaling(CycNumber::root_of_unity(m));
  a.multiplier = FactoredMultiplier(CycNumber::root_of_unity(m * n, l0));
  AutGenerator b;
  b.name = "B";
  b.moebius = MoebiusMap::inversion();
  b.multiplier = FactoredMultiplier(CycNumber::root_of_unity(2 * n, s1));
  b.multiplier.multiply_by(Poly::variable(), -e_exp);
  fam.presentation.generators.push_back(std::move(a));
  fam.presentation.generators.push_back(std::move(b));
  auto& rels = fam.presentation.relations;
  rels.push_back(make_relation(fam.presentation, "A^" + std::to_string(m),
                               std::vector<int>(m, 0), l0, fam.warnings));
  rels.push_back(make_relation(fam.presentation, "B^2", {1, 1}, s1,
                               fam.warnings));
  rels.push_back(make_relation(fam.presentation, "(A*B)^2", {0, 1, 0, 1},
                               std::nullopt, fam.warnings));
  fam.presentation.abelian = false;
  if (m == 2) {
    GroupRelation commutator = make_relation(
        fam.presentation, "A*B*A^-1*B^-1", {0, 1, -1, -2}, std::nullopt,
        fam.warnings);
    fam.presentation.abelian = commutator.tau_power == 0;
    rels.push_back(std::move(commutator));
  }
  fam.free_parameters = r;

  long gcd_sum = 0;
  for (long e : orbit_exponents) gcd_sum += exponent_gcd(n, e);
  Rational closed =
      Rational(1) +
      Rational(2 * m * (r + 1) * n - 2 * exponent_gcd(n, l0) -
               m * (exponent_gcd(n, s1) + exponent_gcd(n, s2) + 2 * gcd_sum)) /
          Rational(2);

  check_generators_preserve(fam);
  finish_family(draft, closed);
  return fam;
}

struct PlatonicSlot {
  const Poly* form;
  long points;
  long stabilizer;
};

GSFamily build_platonic(long n, ReducedKind kind,
                        const std::vector<long>& orbit_exponents,
                        const std::vector<long>& specials) {
  PlatonicKind pk;
  const char* congruence_name;
  switch (kind) {
    case ReducedKind::Tetrahedral:
      pk = PlatonicKind::Tetrahedral;
      congruence_name = "tetrahedral_total_congruence";
      break;
    case ReducedKind::Octahedral:
      pk = PlatonicKind::Octahedral;
      congruence_name = "octahedral_total_congruence";
      break;
    default:
      pk = PlatonicKind::Icosahedral;
      congruence_name = "icosahedral_total_congruence";
      break;
  }
  const PlatonicData& data = platonic_data(pk);

  FamilyDraft draft;
  GSFamily& fam = draft.family;
  fam.n = n;
  fam.reduced = {kind, 1};
  fam.special_exponents = specials;
  fam.orbit_exponents = orbit_exponents;
  long r = static_cast<long>(orbit_exponents.size());

  // The special orbit exponents in form order; the tetrahedral face pair
  // shares one exponent across two orbits.
  bool tetra = kind == ReducedKind::Tetrahedral;
  long s1 = specials[0];
  long s2 = specials[1];
  long s3 = tetra ? 0 : specials[2];
  std::vector<PlatonicSlot> slots = {
      {&data.r1, data.orbit1, data.stab1},
      {&data.r2, data.orbit2, data.stab2},
      {&data.r3, data.orbit3, data.stab3},
  };
  std::vector<long> slot_exponents =
      tetra ? std::vector<long>{s1, s1, s2} : std::vector<long>{s1, s2, s3};

  bool any = r > 0;
  for (long e : slot_exponents) any = any || e != 0;
  if (!any)
    throw InvalidInput("the " + fam.reduced.display_name() +
                       " case needs at least one branch orbit");

  std::vector<long> gcd_pool = orbit_exponents;
  for (long e : specials) gcd_pool.push_back(e);
  require_primitivity(n, gcd_pool);

  long orbit_sum = 0;
  for (long e : orbit_exponents) orbit_sum += e;
  long weighted = data.reduced_order * orbit_sum;
  for (std::size_t i = 0; i < slots.size(); ++i)
    weighted += slots[i].points * slot_exponents[i];
  if (mod_ll(weighted, n) != 0)
    throw ConstraintError(
        congruence_name,
        "the weighted exponent sum over all special and free orbits is " +
            std::to_string(mod_ll(weighted, n)) +
            " mod n, so the point of the edge orbit at infinity cannot carry "
            "the required exponent");

  std::vector<CurveFactor> factors;
  for (std::size_t i = 0; i < slots.size(); ++i)
    add_factor(draft, factors, *slots[i].form, slot_exponents[i]);
  for (long j = 0; j < r; ++j)
    add_factor(draft, factors, data.orbit_factor(CycNumber(j + 2)),
               orbit_exponents[j]);
  fam.equation = make_curve_equation(n, std::move(factors));

  for (std::size_t i = 0; i < slots.size(); ++i) {
    push_rotation_orders(draft, n, slot_exponents[i], slots[i].points);
    push_full_order(draft, n, slot_exponents[i], slots[i].stabilizer);
  }
  for (long e : orbit_exponents) {
    push_rotation_orders(draft, n, e, data.reduced_order);
    push_full_order(draft, n, e, 1);
  }

  fam.presentation.n = n;
  fam.presentation.abelian = false;

  long a_order;
  long a_mult_exp;
  switch (kind) {
    case ReducedKind::Tetrahedral:
      a_order = 2;
      a_mult_exp = s2;
      break;
    case ReducedKind::Octahedral:
      a_order = 4;
      a_mult_exp = s3;
      break;
    default:
      a_order = 5;
      a_mult_exp = s3;
      break;
  }
  AutGenerator a;
  a.name = "A";
  a.moebius = data.gen_a;
  a.multiplier =
      FactoredMultiplier(CycNumber::root_of_unity(a_order * n, a_mult_exp));

  AutGenerator b;
  b.name = "B";
  b.moebius = data.gen_b;
  std::optional<long> b_cube_shortcut;
  std::optional<std::pair<std::string, long>> ab_relation;
  if (kind == ReducedKind::Tetrahedral) {
    long p = 4 * s1 + 3 * s2 + 6 * orbit_sum;
    long e_exp = weighted / n;
    long q = s2 + 2 * orbit_sum;
    CycNumber gamma =
        two_power_realization(p, n) * CycNumber::root_of_unity(4 * n, q);
    if (!(gamma.pow(n) ==
          CycNumber(2).pow(p) * CycNumber::root_of_unity(4, q)))
      throw InternalError("reflection multiplier constant fails its defining "
                          "power identity");
    b.multiplier = FactoredMultiplier(gamma);
    b.multiplier.multiply_by(
        Poly(std::vector<CycNumber>{CycNumber::root_of_unity(4), CycNumber(1)}),
        -e_exp);
    b_cube_shortcut = -(5 * s1 + 3 * s2 + 6 * orbit_sum);
    ab_relation = std::make_pair(std::string("(A*B)^3"), -3 * (s1 + orbit_sum));
  } else if (kind == ReducedKind::Octahedral) {
    long p = 4 * s1 + 6 * s2 + 3 * s3 + 12 * orbit_sum;
    long e_exp = weighted / n;
    CycNumber gamma = CycNumber::root_of_unity(2 * n, s2) *
                      CycNumber::root_of_unity(4 * n, s3) *
                      two_power_realization(p, n);
    if (!(gamma.pow(n) == CycNumber(2).pow(p) *
                              CycNumber::root_of_unity(2, s2) *
                              CycNumber::root_of_unity(4, s3)))
      throw InternalError("reflection multiplier constant fails its defining "
                          "power identity");
    b.multiplier = FactoredMultiplier(gamma);
    b.multiplier.multiply_by(
        Poly(std::vector<CycNumber>{CycNumber::root_of_unity(4), CycNumber(1)}),
        -e_exp);
    b_cube_shortcut = -(5 * s1 + 6 * s2 + 3 * s3 + 15 * orbit_sum);
    ab_relation = std::make_pair(std::string("(A*B)^2"),
                                 -(4 * s1 + 5 * s2 + 2 * s3 + 12 * orbit_sum));
  } else {
    // No closed-form multiplier is available for the icosahedral reflection;
    // only its action on the line is pinned down.
    b.multiplier_known = false;
  }

  fam.presentation.generators.push_back(std::move(a));
  fam.presentation.generators.push_back(std::move(b));
  auto& rels = fam.presentation.relations;
  rels.push_back(make_relation(fam.presentation,
                               "A^" + std::to_string(a_order),
                               std::vector<int>(a_order, 0), a_mult_exp,
                               fam.warnings));
  rels.push_back(make_relation(fam.presentation, "B^3", {1, 1, 1},
                               b_cube_shortcut, fam.warnings));
  if (ab_relation) {
    long reps = ab_relation->first == "(A*B)^3" ? 3 : 2;
    std::vector<int> word;
    for (long i = 0; i < reps; ++i) {
      word.push_back(0);
      word.push_back(1);
    }
    rels.push_back(make_relation(fam.presentation, ab_relation->first,
                                 std::move(word), ab_relation->second,
                                 fam.warnings));
  }
  fam.free_parameters = r;

  // The closed-form coefficients are half the point counts of each orbit.
  long gcd_sum = 0;
  for (long e : orbit_exponents) gcd_sum += exponent_gcd(n, e);
  long closed_long = (data.reduced_order / 2) * (r + 1) * n;
  for (std::size_t i = 0; i < slots.size(); ++i)
    closed_long -= (slots[i].points / 2) * exponent_gcd(n, slot_exponents[i]);
  closed_long -= (data.reduced_order / 2) * gcd_sum;
  Rational closed = Rational(1) + Rational(closed_long);

  check_generators_preserve(fam);
  finish_family(draft, closed);
  return fam;
}

}  // namespace

GSFamily build_family(long n, const ReducedGroup& reduced, long l0,
                      const std::vector<long>& orbit_exponents,
                      const std::vector<long>& special_exponents) {
  if (n < 2) throw InvalidInput("the vertical rotation order n must be >= 2");
  if (l0 < 0 || l0 >= n)
    throw InvalidInput("l0 must lie in [0, n-1]");
  for (long e : orbit_exponents)
    if (e < 1 || e >= n)
      throw InvalidInput(
          "orbit exponents must lie in [1, n-1]; drop zero-exponent orbits "
          "entirely");
  for (long e : special_exponents)
    if (e < 0 || e >= n)
      throw InvalidInput("special orbit exponents must lie in [0, n-1]");

  auto require_specials = [&](std::size_t count, const char* what) {
    if (special_exponents.size() != count)
      throw InvalidInput(std::string(what));
  };
  auto require_no_l0 = [&](const char* name) {
    if (l0 != 0)
      throw InvalidInput(std::string("the ") + name +
                         " reduced group fixes no point of the line, so l0 "
                         "must be 0");
  };

  switch (reduced.kind) {
    case ReducedKind::Trivial:
      require_specials(0, "the trivial case takes no special orbit exponents");
      if (l0 != 0)
        throw InvalidInput(
            "the trivial reduced group treats every point alike; set l0 = 0 "
            "and list all branch exponents as orbit exponents");
      return build_trivial(n, orbit_exponents);
    case ReducedKind::Cyclic:
      if (reduced.m < 2)
        throw InvalidInput("cyclic reduced groups need m >= 2");
      require_specials(0, "the cyclic case takes no special orbit exponents");
      return build_cyclic(n, reduced.m, l0, orbit_exponents);
    case ReducedKind::Dihedral:
      if (reduced.m < 2)
        throw InvalidInput("dihedral reduced groups need m >= 2");
      require_specials(
          2,
          "the dihedral case takes exactly two special orbit exponents (the "
          "x^m - 1 and x^m + 1 orbits)");
      return build_dihedral(n, reduced.m, l0, orbit_exponents,
                            special_exponents);
    case ReducedKind::Tetrahedral:
      require_no_l0("tetrahedral");
      require_specials(
          2,
          "the tetrahedral case takes exactly two special orbit exponents "
          "(the face pair and the edge orbit)");
      return build_platonic(n, reduced.kind, orbit_exponents,
                            special_exponents);
    case ReducedKind::Octahedral:
      require_no_l0("octahedral");
      require_specials(
          3,
          "the octahedral case takes exactly three special orbit exponents");
      return build_platonic(n, reduced.kind, orbit_exponents,
                            special_exponents);
    case ReducedKind::Icosahedral:
      require_no_l0("icosahedral");
      require_specials(
          3,
          "the icosahedral case takes exactly three special orbit exponents");
      return build_platonic(n, reduced.kind, orbit_exponents,
                            special_exponents);
  }
  throw InternalError("unhandled reduced group kind");
}

}  // namespace gsc
