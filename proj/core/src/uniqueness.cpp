// Exceptional-shape recognition and the uniqueness decision rules.

#include "gsc/uniqueness.hpp"

#include <algorithm>
#include <numeric>

#include "gsc/error.hpp"
#include "gsc/numeric.hpp"

namespace gsc {

namespace {

std::string tau_text(long power) {
  if (power == 0) return "1";
  if (power == 1) return "tau";
  return "tau^" + std::to_string(power);
}

// An odd unit u mod 2d with u * role = 2 mod 2d; requires gcd(role, 2d) = 2.
long normalizing_unit(long role, long d) {
  long u = inverse_mod(role / 2, d);
  if (u % 2 == 0) u += d;
  return u;
}

}  // namespace

std::optional<ExceptionalShape> match_exceptional_shape(
    const CurveEquation& eq) {
  long n = eq.n;
  if (n < 4 || n % 2 != 0) return std::nullopt;
  long d = n / 2;

  long zero_exponent = 0;
  std::vector<long> pair_exponents;
  for (const auto& f : eq.factors) {
    if (f.poly == Poly::variable()) {
      zero_exponent = mod_ll(zero_exponent + f.exponent, n);
    } else if (f.poly.is_even()) {
      long pairs = f.poly.degree() / 2;
      pair_exponents.insert(pair_exponents.end(), pairs, f.exponent);
    } else {
      return std::nullopt;
    }
  }
  if (pair_exponents.size() < 2) return std::nullopt;
  long infinity = eq.infinity_exponent();

  for (bool swapped : {false, true}) {
    long role = swapped ? infinity : zero_exponent;
    long other = swapped ? zero_exponent : infinity;
    if (std::gcd(role, n) != 2) continue;
    long u = normalizing_unit(role, d);
    if (mod_ll(u * role, n) != 2)
      throw InternalError("normalizing unit failed its defining congruence");

    std::vector<long> odd;
    std::vector<long> halved_even;
    for (long e : pair_exponents) {
      long normalized = mod_ll(u * e, n);
      if (normalized % 2 != 0)
        odd.push_back(normalized);
      else
        halved_even.push_back(normalized / 2);
    }

    int shape_case = 0;
    if (odd.size() == 1) {
      shape_case = 1;
    } else if (odd.size() == 2 && mod_ll(odd[0] + odd[1], n) == 0) {
      shape_case = 2;
    } else {
      continue;
    }
    long g = d;
    for (long e : odd) g = std::gcd(g, e);
    for (long h : halved_even) g = std::gcd(g, h);
    if (g != 1) continue;

    ExceptionalShape shape;
    shape.d = d;
    shape.swapped = swapped;
    shape.unit = u;
    shape.shape_case = shape_case;
    shape.pair_exponents = odd;
    for (long h : halved_even) shape.pair_exponents.push_back(2 * h);
    shape.infinity_exponent = mod_ll(u * other, n);
    return shape;
  }
  return std::nullopt;
}

ExceptionalAnalysis analyze_exceptional(const ExceptionalShape& shape) {
  long d = shape.d;
  if (d < 2) throw InvalidInput("exceptional shapes need d >= 2");
  long n = 2 * d;

  ExceptionalAnalysis out;
  out.shape = shape;

  std::vector<CurveFactor> factors;
  factors.push_back({Poly::variable(), 2});
  long value = 1;
  for (long e : shape.pair_exponents) {
    if (e < 1 || e >= n)
      throw InvalidInput("pair exponents must lie in [1, n-1]");
    factors.push_back(
        {Poly::monomial(2) - Poly(CycNumber(value * value)), e});
    ++value;
  }
  out.normalized_equation = make_curve_equation(n, std::move(factors));

  out.eta.name = "eta";
  out.eta.moebius = MoebiusMap::negation();
  out.eta.multiplier = FactoredMultiplier(CycNumber::root_of_unity(n));
  if (!preserves_equation(out.normalized_equation, out.eta.moebius,
                          out.eta.multiplier))
    throw InternalError("the extra symmetry fails to preserve the matched "
                        "normalized equation");

  out.extended.n = n;
  out.extended.abelian = true;
  out.extended.generators.push_back(out.eta);
  LiftedAction square = evaluate_word(out.extended, {0, 0});
  if (!square.moebius.is_identity())
    throw InternalError("the squared extra symmetry does not fix the line");
  auto constant = square.multiplier.as_constant();
  auto power = constant ? as_root_power(*constant, n) : std::nullopt;
  if (!power)
    throw InternalError("the squared extra symmetry is not a rotation power");
  GroupRelation rel;
  rel.text = "eta^2 = " + tau_text(mod_ll(*power, n));
  rel.word = {0, 0};
  rel.tau_power = mod_ll(*power, n);
  out.extended.relations.push_back(std::move(rel));
  out.invariants = abelian_invariants(out.extended);

  // Cone orders of the quotient by <tau, eta>: the double point contributes
  // 2d, the opposite fixed point 2d / gcd(d, S) with S half the total degree,
  // and each +- pair 2d / gcd(2d, e).
  long s = 1;
  for (long e : shape.pair_exponents) s += e;
  long s_gcd = mod_ll(s, d) == 0 ? d : std::gcd(d, mod_ll(s, d));
  std::vector<long> orders;
  orders.push_back(n);
  orders.push_back(n / s_gcd);
  for (long e : shape.pair_exponents) orders.push_back(n / std::gcd(n, e));
  out.quotient = make_signature(0, std::move(orders));
  if (mod_ll(s, d) != 0)
    out.warnings.push_back(
        "the commonly quoted quotient display for this branch keeps a bare "
        "order-2 cone point and halves the final entry, which breaks "
        "Riemann-Hurwitz; using the stabilizer-derived signature");

  Rational area = out.quotient.area();
  if (area <= 0)
    throw InternalError("exceptional quotient came out non-hyperbolic");
  Rational genus_rat = Rational(1) + Rational(2 * n) * area / Rational(2);
  if (genus_rat.get_den() != 1 || !genus_rat.get_num().fits_slong_p())
    throw InternalError("exceptional genus is not a machine integer");
  out.genus = genus_rat.get_num().get_si();

  std::vector<long> point_exponents = {2};
  for (long e : shape.pair_exponents) {
    point_exponents.push_back(e);
    point_exponents.push_back(e);
  }
  if (genus_from_exponents(n, point_exponents) != out.genus)
    throw InternalError(
        "per-point and quotient genus routes disagree for the exceptional "
        "shape");
  return out;
}

UniquenessVerdict uniqueness_verdict(const GSFamily& family) {
  UniquenessVerdict verdict;
  long n = family.n;

  if (n == 2 || n % 2 != 0) {
    verdict.rule = "n_odd_or_two";
    verdict.detail = "a rotation of order " + std::to_string(n) +
                     " is unique up to conjugacy because the order is two or "
                     "odd";
    return verdict;
  }

  ReducedKind kind = family.reduced.kind;
  bool centerless = kind == ReducedKind::Tetrahedral ||
                    kind == ReducedKind::Octahedral ||
                    kind == ReducedKind::Icosahedral ||
                    (kind == ReducedKind::Dihedral && family.reduced.m % 2 != 0);
  if (centerless) {
    verdict.rule = "centerless_reduced_group";
    verdict.detail = "the reduced group " + family.reduced.display_name() +
                     " has trivial center, which forces a unique rotation "
                     "subgroup";
    return verdict;
  }

  long half = n / 2;
  const auto& orders = family.rotation_quotient.orders;
  if (std::find(orders.begin(), orders.end(), half) == orders.end()) {
    verdict.rule = "no_half_level_cone_point";
    verdict.detail = "the rotation quotient has no cone point of order " +
                     std::to_string(half) +
                     ", which every second projection would require";
    return verdict;
  }

  auto shape = match_exceptional_shape(family.equation);
  if (!shape) {
    verdict.rule = "non_exceptional_shape";
    verdict.detail =
        "the branch data does not match the two-projection shape";
    return verdict;
  }
  verdict.status = Uniqueness::PossiblyNonUnique;
  verdict.rule = "exceptional_shape";
  verdict.detail =
      "the branch data matches the two-projection shape (case " +
      std::to_string(shape->shape_case) + ")";
  verdict.exceptional = analyze_exceptional(*shape);
  return verdict;
}

}  // namespace gsc
