#pragma once
// Enumeration of cyclic branched covers of the line by genus: admissible
// branching data, the exponent tuples realizing it, canonical forms under
// the unit action, and Moebius isomorphism testing for concrete branch sets.

#include <optional>

#include "gsc/moebius.hpp"
#include "gsc/signature.hpp"

namespace gsc {

// One enumeration row: a covering degree together with admissible branching
// orders over a genus-zero quotient.
struct SignatureTuple {
  long n = 2;
  std::vector<long> orders;  // ascending

  Signature quotient_signature() const { return Signature{0, orders}; }
  // Genus of the covering surface, from the degree times the quotient area.
  long genus() const;

  friend bool operator==(const SignatureTuple& a, const SignatureTuple& b) {
    return a.n == b.n && a.orders == b.orders;
  }
  friend bool operator!=(const SignatureTuple& a, const SignatureTuple& b) {
    return !(a == b);
  }
};

// All admissible branching data of the given genus (>= 2) with degree
// 2 <= n <= max_n; max_n defaults to 4g + 2, beyond which nothing exists.
// Ordered by n, then lexicographically by orders.
std::vector<SignatureTuple> enumerate_families(long genus, long max_n = 0);

// Exponent tuples for admissible branching data: entries in [1, n-1] whose
// order matches positionally and which sum to zero mod n, in lex order.
std::vector<std::vector<long>> enumerate_exponents(const SignatureTuple& st);

// Canonical representative of a full exponent tuple (sum zero mod n) under
// multiplication by units of Z/n and order-preserving permutation.  The
// result lists exponents sorted by (cone order, exponent) for the best unit.
std::vector<long> canonical_exponent_form(long n, const std::vector<long>& exps);

bool are_equivalent_tuples(long n, const std::vector<long>& a,
                           const std::vector<long>& b);

// Genus of a specific exponent tuple for this branching data; checked to
// agree with the genus of the data itself.
long genus_of_tuple(const SignatureTuple& st, const std::vector<long>& exps);

// Branch data pinned to concrete points of the projective line.
struct BranchedCurve {
  long n = 2;
  std::vector<ExtendedPoint> points;
  std::vector<long> exponents;
};

// Validates and completes branch data: a point at infinity is appended when
// the exponent sum is nonzero mod n (infinity must then be free).
BranchedCurve make_branched_curve(long n, std::vector<ExtendedPoint> points,
                                  std::vector<long> exponents);

struct CurveIsomorphism {
  MoebiusMap map;                         // sends first branch set to second
  std::vector<size_t> point_permutation;  // index i maps to this index in b
  long unit = 1;                          // exponent twist
};

// Search for a Moebius map matching the branch sets with exponents agreeing
// up to one unit of Z/n.  Both curves need the same n and at least three
// branch points; returns nullopt when none exists.
std::optional<CurveIsomorphism> find_curve_isomorphism(const BranchedCurve& a,
                                                       const BranchedCurve& b);

}  // namespace gsc
