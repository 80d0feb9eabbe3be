#pragma once
// Orbifold signatures (genus; list of cone orders), their hyperbolic area,
// and the arithmetic admissibility test for branch data of a cyclic cover of
// the line, together with the exact genus computation from exponent tuples.

#include <string>
#include <vector>

#include "gsc/numeric.hpp"

namespace gsc {

struct Signature {
  long genus = 0;
  std::vector<long> orders;  // ascending; an entry of 1 is allowed and inert

  // Normalized hyperbolic area divided by 2*pi: 2g - 2 + sum(1 - 1/m).
  Rational area() const;
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.genus == b.genus && a.orders == b.orders;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

// Sorts the orders; rejects genus < 0 or any order < 1.
Signature make_signature(long genus, std::vector<long> orders);

inline Rational hyperbolic_area(const Signature& sig) { return sig.area(); }

// Genus zero and some cone order occurring an odd number of times.
bool is_odd_signature(const Signature& sig);

// Does a cyclic cover of degree n with these branching orders exist?
// Requires n >= 2, at least three orders, each order >= 2 and dividing n.
// Checks that every proper subset of all-but-one orders has lcm n, and the
// even-degree parity condition on the counts of n/order.
bool harvey_check(long n, const std::vector<long>& orders);

// Genus of the cyclic cover y^n = prod (x - a_j)^{l_j} from the finite
// exponents; a branch point at infinity is appended automatically when the
// exponent sum is nonzero mod n.  Exponents must lie in [1, n-1] and
// generate Z/n together (gcd 1 over the completed list).
long genus_from_exponents(long n, const std::vector<long>& finite_exps);

}  // namespace gsc
