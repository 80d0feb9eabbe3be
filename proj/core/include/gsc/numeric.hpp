#pragma once
// Small exact-arithmetic helpers on top of GMP rationals and int64 modular
// arithmetic.  All quantities in this library are exact; nothing here touches
// floating point.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "gsc/error.hpp"

namespace gsc {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(a, b) does not canonicalize; this does.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline long gcd_ll(long a, long b) { return std::gcd(a, b); }

inline long lcm_ll(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

// Least non-negative residue; works for negative a.
inline long mod_ll(long a, long n) {
  if (n <= 0) throw InvalidInput("modulus must be positive");
  long r = a % n;
  return r < 0 ? r + n : r;
}

inline long euler_phi(long n) {
  if (n <= 0) throw InvalidInput("euler_phi requires n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long> divisors(long n) {
  if (n <= 0) throw InvalidInput("divisors requires n >= 1");
  std::vector<long> small, big;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) big.push_back(n / d);
    }
  }
  for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
  return small;
}

// Units of Z/n in ascending order.
inline std::vector<long> units_mod(long n) {
  if (n <= 0) throw InvalidInput("units_mod requires n >= 1");
  std::vector<long> us;
  for (long u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) us.push_back(u);
  if (n == 1) us.push_back(0);  // the trivial ring; one residue class
  return us;
}

inline long inverse_mod(long a, long n) {
  a = mod_ll(a, n);
  long t = 0, new_t = 1, r = n, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InvalidInput("inverse_mod of a non-unit");
  return mod_ll(t, n);
}

}  // namespace gsc
