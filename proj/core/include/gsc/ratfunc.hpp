#pragma once
// Rational functions in one variable, kept in lowest terms with a monic
// denominator so that equality is coefficient comparison.  Also hosts
// composition of polynomials with Moebius maps in cleared (denominator-free)
// form, which the automorphism machinery relies on.

#include <string>

#include "gsc/moebius.hpp"
#include "gsc/poly.hpp"

namespace gsc {

// p(m(x)) written as numerator / (c x + d)^denominator_power, with the
// power always equal to deg p (the numerator may drop degree when roots of
// p are carried to infinity).
struct ClearedComposition {
  Poly numerator;
  long denominator_power = 0;
};

ClearedComposition compose_cleared(const Poly& p, const MoebiusMap& m);

class RatFunc {
public:
  RatFunc();  // zero
  explicit RatFunc(Poly numerator);
  RatFunc(Poly numerator, Poly denominator);
  static RatFunc constant(const CycNumber& c);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  std::optional<CycNumber> as_constant() const;

  ExtendedPoint eval(const ExtendedPoint& p) const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(long exponent) const;
  RatFunc compose_moebius(const MoebiusMap& m) const;

  friend RatFunc operator+(const RatFunc&, const RatFunc&);
  friend RatFunc operator-(const RatFunc&, const RatFunc&);
  friend RatFunc operator*(const RatFunc&, const RatFunc&);
  friend RatFunc operator/(const RatFunc&, const RatFunc&);
  friend bool operator==(const RatFunc&, const RatFunc&);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

private:
  void reduce();
  Poly num_, den_;
};

}  // namespace gsc
