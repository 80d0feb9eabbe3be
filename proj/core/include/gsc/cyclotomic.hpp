#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_N).  A value carries the
// conductor it is currently written in and a coefficient vector over the
// power basis 1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic
// polynomial.  Mixed-conductor arithmetic joins into Q(zeta_lcm) on demand.

#include <optional>
#include <string>
#include <vector>

#include "gsc/numeric.hpp"

namespace gsc {

class CycNumber {
public:
  CycNumber();  // zero, conductor 1
  explicit CycNumber(const Rational& value);
  explicit CycNumber(long value);

  // zeta_order^power; power may be any integer and is reduced mod order.
  static CycNumber root_of_unity(long order, long power = 1);
  // coeffs.size() must equal phi(conductor).
  static CycNumber from_coefficients(long conductor, std::vector<Rational> coeffs);

  long conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  // Rewrite in Q(zeta_target); requires conductor() | target.
  CycNumber embedded(long target) const;
  // Attempt to rewrite in the subfield Q(zeta_target) for target | conductor().
  // Returns nullopt when the value does not lie in that subfield.
  std::optional<CycNumber> try_reduce(long target) const;

  CycNumber operator-() const;
  CycNumber inverse() const;
  CycNumber pow(long exponent) const;

  std::string to_string() const;

  friend CycNumber operator+(const CycNumber&, const CycNumber&);
  friend CycNumber operator-(const CycNumber&, const CycNumber&);
  friend CycNumber operator*(const CycNumber&, const CycNumber&);
  friend CycNumber operator/(const CycNumber&, const CycNumber&);
  friend bool operator==(const CycNumber&, const CycNumber&);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

private:
  CycNumber(long conductor, std::vector<Rational> coeffs);

  long conductor_;
  std::vector<Rational> coeffs_;
};

// Coefficients of the N-th cyclotomic polynomial, ascending, monic.
std::vector<Integer> cyclotomic_polynomial(long n);

// Inverse of CycNumber::to_string.  Accepts sums of terms like
// "z12^2", "-3*z8", "5/2", with arbitrary whitespace.
CycNumber parse_cyc(const std::string& text);

// If value == zeta_order^e for some e in [0, order), return e.
std::optional<long> as_root_power(const CycNumber& value, long order);

}  // namespace gsc
