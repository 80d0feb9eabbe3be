#pragma once
// Dense univariate polynomials over cyclotomic coefficients, ascending order,
// always trimmed (the zero polynomial has an empty coefficient vector).

#include <string>
#include <utility>
#include <vector>

#include "gsc/cyclotomic.hpp"

namespace gsc {

class Poly {
public:
  Poly() = default;
  explicit Poly(const CycNumber& constant);
  explicit Poly(std::vector<CycNumber> coeffs);

  static Poly variable();
  static Poly monomial(long power, const CycNumber& coeff = CycNumber(1));
  // Convenience for integer-coefficient polynomials, ascending.
  static Poly from_longs(const std::vector<long>& coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<CycNumber>& coefficients() const { return coeffs_; }
  const CycNumber& coeff(long power) const;
  CycNumber leading() const;
  bool is_monic() const;
  Poly monic() const;

  bool is_constant() const { return coeffs_.size() <= 1; }
  // True when only even powers of x appear.
  bool is_even() const;

  CycNumber eval(const CycNumber& x) const;
  Poly pow(long exponent) const;

  Poly operator-() const;
  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);
  friend Poly operator*(const CycNumber&, const Poly&);
  friend bool operator==(const Poly&, const Poly&);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  Poly operator/(const Poly& den) const;  // exact or truncating division
  Poly operator%(const Poly& den) const;

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<CycNumber> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd_poly(const Poly& a, const Poly& b);

}  // namespace gsc
