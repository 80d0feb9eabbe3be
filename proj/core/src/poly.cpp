#include "gsc/poly.hpp"

#include <sstream>

namespace gsc {

namespace {
const CycNumber kZero{};
}

Poly::Poly(const CycNumber& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<CycNumber> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(1); }

Poly Poly::monomial(long power, const CycNumber& coeff) {
  if (power < 0) throw InvalidInput("monomial power must be non-negative");
  if (coeff.is_zero()) return Poly();
  std::vector<CycNumber> c(static_cast<size_t>(power) + 1);
  c.back() = coeff;
  return Poly(std::move(c));
}

Poly Poly::from_longs(const std::vector<long>& coeffs) {
  std::vector<CycNumber> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const CycNumber& Poly::coeff(long power) const {
  if (power < 0 || power >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(power)];
}

CycNumber Poly::leading() const {
  if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && leading() == CycNumber(1); }

Poly Poly::monic() const {
  if (is_zero()) throw InvalidInput("cannot normalize the zero polynomial");
  if (is_monic()) return *this;
  CycNumber inv = leading().inverse();
  std::vector<CycNumber> c = coeffs_;
  for (auto& x : c) x = x * inv;
  return Poly(std::move(c));
}

bool Poly::is_even() const {
  for (size_t k = 1; k < coeffs_.size(); k += 2)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

CycNumber Poly::eval(const CycNumber& x) const {
  CycNumber acc;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Poly Poly::pow(long exponent) const {
  if (exponent < 0) throw InvalidInput("negative polynomial power");
  Poly acc(CycNumber(1)), base = *this;
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    base = base * base;
    exponent >>= 1;
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<CycNumber> c = coeffs_;
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<CycNumber> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<long>(k)) + b.coeff(static_cast<long>(k));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<CycNumber> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(c));
}

Poly operator*(const CycNumber& s, const Poly& p) {
  std::vector<CycNumber> c = p.coeffs_;
  for (auto& x : c) x = s * x;
  return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t k = 0; k < a.coeffs_.size(); ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw InvalidInput("polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly(), num};
  CycNumber lead_inv = den.leading().inverse();
  std::vector<CycNumber> rem = num.coeffs_;
  std::vector<CycNumber> quot(static_cast<size_t>(num.degree() - den.degree()) + 1);
  for (size_t i = quot.size(); i-- > 0;) {
    CycNumber q = rem[i + den.coeffs_.size() - 1] * lead_inv;
    quot[i] = q;
    if (q.is_zero()) continue;
    for (size_t j = 0; j < den.coeffs_.size(); ++j)
      rem[i + j] = rem[i + j] - q * den.coeffs_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::operator/(const Poly& den) const { return divmod(*this, den).first; }

Poly Poly::operator%(const Poly& den) const { return divmod(*this, den).second; }

Poly gcd_poly(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    const CycNumber& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string coef_text;
    bool negative = false;
    if (auto r = c.as_rational()) {
      Rational mag = *r < 0 ? Rational(-*r) : *r;
      negative = *r < 0;
      if (k == 0 || mag != 1) coef_text = mag.get_str();
    } else {
      coef_text = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (k == 0) {
      out << (coef_text.empty() ? "1" : coef_text);
      continue;
    }
    if (!coef_text.empty()) out << coef_text << "*";
    out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

}  // namespace gsc
