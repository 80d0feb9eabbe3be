#include "gsc/ratfunc.hpp"

namespace gsc {

ClearedComposition compose_cleared(const Poly& p, const MoebiusMap& m) {
  const long deg = p.degree();
  if (deg <= 0) return {p, 0};
  Poly lin_num(std::vector<CycNumber>{m.b(), m.a()});
  Poly lin_den(std::vector<CycNumber>{m.d(), m.c()});
  // Horner over the two linear forms: acc_k = acc_{k+1} * (a x + b)
  //                                          + c_k * (c x + d)^(deg - k).
  Poly acc(p.coeff(deg));
  Poly den_pow(CycNumber(1));
  for (long k = deg - 1; k >= 0; --k) {
    den_pow = den_pow * lin_den;
    acc = acc * lin_num + p.coeff(k) * den_pow;
  }
  return {acc, deg};
}

RatFunc::RatFunc() : num_(), den_(CycNumber(1)) {}

RatFunc::RatFunc(Poly numerator) : num_(std::move(numerator)), den_(CycNumber(1)) {}

RatFunc::RatFunc(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
  reduce();
}

RatFunc RatFunc::constant(const CycNumber& c) { return RatFunc(Poly(c)); }

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(CycNumber(1));
    return;
  }
  Poly g = gcd_poly(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (!den_.is_monic()) {
    CycNumber inv = den_.leading().inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

bool RatFunc::is_constant() const { return num_.is_constant() && den_.is_constant(); }

std::optional<CycNumber> RatFunc::as_constant() const {
  if (!is_constant()) return std::nullopt;
  if (num_.is_zero()) return CycNumber(0);
  return num_.coeff(0) / den_.coeff(0);
}

ExtendedPoint RatFunc::eval(const ExtendedPoint& p) const {
  if (p.infinite) {
    long dn = num_.degree(), dd = den_.degree();
    if (num_.is_zero() || dn < dd) return ExtendedPoint::finite(CycNumber(0));
    if (dn > dd) return ExtendedPoint::at_infinity();
    return ExtendedPoint::finite(num_.leading() / den_.leading());
  }
  CycNumber dv = den_.eval(p.value);
  if (dv.is_zero()) {
    CycNumber nv = num_.eval(p.value);
    if (nv.is_zero())
      throw InternalError("unreduced rational function evaluation");
    return ExtendedPoint::at_infinity();
  }
  return ExtendedPoint::finite(num_.eval(p.value) / dv);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of the zero function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc acc = constant(CycNumber(1)), base = *this;
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    base = base * base;
    exponent >>= 1;
  }
  return acc;
}

RatFunc RatFunc::compose_moebius(const MoebiusMap& m) const {
  ClearedComposition n = compose_cleared(num_, m);
  ClearedComposition d = compose_cleared(den_, m);
  Poly lin(std::vector<CycNumber>{m.d(), m.c()});
  Poly nn = n.numerator, dd = d.numerator;
  if (n.denominator_power > d.denominator_power)
    dd = dd * lin.pow(n.denominator_power - d.denominator_power);
  else if (d.denominator_power > n.denominator_power)
    nn = nn * lin.pow(d.denominator_power - n.denominator_power);
  return RatFunc(std::move(nn), std::move(dd));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_ == Poly(CycNumber(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace gsc
