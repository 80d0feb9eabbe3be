#include "gsc/moebius.hpp"

#include <sstream>

namespace gsc {

ExtendedPoint parse_extended_point(const std::string& text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw InvalidInput("empty point");
  std::string t = text.substr(b, e - b + 1);
  if (t == "inf") return ExtendedPoint::at_infinity();
  return ExtendedPoint::finite(parse_cyc(t));
}

MoebiusMap::MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}

MoebiusMap::MoebiusMap(CycNumber a, CycNumber b, CycNumber c, CycNumber d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    throw InvalidInput("Moebius map with vanishing determinant");
}

MoebiusMap MoebiusMap::scaling(const CycNumber& k) {
  return MoebiusMap(k, CycNumber(0), CycNumber(0), CycNumber(1));
}

MoebiusMap MoebiusMap::negation() { return scaling(CycNumber(-1)); }

MoebiusMap MoebiusMap::inversion() {
  return MoebiusMap(CycNumber(0), CycNumber(1), CycNumber(1), CycNumber(0));
}

ExtendedPoint MoebiusMap::apply(const ExtendedPoint& p) const {
  if (p.infinite) {
    if (c_.is_zero()) return ExtendedPoint::at_infinity();
    return ExtendedPoint::finite(a_ / c_);
  }
  CycNumber den = c_ * p.value + d_;
  if (den.is_zero()) return ExtendedPoint::at_infinity();
  return ExtendedPoint::finite((a_ * p.value + b_) / den);
}

CycNumber MoebiusMap::apply_finite(const CycNumber& x) const {
  ExtendedPoint img = apply(ExtendedPoint::finite(x));
  if (img.infinite) throw InvalidInput("point maps to infinity");
  return img.value;
}

MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
  return MoebiusMap(f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
                    f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_);
}

MoebiusMap MoebiusMap::inverse() const {
  return MoebiusMap(d_, -b_, -c_, a_);
}

MoebiusMap MoebiusMap::normalized() const {
  for (const CycNumber* lead : {&a_, &b_, &c_, &d_}) {
    if (lead->is_zero()) continue;
    CycNumber inv = lead->inverse();
    return MoebiusMap(a_ * inv, b_ * inv, c_ * inv, d_ * inv);
  }
  throw InternalError("zero Moebius matrix");
}

bool MoebiusMap::is_identity() const {
  return b_.is_zero() && c_.is_zero() && a_ == d_;
}

bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
  MoebiusMap p = x.normalized(), q = y.normalized();
  return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
}

std::string MoebiusMap::to_string() const {
  auto lin = [](const CycNumber& u, const CycNumber& v) {
    std::ostringstream o;
    bool have = false;
    if (!u.is_zero()) {
      if (u == CycNumber(1)) o << "x";
      else if (u == CycNumber(-1)) o << "-x";
      else o << "(" << u.to_string() << ")*x";
      have = true;
    }
    if (!v.is_zero() || !have) {
      if (have) o << " + ";
      o << (v.is_rational() ? v.to_string() : "(" + v.to_string() + ")");
    }
    return o.str();
  };
  if (c_.is_zero() && d_ == CycNumber(1)) return lin(a_, b_);
  return "(" + lin(a_, b_) + ")/(" + lin(c_, d_) + ")";
}

namespace {

// Matrix sending p1, p2, p3 to 0, 1, inf.
MoebiusMap to_standard_triple(const std::array<ExtendedPoint, 3>& p) {
  const ExtendedPoint &p1 = p[0], &p2 = p[1], &p3 = p[2];
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw InvalidInput("three-point interpolation needs distinct points");
  CycNumber one(1), zero(0);
  if (p1.infinite) return MoebiusMap(zero, p2.value - p3.value, one, -p3.value);
  if (p2.infinite) return MoebiusMap(one, -p1.value, one, -p3.value);
  if (p3.infinite) return MoebiusMap(one, -p1.value, zero, p2.value - p1.value);
  CycNumber u = p2.value - p3.value, v = p2.value - p1.value;
  return MoebiusMap(u, -(p1.value * u), v, -(p3.value * v));
}

}  // namespace

MoebiusMap moebius_from_three_points(const std::array<ExtendedPoint, 3>& src,
                                     const std::array<ExtendedPoint, 3>& dst) {
  MoebiusMap m = to_standard_triple(dst).inverse() * to_standard_triple(src);
  for (int i = 0; i < 3; ++i)
    if (m.apply(src[static_cast<size_t>(i)]) != dst[static_cast<size_t>(i)])
      throw InternalError("three-point interpolation failed to verify");
  return m;
}

}  // namespace gsc
