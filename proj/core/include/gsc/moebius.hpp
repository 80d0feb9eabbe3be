#pragma once
// Points of the projective line over a cyclotomic field and Moebius
// transformations acting on them.  Maps are stored as 2x2 matrices up to
// scale; composition is matrix multiplication.

#include <array>
#include <string>

#include "gsc/cyclotomic.hpp"

namespace gsc {

struct ExtendedPoint {
  bool infinite = false;
  CycNumber value;  // meaningful only when finite

  static ExtendedPoint at_infinity() { return {true, CycNumber()}; }
  static ExtendedPoint finite(CycNumber v) { return {false, std::move(v)}; }

  std::string to_string() const { return infinite ? "inf" : value.to_string(); }

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) {
    return !(a == b);
  }
};

// "inf" or any expression parse_cyc accepts.
ExtendedPoint parse_extended_point(const std::string& text);

class MoebiusMap {
public:
  MoebiusMap();  // identity
  MoebiusMap(CycNumber a, CycNumber b, CycNumber c, CycNumber d);

  static MoebiusMap scaling(const CycNumber& k);   // x -> k x
  static MoebiusMap negation();                    // x -> -x
  static MoebiusMap inversion();                   // x -> 1/x

  const CycNumber& a() const { return a_; }
  const CycNumber& b() const { return b_; }
  const CycNumber& c() const { return c_; }
  const CycNumber& d() const { return d_; }

  ExtendedPoint apply(const ExtendedPoint& p) const;
  CycNumber apply_finite(const CycNumber& x) const;  // throws if x maps to inf

  // (f * g)(x) = f(g(x)).
  friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g);
  MoebiusMap inverse() const;
  MoebiusMap normalized() const;
  bool is_identity() const;

  friend bool operator==(const MoebiusMap&, const MoebiusMap&);
  friend bool operator!=(const MoebiusMap& a, const MoebiusMap& b) { return !(a == b); }

  std::string to_string() const;

private:
  CycNumber a_, b_, c_, d_;
};

// The unique Moebius map sending src[0], src[1], src[2] to dst[0], dst[1],
// dst[2]; the points in each triple must be pairwise distinct.
MoebiusMap moebius_from_three_points(const std::array<ExtendedPoint, 3>& src,
                                     const std::array<ExtendedPoint, 3>& dst);

}  // namespace gsc
