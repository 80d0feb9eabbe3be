#include <doctest.h>

#include "gsc/poly.hpp"

using gsc::CycNumber;
using gsc::Poly;

TEST_CASE("polynomial ring basics") {
  Poly x = Poly::variable();
  Poly p = x * x - Poly(CycNumber(1));       // x^2 - 1
  Poly q = x + Poly(CycNumber(1));           // x + 1
  CHECK(p.degree() == 2);
  CHECK((p + q).degree() == 2);
  CHECK(p * q == Poly::from_longs({-1, -1, 1, 1}));
  CHECK((p - p).is_zero());
  CHECK(p.eval(CycNumber(3)) == CycNumber(8));
  CHECK(Poly().degree() == -1);
  CHECK(x.pow(5) == Poly::monomial(5));
}

TEST_CASE("division with remainder") {
  Poly num = Poly::from_longs({-1, 0, 0, 0, 1});  // x^4 - 1
  Poly den = Poly::from_longs({-1, 1});           // x - 1
  auto [q, r] = Poly::divmod(num, den);
  CHECK(r.is_zero());
  CHECK(q == Poly::from_longs({1, 1, 1, 1}));
  CHECK(q * den == num);

  Poly n2 = Poly::from_longs({1, 2, 1});
  Poly d2 = Poly::from_longs({0, 1});  // x
  auto [q2, r2] = Poly::divmod(n2, d2);
  CHECK(q2 == Poly::from_longs({2, 1}));
  CHECK(r2 == Poly(CycNumber(1)));
  CHECK_THROWS_AS(Poly::divmod(n2, Poly()), gsc::InvalidInput);
}

TEST_CASE("gcd is monic and divides both inputs") {
  Poly a = Poly::from_longs({-1, 0, 0, 0, 1});   // x^4 - 1
  Poly b = Poly::from_longs({-1, 0, 1});         // x^2 - 1
  Poly g = gcd_poly(a, b);
  CHECK(g == b);
  CHECK((a % g).is_zero());

  Poly c = Poly::from_longs({2, 2});   // 2x + 2
  Poly d = Poly::from_longs({0, 0, 4});  // 4x^2
  CHECK(gcd_poly(c, d) == Poly(CycNumber(1)));
  CHECK(gcd_poly(Poly(), d) == Poly::monomial(2));
  CHECK(gcd_poly(Poly(), Poly()).is_zero());
}

TEST_CASE("monic normalization and parity") {
  Poly p = Poly::from_longs({2, 0, -4});
  CHECK_FALSE(p.is_monic());
  Poly m = p.monic();
  CHECK(m.leading() == CycNumber(1));
  CHECK(m == Poly(CycNumber(gsc::Rational(-1, 2))) * Poly::from_longs({1, 0, -2}));
  CHECK(p.is_even());
  CHECK_FALSE(Poly::from_longs({0, 1, 1}).is_even());
  CHECK(Poly().is_even());
}

TEST_CASE("polynomial printing") {
  CHECK(Poly::from_longs({-16, 0, 0, 0, 1}).to_string() == "x^4 - 16");
  CHECK(Poly::from_longs({0, -1}).to_string() == "-x");
  CHECK(Poly::from_longs({1, 2, 3}).to_string() == "3*x^2 + 2*x + 1");
  CHECK(Poly().to_string() == "0");
  Poly mixed = Poly::monomial(2, CycNumber::root_of_unity(12, 2)) + Poly(CycNumber(1));
  CHECK(mixed.to_string() == "(z12^2)*x^2 + 1");
}

TEST_CASE("cyclotomic coefficients behave in polynomial arithmetic") {
  CycNumber i = CycNumber::root_of_unity(4);
  Poly p = Poly::from_longs({1, 0, 1});  // x^2 + 1
  Poly fac1(std::vector<CycNumber>{i, CycNumber(1)});    // x + i
  Poly fac2(std::vector<CycNumber>{-i, CycNumber(1)});   // x - i
  CHECK(fac1 * fac2 == p);
  CHECK(p.eval(i).is_zero());
}
