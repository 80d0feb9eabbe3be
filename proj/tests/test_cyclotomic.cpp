#include <doctest.h>

#include "gsc/cyclotomic.hpp"

using gsc::CycNumber;
using gsc::Rational;

namespace {

std::vector<long> poly_longs(const std::vector<gsc::Integer>& v) {
  std::vector<long> out;
  for (const auto& c : v) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials for small conductors") {
  CHECK(poly_longs(gsc::cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
  CHECK(poly_longs(gsc::cyclotomic_polynomial(2)) == std::vector<long>{1, 1});
  CHECK(poly_longs(gsc::cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
  CHECK(poly_longs(gsc::cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
  CHECK(poly_longs(gsc::cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(poly_longs(gsc::cyclotomic_polynomial(5)) == std::vector<long>{1, 1, 1, 1, 1});
}

TEST_CASE("roots of unity have the right multiplicative order") {
  for (long n = 1; n <= 16; ++n) {
    CycNumber z = CycNumber::root_of_unity(n);
    CHECK(z.pow(n) == CycNumber(1));
    for (long k = 1; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(z.pow(k) != CycNumber(1));
    }
  }
}

TEST_CASE("arithmetic identities in Q(zeta_12)") {
  CycNumber z = CycNumber::root_of_unity(12);
  CycNumber a = z.pow(2) - CycNumber(1);
  CycNumber b = z.pow(7) + CycNumber(Rational(1, 2));
  CycNumber c = z + CycNumber(3);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a * b == b * a);
  CHECK(a * a.inverse() == CycNumber(1));
  CHECK((a / b) * b == a);
  CHECK(-(-a) == a);
}

TEST_CASE("square roots used for automorphism multipliers") {
  // sqrt(2) = z8 - z8^3 and sqrt(-3) = 2*z6 - 1.
  CycNumber s2 = CycNumber::root_of_unity(8) - CycNumber::root_of_unity(8, 3);
  CHECK(s2 * s2 == CycNumber(2));
  CycNumber s3i = CycNumber(2) * CycNumber::root_of_unity(6) - CycNumber(1);
  CHECK(s3i * s3i == CycNumber(-3));
  // i itself in two spellings.
  CHECK(CycNumber::root_of_unity(4) == CycNumber::root_of_unity(12, 3));
}

TEST_CASE("cross-conductor equality and embedding") {
  CHECK(CycNumber::root_of_unity(12, 4) == CycNumber::root_of_unity(3));
  CHECK(CycNumber::root_of_unity(12, 6) == CycNumber(-1));
  CHECK(CycNumber::root_of_unity(4).embedded(12) == CycNumber::root_of_unity(12, 3));
  CHECK_THROWS_AS(CycNumber::root_of_unity(4).embedded(6), gsc::InvalidInput);
}

TEST_CASE("reduction to a subfield") {
  CycNumber z6_in_12 = CycNumber::root_of_unity(12, 2);
  auto red = z6_in_12.try_reduce(6);
  REQUIRE(red.has_value());
  CHECK(red->conductor() == 6);
  CHECK(*red == CycNumber::root_of_unity(6));

  CHECK_FALSE(CycNumber::root_of_unity(12).try_reduce(6).has_value());
  CHECK_THROWS_AS(CycNumber::root_of_unity(12).try_reduce(5), gsc::InvalidInput);
}

TEST_CASE("embed then reduce round-trips") {
  std::vector<CycNumber> samples = {
      CycNumber(7),
      CycNumber(Rational(-3, 4)),
      CycNumber::root_of_unity(5) + CycNumber(1),
      CycNumber::root_of_unity(8, 3) - CycNumber::root_of_unity(8),
  };
  for (const auto& x : samples) {
    long big = x.conductor() * 3;
    auto back = x.embedded(big).try_reduce(x.conductor());
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
}

TEST_CASE("printing cyclotomic values") {
  CycNumber v = CycNumber::root_of_unity(12, 2) - CycNumber(1);
  CHECK(v.to_string() == "z12^2 - 1");
  CHECK(CycNumber(Rational(-3, 2)).to_string() == "-3/2");
  CHECK(CycNumber().to_string() == "0");
  CHECK(CycNumber::root_of_unity(8).to_string() == "z8");
  CycNumber w = CycNumber(-2) * CycNumber::root_of_unity(8, 3) + CycNumber(Rational(1, 2));
  CHECK(w.to_string() == "-2*z8^3 + 1/2");
  // -1 reduced mod Phi_2 has a plain rational answer even in conductor 2.
  CHECK(CycNumber::root_of_unity(2).to_string() == "-1");
}

TEST_CASE("parsing printed values round-trips") {
  std::vector<CycNumber> samples = {
      CycNumber::root_of_unity(12, 2) - CycNumber(1),
      CycNumber(Rational(5, 2)),
      CycNumber(-2) * CycNumber::root_of_unity(8, 3) + CycNumber(Rational(1, 2)),
      CycNumber::root_of_unity(5, 4),
      CycNumber(),
  };
  for (const auto& x : samples) CHECK(gsc::parse_cyc(x.to_string()) == x);

  CHECK(gsc::parse_cyc("z4") == CycNumber::root_of_unity(4));
  CHECK(gsc::parse_cyc(" 2 * z6 - 1 ") ==
        CycNumber(2) * CycNumber::root_of_unity(6) - CycNumber(1));
  CHECK(gsc::parse_cyc("3/2") == CycNumber(Rational(3, 2)));
  CHECK_THROWS_AS(gsc::parse_cyc("z"), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::parse_cyc("1 +"), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::parse_cyc("2q"), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::parse_cyc("3 *"), gsc::InvalidInput);
}

TEST_CASE("recognizing powers of a fixed root of unity") {
  CycNumber w = CycNumber::root_of_unity(8, 5);
  auto e = gsc::as_root_power(w, 8);
  REQUIRE(e.has_value());
  CHECK(*e == 5);
  CHECK(gsc::as_root_power(CycNumber(-1), 2) == 1);
  CHECK(gsc::as_root_power(CycNumber(1), 6) == 0);
  CHECK_FALSE(gsc::as_root_power(CycNumber(2), 8).has_value());
}

TEST_CASE("negative powers") {
  CycNumber z = CycNumber::root_of_unity(12);
  CHECK(z.pow(-1) == CycNumber::root_of_unity(12, 11));
  CHECK(z.pow(-5) * z.pow(5) == CycNumber(1));
}
