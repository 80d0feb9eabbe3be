#include <doctest.h>

#include "gsc/singerman.hpp"

using gsc::Signature;
using gsc::SingermanInclusion;
using gsc::make_signature;
using gsc::singerman_inclusions;

namespace {
SingermanInclusion inc(std::vector<long> orders, long index, bool normal) {
  return {make_signature(0, std::move(orders)), index, normal};
}
}  // namespace

TEST_CASE("genus two with no cone points") {
  auto r = singerman_inclusions(make_signature(2, {}));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == inc({2, 2, 2, 2, 2, 2}, 2, true));
}

TEST_CASE("genus one subgroups") {
  auto two = singerman_inclusions(make_signature(1, {3, 3}));
  REQUIRE(two.size() == 1);
  CHECK(two[0] == inc({2, 2, 2, 2, 3}, 2, true));

  auto one = singerman_inclusions(make_signature(1, {4}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == inc({2, 2, 2, 8}, 2, true));
}

TEST_CASE("equilateral triangle signatures") {
  auto r = singerman_inclusions(make_signature(0, {5, 5, 5}));
  REQUIRE(r.size() == 3);
  CHECK(r[0] == inc({3, 3, 5}, 3, true));
  CHECK(r[1] == inc({2, 3, 10}, 6, true));
  CHECK(r[2] == inc({2, 5, 10}, 2, true));

  auto seven = singerman_inclusions(make_signature(0, {7, 7, 7}));
  REQUIRE(seven.size() == 4);
  CHECK(seven[0] == inc({3, 3, 7}, 3, true));
  CHECK(seven[1] == inc({2, 3, 14}, 6, true));
  CHECK(seven[2] == inc({2, 7, 14}, 2, true));
  CHECK(seven[3] == inc({2, 3, 7}, 24, false));
}

TEST_CASE("sporadic and parametrized non-normal inclusions") {
  auto r = singerman_inclusions(make_signature(0, {4, 8, 8}));
  REQUIRE(r.size() == 3);
  CHECK(r[0] == inc({2, 8, 8}, 2, true));
  CHECK(r[1] == inc({2, 3, 8}, 12, false));
  CHECK(r[2] == inc({2, 4, 8}, 4, false));

  auto s = singerman_inclusions(make_signature(0, {2, 5, 10}));
  REQUIRE(s.size() == 1);
  CHECK(s[0] == inc({2, 3, 10}, 3, false));

  auto t = singerman_inclusions(make_signature(0, {3, 6, 6}));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == inc({2, 6, 6}, 2, true));
  CHECK(t[1] == inc({2, 4, 6}, 4, false));

  // (2, 8, 8) also fits the (t, 4t, 4t) row at t = 2.
  auto u = singerman_inclusions(make_signature(0, {2, 8, 8}));
  REQUIRE(u.size() == 2);
  CHECK(u[0] == inc({2, 4, 8}, 2, true));
  CHECK(u[1] == inc({2, 3, 8}, 6, false));
}

TEST_CASE("maximal signatures admit no inclusion") {
  CHECK(gsc::is_maximal_signature(make_signature(0, {2, 3, 7})));
  CHECK(gsc::is_maximal_signature(make_signature(0, {2, 3, 11})));
  CHECK(gsc::is_maximal_signature(make_signature(1, {2, 3})));
  // Every genus-two cyclic family quotient signature with three cone points
  // is non-maximal.
  for (auto orders : std::vector<std::vector<long>>{
           {5, 5, 5}, {3, 6, 6}, {2, 8, 8}, {2, 5, 10}}) {
    CAPTURE(orders);
    CHECK_FALSE(gsc::is_maximal_signature(make_signature(0, orders)));
  }
}

TEST_CASE("inclusions scale the area by the index") {
  for (long g = 0; g <= 2; ++g) {
    for (long a = 2; a <= 9; ++a) {
      for (long b = a; b <= 9; ++b) {
        for (long c = b; c <= 12; ++c) {
          Signature sig = make_signature(g, {a, b, c});
          if (sig.area() <= 0) continue;
          for (const auto& i : singerman_inclusions(sig)) {
            CAPTURE(sig.to_string());
            CHECK(sig.area() == i.index * i.super.area());
            CHECK(i.super.area() > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("non-hyperbolic signatures are rejected") {
  CHECK_THROWS_AS(singerman_inclusions(make_signature(0, {2, 3, 6})), gsc::InvalidInput);
  CHECK_THROWS_AS(singerman_inclusions(make_signature(0, {2, 2})), gsc::InvalidInput);
  CHECK_THROWS_AS(singerman_inclusions(make_signature(1, {})), gsc::InvalidInput);
}
