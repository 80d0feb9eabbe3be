#include <doctest.h>

#include <numeric>

#include "gsc/signature.hpp"

using gsc::Rational;
using gsc::Signature;
using gsc::make_signature;

namespace {

// Independent check for harvey_check: search exhaustively for a tuple of
// residues with the prescribed element orders, zero sum, and generating Z/n.
bool generating_vector_exists(long n, const std::vector<long>& orders) {
  std::vector<std::vector<long>> choices;
  for (long m : orders) {
    std::vector<long> c;
    for (long l = 0; l < n; ++l)
      if (std::gcd(n, l) == n / m) c.push_back(l);
    if (c.empty()) return false;
    choices.push_back(std::move(c));
  }
  std::vector<size_t> idx(orders.size(), 0);
  while (true) {
    long sum = 0, g = 0;
    for (size_t j = 0; j < idx.size(); ++j) {
      long l = choices[j][idx[j]];
      sum = (sum + l) % n;
      g = std::gcd(g, l);
    }
    if (sum == 0 && std::gcd(g, n) == 1) return true;
    size_t j = 0;
    while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
    if (j == idx.size()) return false;
  }
}

void all_order_tuples(long n, size_t size, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out, long min_d = 2) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (long d = min_d; d <= n; ++d) {
    if (n % d != 0) continue;
    cur.push_back(d);
    all_order_tuples(n, size, cur, out, d);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("hyperbolic area of standard signatures") {
  CHECK(make_signature(0, {2, 3, 7}).area() == Rational(1, 42));
  CHECK(make_signature(2, {}).area() == Rational(2));
  CHECK(make_signature(0, {2, 2}).area() == Rational(-1));
  CHECK(make_signature(1, {}).area() == Rational(0));
  // Entries equal to 1 contribute nothing.
  CHECK(make_signature(0, {1, 2, 2}).area() == Rational(-1));
  CHECK(make_signature(0, {4, 4, 8, 8}).area() == Rational(5, 4));
}

TEST_CASE("signature construction and printing") {
  Signature s = make_signature(0, {7, 2, 3});
  CHECK(s.orders == std::vector<long>{2, 3, 7});
  CHECK(s.to_string() == "(0; 2,3,7)");
  CHECK(make_signature(2, {}).to_string() == "(2; -)");
  CHECK_THROWS_AS(make_signature(-1, {}), gsc::InvalidInput);
  CHECK_THROWS_AS(make_signature(0, {0, 2}), gsc::InvalidInput);
}

TEST_CASE("odd signatures") {
  CHECK(gsc::is_odd_signature(make_signature(0, {3, 3, 5})));
  CHECK(gsc::is_odd_signature(make_signature(0, {5, 5, 5})));
  CHECK_FALSE(gsc::is_odd_signature(make_signature(0, {2, 2, 4, 4})));
  CHECK_FALSE(gsc::is_odd_signature(make_signature(1, {3})));
  CHECK_FALSE(gsc::is_odd_signature(make_signature(0, {})));
  CHECK(gsc::is_odd_signature(make_signature(0, {2, 8, 8})));
}

TEST_CASE("admissibility of branching data for cyclic covers") {
  CHECK(gsc::harvey_check(4, {2, 4, 4}));
  CHECK_FALSE(gsc::harvey_check(4, {2, 2, 4}));
  CHECK(gsc::harvey_check(2, {2, 2, 2, 2, 2, 2}));
  CHECK(gsc::harvey_check(6, {2, 3, 6}));
  CHECK(gsc::harvey_check(8, {2, 8, 8}));
  // lcm of a subset misses n.
  CHECK_FALSE(gsc::harvey_check(12, {2, 2, 3}));
  // parity violation: n even with an odd count of odd n/m.
  CHECK_FALSE(gsc::harvey_check(4, {4, 4, 4}));
  CHECK(gsc::harvey_check(5, {5, 5, 5}));

  CHECK_THROWS_AS(gsc::harvey_check(4, {4, 4}), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::harvey_check(4, {3, 4, 4}), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::harvey_check(1, {1, 1, 1}), gsc::InvalidInput);
}

TEST_CASE("admissibility agrees with exhaustive search on small cases") {
  for (long n = 2; n <= 8; ++n) {
    for (size_t size : {3u, 4u}) {
      std::vector<std::vector<long>> tuples;
      std::vector<long> cur;
      all_order_tuples(n, size, cur, tuples);
      for (const auto& orders : tuples) {
        CAPTURE(n);
        CAPTURE(orders);
        CHECK(gsc::harvey_check(n, orders) == generating_vector_exists(n, orders));
      }
    }
  }
}

TEST_CASE("genus from exponent tuples") {
  CHECK(gsc::genus_from_exponents(5, {1, 1, 3}) == 2);
  CHECK(gsc::genus_from_exponents(2, {1, 1, 1, 1, 1, 1}) == 2);
  // Zero sum already, no extra branch point at infinity.
  CHECK(gsc::genus_from_exponents(5, {1, 1, 1, 2}) == 4);
  // A branch point at infinity is appended: four simple points for y^4.
  CHECK(gsc::genus_from_exponents(4, {1, 1, 1}) == 3);
  // Twelve simple roots and a double point, branch at infinity completes it.
  std::vector<long> exps(13, 1);
  exps[0] = 2;
  CHECK(gsc::genus_from_exponents(4, exps) == 17);

  CHECK_THROWS_AS(gsc::genus_from_exponents(4, {0, 1, 1}), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::genus_from_exponents(4, {4, 1, 1}), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::genus_from_exponents(4, {2, 2}), gsc::InvalidInput);
  CHECK_THROWS_AS(gsc::genus_from_exponents(6, {2, 2, 2}), gsc::InvalidInput);
}
