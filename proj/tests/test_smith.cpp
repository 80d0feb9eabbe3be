#include "gsc/smith.hpp"

#include <doctest.h>

#include "gsc/error.hpp"

using namespace gsc;

namespace {

std::vector<std::vector<Integer>> mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Integer> diag(std::initializer_list<long> vals) {
  std::vector<Integer> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("smith diagonal of small matrices") {
  CHECK(smith_diagonal(mat({{4, 0}, {-2, 4}})) == diag({2, 8}));
  CHECK(smith_diagonal(mat({{4, 0}, {-2, 2}})) == diag({2, 4}));
  CHECK(smith_diagonal(mat({{2, 0}, {0, 3}})) == diag({1, 6}));
  CHECK(smith_diagonal(mat({{6, 0}, {0, 4}})) == diag({2, 12}));
  CHECK(smith_diagonal(mat({{1, 0}, {0, 1}})) == diag({1, 1}));
  CHECK(smith_diagonal(mat({{0, 0}, {0, 0}})) == diag({0, 0}));
  CHECK(smith_diagonal(mat({{5}})) == diag({5}));
  CHECK(smith_diagonal(mat({{-7}})) == diag({7}));
}

TEST_CASE("smith diagonal respects divisibility with awkward entries") {
  // Classic case where the pivot must absorb another row first.
  CHECK(smith_diagonal(mat({{2, 0}, {0, 2}})) == diag({2, 2}));
  // Determinantal divisors: gcd of entries 2, of 2x2 minors 4, det 624,
  // hence diagonal 2, 4/2, 624/4.
  CHECK(smith_diagonal(mat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})) == diag({2, 2, 156}));
  // Rectangular shapes.
  CHECK(smith_diagonal(mat({{2, 4, 4}})) == diag({2}));
  CHECK(smith_diagonal(mat({{4, 0}, {0, 4}, {2, 2}})) == diag({2, 4}));
}

TEST_CASE("invariant factors of presented abelian groups") {
  CHECK(invariant_factors(mat({{4, 0}, {-2, 4}})) == std::vector<long>{2, 8});
  CHECK(invariant_factors(mat({{4, 0}, {-2, 2}})) == std::vector<long>{2, 4});
  // Trivial group.
  CHECK(invariant_factors(mat({{1, 0}, {0, 1}})).empty());
  // Cyclic subgroups survive unit cleanup.
  CHECK(invariant_factors(mat({{2, 0}, {0, 3}})) == std::vector<long>{6});
  // Underdetermined presentations are infinite.
  CHECK_THROWS_AS(invariant_factors(mat({{2, 4, 4}})), InvalidInput);
  CHECK_THROWS_AS(invariant_factors(mat({{0, 0}, {0, 0}})), InvalidInput);
}
