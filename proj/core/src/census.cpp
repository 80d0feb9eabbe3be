#include "gsc/census.hpp"

#include <algorithm>
#include <numeric>

namespace gsc {

long SignatureTuple::genus() const {
  Rational g = 1 + Rational(n) * quotient_signature().area() / 2;
  g.canonicalize();
  if (g.get_den() != 1)
    throw InvalidInput("branching data " + quotient_signature().to_string() +
                       " with n=" + std::to_string(n) +
                       " gives a non-integral genus");
  return g.get_num().get_si();
}

namespace {

void collect_orders(long n, long genus, const Rational& remaining, long slots,
                    long min_d, std::vector<long>& cur,
                    std::vector<SignatureTuple>& out) {
  if (slots == 0) {
    if (remaining != 0) return;
    if (!harvey_check(n, cur)) return;
    out.push_back(SignatureTuple{n, cur});
    return;
  }
  // Each further slot contributes between 1/2 and 1 - 1/n.
  if (remaining < Rational(slots, 2)) return;
  if (remaining > Rational(slots) * Rational(n - 1, n)) return;
  for (long d = min_d; d <= n; ++d) {
    if (n % d != 0) continue;
    cur.push_back(d);
    collect_orders(n, genus, remaining - Rational(d - 1, d), slots - 1, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SignatureTuple> enumerate_families(long genus, long max_n) {
  if (genus < 2) throw InvalidInput("family enumeration requires genus >= 2");
  if (max_n == 0) max_n = 4 * genus + 2;
  if (max_n < 2) throw InvalidInput("max_n must be at least 2");
  std::vector<SignatureTuple> out;
  for (long n = 2; n <= max_n; ++n) {
    // Total of (1 - 1/m) over the orders demanded by the area relation.
    Rational target = Rational(2 * (genus - 1), n) + 2;
    target.canonicalize();
    for (long r = 3; Rational(r, 2) <= target; ++r) {
      if (Rational(r) * Rational(n - 1, n) < target) continue;
      std::vector<long> cur;
      collect_orders(n, genus, target, r, 2, cur, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const SignatureTuple& a, const SignatureTuple& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.orders < b.orders;
  });
  return out;
}

std::vector<std::vector<long>> enumerate_exponents(const SignatureTuple& st) {
  if (!harvey_check(st.n, st.orders))
    throw InvalidInput("branching data is not admissible for n=" +
                       std::to_string(st.n));
  std::vector<std::vector<long>> choices;
  for (long m : st.orders) {
    std::vector<long> c;
    for (long l = 1; l < st.n; ++l)
      if (std::gcd(st.n, l) == st.n / m) c.push_back(l);
    choices.push_back(std::move(c));
  }
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  long sum = 0;
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == choices.size()) {
      if (sum % st.n == 0) out.push_back(cur);
      return;
    }
    for (long l : choices[pos]) {
      cur.push_back(l);
      sum += l;
      self(self, pos + 1);
      sum -= l;
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

void validate_full_tuple(long n, const std::vector<long>& exps) {
  if (n < 2) throw InvalidInput("exponent tuples require n >= 2");
  long sum = 0;
  for (long l : exps) {
    if (l < 1 || l >= n) throw InvalidInput("exponents must lie in [1, n-1]");
    sum = (sum + l) % n;
  }
  if (sum != 0) throw InvalidInput("exponent tuple must sum to zero mod n");
}

std::vector<std::pair<long, long>> order_exp_pairs(long n, long unit,
                                                  const std::vector<long>& exps) {
  std::vector<std::pair<long, long>> pairs;
  pairs.reserve(exps.size());
  for (long l : exps) {
    long tl = mod_ll(unit * l, n);
    pairs.emplace_back(n / std::gcd(n, tl), tl);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

std::vector<long> canonical_exponent_form(long n, const std::vector<long>& exps) {
  validate_full_tuple(n, exps);
  std::optional<std::vector<std::pair<long, long>>> best;
  for (long u : units_mod(n)) {
    auto pairs = order_exp_pairs(n, u, exps);
    if (!best || pairs < *best) best = std::move(pairs);
  }
  std::vector<long> out;
  out.reserve(exps.size());
  for (const auto& [order, exp] : *best) out.push_back(exp);
  return out;
}

bool are_equivalent_tuples(long n, const std::vector<long>& a,
                           const std::vector<long>& b) {
  if (a.size() != b.size()) return false;
  auto oa = order_exp_pairs(n, 1, a);
  auto ob = order_exp_pairs(n, 1, b);
  for (size_t i = 0; i < oa.size(); ++i)
    if (oa[i].first != ob[i].first) return false;
  return canonical_exponent_form(n, a) == canonical_exponent_form(n, b);
}

long genus_of_tuple(const SignatureTuple& st, const std::vector<long>& exps) {
  if (exps.size() != st.orders.size())
    throw InvalidInput("exponent tuple length does not match the branching data");
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] < 1 || exps[j] >= st.n ||
        std::gcd(st.n, exps[j]) != st.n / st.orders[j])
      throw InvalidInput("exponent " + std::to_string(exps[j]) +
                         " does not have order " + std::to_string(st.orders[j]));
  }
  long g = genus_from_exponents(st.n, exps);
  if (g != st.genus())
    throw InternalError("tuple genus disagrees with branching data genus");
  return g;
}

BranchedCurve make_branched_curve(long n, std::vector<ExtendedPoint> points,
                                  std::vector<long> exponents) {
  if (n < 2) throw InvalidInput("branched curves require n >= 2");
  if (points.size() != exponents.size())
    throw InvalidInput("points and exponents must have the same length");
  long sum = 0;
  for (long l : exponents) {
    if (l < 1 || l >= n) throw InvalidInput("exponents must lie in [1, n-1]");
    sum = (sum + l) % n;
  }
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw InvalidInput("branch points must be distinct");
  if (sum != 0) {
    for (const auto& p : points)
      if (p.infinite)
        throw InvalidInput(
            "exponent sum is nonzero mod n but infinity is already a branch point");
    points.push_back(ExtendedPoint::at_infinity());
    exponents.push_back(n - sum);
  }
  long g = 0;
  for (long l : exponents) g = std::gcd(g, l);
  if (std::gcd(g, n) != 1)
    throw InvalidInput("exponents do not generate Z/" + std::to_string(n));
  return BranchedCurve{n, std::move(points), std::move(exponents)};
}

std::optional<CurveIsomorphism> find_curve_isomorphism(const BranchedCurve& a,
                                                       const BranchedCurve& b) {
  if (a.n != b.n)
    throw InvalidInput("curves have different covering degrees");
  if (a.points.size() < 3 || b.points.size() < 3)
    throw InvalidInput("isomorphism search needs at least three branch points");
  if (a.points.size() != b.points.size()) return std::nullopt;
  const long n = a.n;
  const size_t s = a.points.size();
  // Orders are preserved by any unit, so compare them as multisets first.
  {
    std::vector<long> oa, ob;
    for (long l : a.exponents) oa.push_back(n / std::gcd(n, l));
    for (long l : b.exponents) ob.push_back(n / std::gcd(n, l));
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return std::nullopt;
  }
  std::array<ExtendedPoint, 3> src = {a.points[0], a.points[1], a.points[2]};
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < s; ++k) {
        if (k == i || k == j) continue;
        MoebiusMap m = moebius_from_three_points(
            src, {b.points[i], b.points[j], b.points[k]});
        std::vector<size_t> perm(s);
        bool ok = true;
        for (size_t t = 0; t < s && ok; ++t) {
          ExtendedPoint img = m.apply(a.points[t]);
          auto it = std::find(b.points.begin(), b.points.end(), img);
          if (it == b.points.end()) {
            ok = false;
            break;
          }
          perm[t] = static_cast<size_t>(it - b.points.begin());
        }
        if (!ok) continue;
        for (long u : units_mod(n)) {
          bool match = true;
          for (size_t t = 0; t < s; ++t) {
            if (mod_ll(u * a.exponents[t], n) != b.exponents[perm[t]]) {
              match = false;
              break;
            }
          }
          if (match) return CurveIsomorphism{m, perm, u};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace gsc
