#include "gsc/signature.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gsc {

Rational Signature::area() const {
  Rational a = 2 * (genus - 1);
  for (long m : orders) a += Rational(m - 1, m);
  a.canonicalize();
  return a;
}

std::string Signature::to_string() const {
  std::ostringstream out;
  out << "(" << genus << "; ";
  if (orders.empty()) {
    out << "-";
  } else {
    for (size_t i = 0; i < orders.size(); ++i) {
      if (i) out << ",";
      out << orders[i];
    }
  }
  out << ")";
  return out.str();
}

Signature make_signature(long genus, std::vector<long> orders) {
  if (genus < 0) throw InvalidInput("signature genus must be non-negative");
  for (long m : orders)
    if (m < 1) throw InvalidInput("cone orders must be at least 1");
  std::sort(orders.begin(), orders.end());
  return Signature{genus, std::move(orders)};
}

bool is_odd_signature(const Signature& sig) {
  if (sig.genus != 0) return false;
  size_t i = 0;
  while (i < sig.orders.size()) {
    size_t j = i;
    while (j < sig.orders.size() && sig.orders[j] == sig.orders[i]) ++j;
    if ((j - i) % 2 == 1) return true;
    i = j;
  }
  return false;
}

bool harvey_check(long n, const std::vector<long>& orders) {
  if (n < 2) throw InvalidInput("harvey_check requires n >= 2");
  if (orders.size() < 3)
    throw InvalidInput("harvey_check requires at least three branching orders");
  for (long m : orders) {
    if (m < 2) throw InvalidInput("branching orders must be at least 2");
    if (n % m != 0)
      throw InvalidInput("branching order " + std::to_string(m) +
                         " does not divide " + std::to_string(n));
  }
  const size_t s = orders.size();
  // lcm of every (s-1)-subset via prefix/suffix tables.
  std::vector<long> pre(s + 1, 1), suf(s + 1, 1);
  for (size_t i = 0; i < s; ++i) pre[i + 1] = lcm_ll(pre[i], orders[i]);
  for (size_t i = s; i-- > 0;) suf[i] = lcm_ll(suf[i + 1], orders[i]);
  for (size_t i = 0; i < s; ++i)
    if (lcm_ll(pre[i], suf[i + 1]) != n) return false;
  if (n % 2 == 0) {
    long odd_count = 0;
    for (long m : orders)
      if ((n / m) % 2 == 1) ++odd_count;
    if (odd_count % 2 == 1) return false;
  }
  return true;
}

long genus_from_exponents(long n, const std::vector<long>& finite_exps) {
  if (n < 2) throw InvalidInput("genus_from_exponents requires n >= 2");
  for (long l : finite_exps)
    if (l < 1 || l >= n)
      throw InvalidInput("exponents must lie in [1, n-1]");
  std::vector<long> exps = finite_exps;
  long sum = 0;
  for (long l : exps) sum = (sum + l) % n;
  if (sum != 0) exps.push_back(n - sum);
  if (exps.size() < 3)
    throw InvalidInput("need at least three branch points");
  long g = 0;
  for (long l : exps) g = std::gcd(g, l);
  if (std::gcd(g, n) != 1)
    throw InvalidInput("exponents do not generate Z/" + std::to_string(n));
  long total_gcd = 0;
  for (long l : exps) total_gcd += std::gcd(n, l);
  long numerator = (static_cast<long>(exps.size()) - 2) * n - total_gcd;
  if (numerator % 2 != 0)
    throw InternalError("genus computation produced a non-integer");
  return 1 + numerator / 2;
}

}  // namespace gsc
