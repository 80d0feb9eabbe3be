#include "gsc/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gsc {

namespace {

// Exact division of integer polynomials (ascending coefficients), used only
// while building cyclotomic polynomials.  Throws on inexact division.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den) {
  if (den.empty() || den.back() != 1)
    throw InternalError("poly_div_exact: divisor must be monic");
  std::vector<Integer> rem = num;
  if (rem.size() < den.size()) throw InternalError("poly_div_exact: degree");
  std::vector<Integer> quot(rem.size() - den.size() + 1);
  for (size_t i = quot.size(); i-- > 0;) {
    Integer q = rem[i + den.size() - 1];
    quot[i] = q;
    for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw InternalError("poly_div_exact: inexact");
  return quot;
}

// Per-conductor data: phi, the cyclotomic polynomial, and reduction rows
// giving x^t mod Phi_n for every t we might meet (products and embeddings).
struct Context {
  long n = 1;
  long phi = 1;
  std::vector<Integer> cyclo;
  std::vector<std::vector<Integer>> rows;  // rows[t] = coefficients of x^t
};

std::shared_ptr<const Context> get_context(long n) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const Context>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto ctx = std::make_shared<Context>();
  ctx->n = n;
  ctx->cyclo = cyclotomic_polynomial(n);
  ctx->phi = static_cast<long>(ctx->cyclo.size()) - 1;
  const long phi = ctx->phi;
  const long rows_needed = std::max(n, 2 * phi - 1);
  ctx->rows.reserve(static_cast<size_t>(rows_needed));
  for (long t = 0; t < rows_needed; ++t) {
    std::vector<Integer> row(static_cast<size_t>(phi));
    if (t < phi) {
      row[static_cast<size_t>(t)] = 1;
    } else {
      const auto& prev = ctx->rows[static_cast<size_t>(t - 1)];
      Integer carry = prev[static_cast<size_t>(phi - 1)];
      for (long j = phi - 1; j >= 1; --j) row[static_cast<size_t>(j)] = prev[static_cast<size_t>(j - 1)];
      row[0] = 0;
      if (carry != 0)
        for (long j = 0; j < phi; ++j)
          row[static_cast<size_t>(j)] -= carry * ctx->cyclo[static_cast<size_t>(j)];
    }
    ctx->rows.push_back(std::move(row));
  }
  cache.emplace(n, ctx);
  return ctx;
}

void trim_poly(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division step for the extended Euclid run in inverse().
std::vector<Rational> poly_mod_q(std::vector<Rational> rem,
                                 const std::vector<Rational>& den,
                                 std::vector<Rational>* quotient) {
  quotient->clear();
  trim_poly(rem);
  if (rem.size() < den.size()) return rem;
  quotient->assign(rem.size() - den.size() + 1, Rational(0));
  for (size_t i = quotient->size(); i-- > 0;) {
    Rational q = rem[i + den.size() - 1] / den.back();
    (*quotient)[i] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
  }
  trim_poly(rem);
  return rem;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n <= 0) throw InvalidInput("cyclotomic_polynomial requires n >= 1");
  std::map<long, std::vector<Integer>> table;
  for (long d : divisors(n)) {
    std::vector<Integer> num(static_cast<size_t>(d) + 1);
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;  // x^d - 1
    for (long e : divisors(d))
      if (e != d) num = poly_div_exact(num, table[e]);
    table[d] = std::move(num);
  }
  return table[n];
}

CycNumber::CycNumber() : conductor_(1), coeffs_(1, Rational(0)) {}

CycNumber::CycNumber(const Rational& value) : conductor_(1), coeffs_(1, value) {}

CycNumber::CycNumber(long value) : conductor_(1), coeffs_(1, Rational(value)) {}

CycNumber::CycNumber(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycNumber CycNumber::root_of_unity(long order, long power) {
  if (order <= 0) throw InvalidInput("root_of_unity requires a positive order");
  long k = mod_ll(power, order);
  auto ctx = get_context(order);
  std::vector<Rational> c(static_cast<size_t>(ctx->phi));
  const auto& row = ctx->rows[static_cast<size_t>(k)];
  for (long j = 0; j < ctx->phi; ++j) c[static_cast<size_t>(j)] = Rational(row[static_cast<size_t>(j)]);
  return CycNumber(order, std::move(c));
}

CycNumber CycNumber::from_coefficients(long conductor, std::vector<Rational> coeffs) {
  if (conductor <= 0) throw InvalidInput("conductor must be positive");
  auto ctx = get_context(conductor);
  if (static_cast<long>(coeffs.size()) != ctx->phi)
    throw InvalidInput("coefficient vector length must equal phi(conductor)");
  for (auto& c : coeffs) c.canonicalize();
  return CycNumber(conductor, std::move(coeffs));
}

bool CycNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycNumber::is_rational() const {
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

std::optional<Rational> CycNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycNumber CycNumber::embedded(long target) const {
  if (target <= 0 || target % conductor_ != 0)
    throw InvalidInput("embedding undefined: target conductor " +
                       std::to_string(target) + " is not a multiple of " +
                       std::to_string(conductor_));
  if (target == conductor_) return *this;
  auto ctx = get_context(target);
  const long stride = target / conductor_;
  std::vector<Rational> out(static_cast<size_t>(ctx->phi), Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& row = ctx->rows[j * static_cast<size_t>(stride)];
    for (long k = 0; k < ctx->phi; ++k)
      out[static_cast<size_t>(k)] += coeffs_[j] * Rational(row[static_cast<size_t>(k)]);
  }
  return CycNumber(target, std::move(out));
}

std::optional<CycNumber> CycNumber::try_reduce(long target) const {
  if (target <= 0 || conductor_ % target != 0)
    throw InvalidInput("reduction undefined: " + std::to_string(target) +
                       " does not divide conductor " + std::to_string(conductor_));
  if (target == conductor_) return *this;
  auto big = get_context(conductor_);
  auto small = get_context(target);
  const long stride = conductor_ / target;
  // Columns: images of the subfield power basis in the big field.
  const long rows_n = big->phi, cols_n = small->phi;
  std::vector<std::vector<Rational>> aug(
      static_cast<size_t>(rows_n), std::vector<Rational>(static_cast<size_t>(cols_n) + 1, Rational(0)));
  for (long j = 0; j < cols_n; ++j) {
    const auto& row = big->rows[static_cast<size_t>(j * stride)];
    for (long i = 0; i < rows_n; ++i)
      aug[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(row[static_cast<size_t>(i)]);
  }
  for (long i = 0; i < rows_n; ++i)
    aug[static_cast<size_t>(i)][static_cast<size_t>(cols_n)] = coeffs_[static_cast<size_t>(i)];

  std::vector<long> pivot_col_of_row;
  long pr = 0;
  for (long pc = 0; pc < cols_n && pr < rows_n; ++pc) {
    long sel = -1;
    for (long i = pr; i < rows_n; ++i)
      if (aug[static_cast<size_t>(i)][static_cast<size_t>(pc)] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(aug[static_cast<size_t>(sel)], aug[static_cast<size_t>(pr)]);
    Rational inv = 1 / aug[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
    for (long j = pc; j <= cols_n; ++j) aug[static_cast<size_t>(pr)][static_cast<size_t>(j)] *= inv;
    for (long i = 0; i < rows_n; ++i) {
      if (i == pr) continue;
      Rational f = aug[static_cast<size_t>(i)][static_cast<size_t>(pc)];
      if (f == 0) continue;
      for (long j = pc; j <= cols_n; ++j)
        aug[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * aug[static_cast<size_t>(pr)][static_cast<size_t>(j)];
    }
    pivot_col_of_row.push_back(pc);
    ++pr;
  }
  for (long i = pr; i < rows_n; ++i)
    if (aug[static_cast<size_t>(i)][static_cast<size_t>(cols_n)] != 0) return std::nullopt;
  std::vector<Rational> sol(static_cast<size_t>(cols_n), Rational(0));
  for (long i = 0; i < pr; ++i)
    sol[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(i)])] =
        aug[static_cast<size_t>(i)][static_cast<size_t>(cols_n)];
  return CycNumber(target, std::move(sol));
}

CycNumber CycNumber::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return CycNumber(conductor_, std::move(c));
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  long l = lcm_ll(a.conductor_, b.conductor_);
  CycNumber x = a.embedded(l), y = b.embedded(l);
  for (size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
  return x;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  long l = lcm_ll(a.conductor_, b.conductor_);
  CycNumber x = a.embedded(l), y = b.embedded(l);
  auto ctx = get_context(l);
  const long phi = ctx->phi;
  std::vector<Rational> conv(static_cast<size_t>(2 * phi - 1), Rational(0));
  for (long i = 0; i < phi; ++i) {
    if (x.coeffs_[static_cast<size_t>(i)] == 0) continue;
    for (long j = 0; j < phi; ++j) {
      if (y.coeffs_[static_cast<size_t>(j)] == 0) continue;
      conv[static_cast<size_t>(i + j)] += x.coeffs_[static_cast<size_t>(i)] * y.coeffs_[static_cast<size_t>(j)];
    }
  }
  std::vector<Rational> out(static_cast<size_t>(phi), Rational(0));
  for (long t = 0; t < phi; ++t) out[static_cast<size_t>(t)] = conv[static_cast<size_t>(t)];
  for (long t = phi; t <= 2 * phi - 2; ++t) {
    if (conv[static_cast<size_t>(t)] == 0) continue;
    const auto& row = ctx->rows[static_cast<size_t>(t)];
    for (long j = 0; j < phi; ++j)
      out[static_cast<size_t>(j)] += conv[static_cast<size_t>(t)] * Rational(row[static_cast<size_t>(j)]);
  }
  return CycNumber(l, std::move(out));
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  if (auto r = as_rational()) return CycNumber(Rational(1 / *r)).embedded(conductor_);
  auto ctx = get_context(conductor_);
  std::vector<Rational> r0(ctx->cyclo.size());
  for (size_t j = 0; j < ctx->cyclo.size(); ++j) r0[j] = Rational(ctx->cyclo[j]);
  std::vector<Rational> r1 = coeffs_;
  trim_poly(r1);
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  std::vector<Rational> q;
  while (r1.size() > 1) {
    std::vector<Rational> r2 = poly_mod_q(r0, r1, &q);
    // s2 = s0 - q * s1
    std::vector<Rational> s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim_poly(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty())
    throw InternalError("inverse: gcd with the cyclotomic polynomial is not constant");
  Rational c = r1[0];
  std::vector<Rational> out(static_cast<size_t>(ctx->phi), Rational(0));
  for (size_t j = 0; j < s1.size(); ++j) out[j] = s1[j] / c;
  return CycNumber(conductor_, std::move(out));
}

CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

CycNumber CycNumber::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNumber base = *this;
  CycNumber acc(Rational(1));
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    base = base * base;
    exponent >>= 1;
  }
  return acc;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  long l = lcm_ll(a.conductor_, b.conductor_);
  return a.embedded(l).coeffs_ == b.embedded(l).coeffs_;
}

std::string CycNumber::to_string() const {
  if (auto r = as_rational()) return rational_str(*r);
  std::ostringstream out;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << rational_str(mag);
      continue;
    }
    if (mag != 1) out << rational_str(mag) << "*";
    out << "z" << conductor_;
    if (k >= 2) out << "^" << k;
  }
  if (first) return "0";
  return out.str();
}

namespace {

struct CycParser {
  const std::string& s;
  size_t i = 0;

  explicit CycParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }

  long parse_digits() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw InvalidInput("expected digits at position " + std::to_string(start) + " in '" + s + "'");
    return std::stol(s.substr(start, i - start));
  }

  Rational parse_number() {
    long num = parse_digits();
    if (eat('/')) {
      long den = parse_digits();
      return make_rational(num, den);
    }
    return Rational(num);
  }

  // zN or zN^k
  CycNumber parse_zpart() {
    ++i;  // 'z'
    long n = parse_digits();
    long k = 1;
    if (eat('^')) k = parse_digits();
    return CycNumber::root_of_unity(n, k);
  }

  CycNumber parse() {
    CycNumber total;
    bool expect_term = true;
    int sign = 1;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    while (true) {
      skip_ws();
      if (i >= s.size()) {
        if (expect_term) throw InvalidInput("dangling sign in '" + s + "'");
        break;
      }
      if (!expect_term) {
        if (s[i] == '+' || s[i] == '-') {
          sign = s[i] == '-' ? -1 : 1;
          ++i;
          expect_term = true;
          continue;
        }
        throw InvalidInput("unexpected character '" + std::string(1, s[i]) + "' in '" + s + "'");
      }
      CycNumber term;
      if (s[i] == 'z') {
        term = parse_zpart();
      } else {
        Rational coef = parse_number();
        skip_ws();
        if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
          if (s[i] == '*') ++i;
          skip_ws();
          if (i >= s.size() || s[i] != 'z')
            throw InvalidInput("expected root of unity after '*' in '" + s + "'");
          term = CycNumber(coef) * parse_zpart();
        } else {
          term = CycNumber(coef);
        }
      }
      if (sign < 0) term = -term;
      total = total + term;
      expect_term = false;
    }
    return total;
  }
};

}  // namespace

CycNumber parse_cyc(const std::string& text) {
  CycParser p(text);
  CycNumber v = p.parse();
  return v;
}

std::optional<long> as_root_power(const CycNumber& value, long order) {
  if (order <= 0) throw InvalidInput("as_root_power requires a positive order");
  for (long e = 0; e < order; ++e)
    if (value == CycNumber::root_of_unity(order, e)) return e;
  return std::nullopt;
}

}  // namespace gsc
