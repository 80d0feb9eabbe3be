#include "gsc/singerman.hpp"

#include <algorithm>
#include <set>

namespace gsc {

namespace {

// A pattern entry is either a constant order or coeff * t_var for one of two
// integer parameters (var 1 or 2) ranging over values >= 2.
struct Term {
  long coeff;
  int var;  // 0 = constant
};

constexpr Term C(long k) { return {k, 0}; }
constexpr Term T1(long k = 1) { return {k, 1}; }
constexpr Term T2(long k = 1) { return {k, 2}; }

struct Row {
  long sub_genus;
  std::vector<Term> sub;
  std::vector<Term> super;  // supergroup genus is always zero
  long index;
  bool normal;
};

const std::vector<Row>& table() {
  static const std::vector<Row> rows = {
      // Normal inclusions.
      {2, {}, {C(2), C(2), C(2), C(2), C(2), C(2)}, 2, true},
      {1, {T1(), T1()}, {C(2), C(2), C(2), C(2), T1()}, 2, true},
      {1, {T1()}, {C(2), C(2), C(2), T1(2)}, 2, true},
      {0, {T1(), T1(), T1(), T1()}, {C(2), C(2), C(2), T1()}, 4, true},
      {0, {T1(), T1(), T2(), T2()}, {C(2), C(2), T1(), T2()}, 2, true},
      {0, {T1(), T1(), T1()}, {C(3), C(3), T1()}, 3, true},
      {0, {T1(), T1(), T1()}, {C(2), C(3), T1(2)}, 6, true},
      {0, {T1(), T1(), T2()}, {C(2), T1(), T2(2)}, 2, true},
      // Sporadic non-normal inclusions.
      {0, {C(7), C(7), C(7)}, {C(2), C(3), C(7)}, 24, false},
      {0, {C(2), C(7), C(7)}, {C(2), C(3), C(7)}, 9, false},
      {0, {C(3), C(3), C(7)}, {C(2), C(3), C(7)}, 8, false},
      {0, {C(4), C(8), C(8)}, {C(2), C(3), C(8)}, 12, false},
      {0, {C(3), C(8), C(8)}, {C(2), C(3), C(8)}, 10, false},
      {0, {C(9), C(9), C(9)}, {C(2), C(3), C(9)}, 12, false},
      {0, {C(4), C(4), C(5)}, {C(2), C(4), C(5)}, 6, false},
      // Parametrized non-normal inclusions.
      {0, {T1(), T1(4), T1(4)}, {C(2), C(3), T1(4)}, 6, false},
      {0, {T1(), T1(2), T1(2)}, {C(2), C(4), T1(2)}, 4, false},
      {0, {C(3), T1(), T1(3)}, {C(2), C(3), T1(3)}, 4, false},
      {0, {C(2), T1(), T1(2)}, {C(2), C(3), T1(2)}, 3, false},
  };
  return rows;
}

// Try to assign the multiset of query orders to the slots of a pattern,
// collecting every consistent (t1, t2) binding.
void match_slots(const std::vector<Term>& slots, size_t idx,
                 std::vector<long>& avail, std::vector<bool>& used,
                 long t1, long t2, std::set<std::pair<long, long>>& out) {
  if (idx == slots.size()) {
    out.emplace(t1, t2);
    return;
  }
  const Term& slot = slots[idx];
  long last = -1;
  for (size_t i = 0; i < avail.size(); ++i) {
    if (used[i] || avail[i] == last) continue;
    long v = avail[i];
    if (slot.var == 0) {
      if (v != slot.coeff) continue;
    } else {
      long& bound = slot.var == 1 ? t1 : t2;
      if (bound != 0) {
        if (v != slot.coeff * bound) continue;
      } else {
        if (v % slot.coeff != 0 || v / slot.coeff < 2) continue;
      }
    }
    last = v;
    long nt1 = t1, nt2 = t2;
    if (slot.var == 1 && t1 == 0) nt1 = v / slot.coeff;
    if (slot.var == 2 && t2 == 0) nt2 = v / slot.coeff;
    used[i] = true;
    match_slots(slots, idx + 1, avail, used, nt1, nt2, out);
    used[i] = false;
  }
}

}  // namespace

std::vector<SingermanInclusion> singerman_inclusions(const Signature& sig) {
  if (sig.area() <= 0)
    throw InvalidInput("signature inclusions are defined for hyperbolic signatures only");
  std::vector<SingermanInclusion> result;
  for (const Row& row : table()) {
    if (sig.genus != row.sub_genus) continue;
    if (sig.orders.size() != row.sub.size()) continue;
    std::vector<long> avail = sig.orders;  // already sorted
    std::vector<bool> used(avail.size(), false);
    std::set<std::pair<long, long>> bindings;
    match_slots(row.sub, 0, avail, used, 0, 0, bindings);
    for (const auto& [t1, t2] : bindings) {
      std::vector<long> super_orders;
      super_orders.reserve(row.super.size());
      for (const Term& term : row.super)
        super_orders.push_back(term.var == 0 ? term.coeff
                               : term.var == 1 ? term.coeff * t1
                                               : term.coeff * t2);
      SingermanInclusion inc{make_signature(0, std::move(super_orders)), row.index,
                             row.normal};
      if (sig.area() != inc.index * inc.super.area())
        throw InternalError("inclusion table area bookkeeping failed for " +
                            sig.to_string() + " in " + inc.super.to_string());
      if (std::find(result.begin(), result.end(), inc) == result.end())
        result.push_back(std::move(inc));
    }
  }
  return result;
}

}  // namespace gsc
