// Acceptance checks for the library and the command line tool. Each check
// prints one [PASS] or [FAIL] line with its elapsed time; a check fails on
// a wrong value, an unexpected exception, or a blown time budget.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsc/census.hpp"
#include "gsc/error.hpp"
#include "gsc/moduli.hpp"
#include "gsc/numeric.hpp"
#include "gsc/platonic.hpp"
#include "gsc/serialize.hpp"
#include "gsc/signature.hpp"
#include "gsc/superelliptic.hpp"
#include "gsc/uniqueness.hpp"

namespace {

using namespace gsc;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure(message);
}

// Runs the tool with the given arguments and returns its stdout; fails the
// check when the process exits nonzero.
std::string run_tool(const std::string& args) {
  std::string command = std::string("\"") + GSC_TOOL_PATH + "\" " + args;
  FILE* pipe = popen(command.c_str(), "r");
  require(pipe != nullptr, "could not start " + command);
  std::string output;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    output.append(buffer, got);
  int status = pclose(pipe);
  require(status == 0, command + " exited with status " +
                           std::to_string(status));
  return output;
}

// Exhaustive existence oracle: is there an exponent tuple whose entries
// have exactly the requested additive orders, sum to zero mod n, and
// generate Z/n?
bool exponent_tuple_exists(long n, const std::vector<long>& orders) {
  std::vector<std::vector<long>> choices;
  for (long m : orders) {
    std::vector<long> residues;
    for (long l = 1; l < n; ++l)
      if (n / std::gcd(n, l) == m) residues.push_back(l);
    if (residues.empty()) return false;
    choices.push_back(std::move(residues));
  }
  std::vector<std::size_t> idx(orders.size(), 0);
  while (true) {
    long sum = 0;
    long common = n;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      long l = choices[j][idx[j]];
      sum = (sum + l) % n;
      common = std::gcd(common, l);
    }
    if (sum == 0 && common == 1) return true;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == choices[j].size()) {
      idx[j] = 0;
      ++j;
    }
    if (j == idx.size()) return false;
  }
}

// Genus from the Riemann-Hurwitz formula for a group of the given order
// acting with this quotient signature; fails when the result is not an
// integer.
long hurwitz_genus(const Signature& sig, long group_order) {
  Rational g = 1 + Rational(group_order) * sig.area() / 2;
  require(g.get_den() == 1, "Riemann-Hurwitz genus is not an integer for " +
                                sig.to_string());
  return static_cast<long>(g.get_num().get_si());
}

void check_genus_17_family() {
  std::string out =
      run_tool("family --group cyclic:4 --n 4 --l0 2 --exponents 1,1,1");
  FamilyRecord record = family_record_from_json(out);
  require(record.family.genus == 17,
          "expected genus 17, got " + std::to_string(record.family.genus));
  std::vector<long> invariants = abelian_invariants(record.family.presentation);
  require(invariants == std::vector<long>{2, 8},
          "expected abelian invariants [2, 8]");
}

void check_harvey_oracle() {
  long cases = 0;
  for (long n = 2; n <= 12; ++n) {
    std::vector<long> divisors;
    for (long d = 2; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    for (std::size_t size = 3; size <= 5; ++size) {
      std::vector<std::size_t> pick(size, 0);
      while (true) {
        std::vector<long> orders;
        for (std::size_t j = 0; j < size; ++j) orders.push_back(divisors[pick[j]]);
        bool predicted = harvey_check(n, orders);
        bool exists = exponent_tuple_exists(n, orders);
        if (predicted != exists) {
          std::ostringstream what;
          what << "mismatch at n=" << n << " orders";
          for (long m : orders) what << ' ' << m;
          what << ": predicted " << predicted << ", oracle " << exists;
          throw CheckFailure(what.str());
        }
        ++cases;
        // next nondecreasing index tuple
        std::size_t j = size;
        while (j > 0 && pick[j - 1] == divisors.size() - 1) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t k = j; k < size; ++k) pick[k] = pick[j - 1];
      }
    }
  }
  require(cases == 414, "expected 414 order multisets, covered " +
                            std::to_string(cases));
}

void check_genus_two_census() {
  const std::vector<SignatureTuple> golden = {
      {2, {2, 2, 2, 2, 2, 2}}, {3, {3, 3, 3, 3}}, {4, {2, 2, 4, 4}},
      {5, {5, 5, 5}},          {6, {2, 2, 3, 3}}, {6, {3, 6, 6}},
      {8, {2, 8, 8}},          {10, {2, 5, 10}}};
  std::vector<SignatureTuple> tuples = enumerate_families(2);
  require(tuples == golden, "genus-2 branching data does not match the "
                            "expected eight tuples");
  for (const SignatureTuple& st : tuples) {
    require(harvey_check(st.n, st.orders),
            "tuple fails its own admissibility check");
    std::vector<std::vector<long>> exps = enumerate_exponents(st);
    require(!exps.empty(), "tuple has no exponent tuples");
    for (const std::vector<long>& e : exps)
      require(genus_of_tuple(st, e) == 2, "exponent tuple of wrong genus");
  }
}

void check_equivariance() {
  for (PlatonicKind kind : {PlatonicKind::Tetrahedral, PlatonicKind::Octahedral,
                            PlatonicKind::Icosahedral}) {
    EquivarianceReport report = verify_equivariance(kind);
    require(!report.identities.empty(), "empty identity list");
    for (const EquivarianceIdentity& identity : report.identities)
      require(identity.holds, platonic_data(kind).name + " identity '" +
                                  identity.name + "' fails: " +
                                  identity.detail);
  }
  EquivarianceReport icosa = verify_equivariance(PlatonicKind::Icosahedral);
  for (const char* name : {"r3_under_a", "b_transport"}) {
    bool found = std::any_of(
        icosa.identities.begin(), icosa.identities.end(),
        [&](const EquivarianceIdentity& id) { return id.name == name; });
    require(found, std::string("icosahedral report misses ") + name);
  }
}

void check_genus_bookkeeping() {
  std::mt19937 rng(20260825);
  auto pick = [&rng](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  const std::array<ReducedKind, 5> kinds = {
      ReducedKind::Cyclic, ReducedKind::Dihedral, ReducedKind::Tetrahedral,
      ReducedKind::Octahedral, ReducedKind::Icosahedral};
  long with_warnings = 0;
  for (ReducedKind kind : kinds) {
    long built = 0;
    for (long attempt = 0; attempt < 40000 && built < 40; ++attempt) {
      ReducedGroup reduced{kind, 1};
      bool platonic = kind != ReducedKind::Cyclic && kind != ReducedKind::Dihedral;
      if (!platonic) reduced.m = pick(2, 5);
      long n = platonic ? pick(2, 6) : pick(2, 8);
      long l0 = platonic ? 0 : pick(0, n - 1);
      std::size_t special_count =
          kind == ReducedKind::Cyclic ? 0
          : kind == ReducedKind::Dihedral ? 2
          : kind == ReducedKind::Tetrahedral ? 2
                                             : 3;
      std::vector<long> special;
      for (std::size_t j = 0; j < special_count; ++j)
        special.push_back(pick(0, n - 1));
      std::vector<long> orbit;
      long orbit_count = pick(0, platonic ? 1 : 2);
      for (long j = 0; j < orbit_count; ++j) orbit.push_back(pick(1, n - 1));
      GSFamily fam;
      try {
        fam = build_family(n, reduced, l0, orbit, special);
      } catch (const InvalidInput&) {
        continue;
      }
      ++built;
      with_warnings += fam.warnings.empty() ? 0 : 1;
      require(hurwitz_genus(fam.rotation_quotient, fam.n) == fam.genus,
              "rotation-quotient genus disagrees for " +
                  fam.equation.to_string());
      require(hurwitz_genus(fam.full_quotient,
                            fam.n * fam.reduced.order()) == fam.genus,
              "full-quotient genus disagrees for " + fam.equation.to_string());
    }
    require(built == 40, "could not build 40 random " +
                             ReducedGroup{kind, 2}.display_name() +
                             " families");
  }
}

void check_exceptional_pipeline() {
  GSFamily fam = build_family(4, ReducedGroup::parse("cyclic:2"), 2, {1, 2});
  std::optional<ExceptionalShape> shape = match_exceptional_shape(fam.equation);
  require(shape.has_value(), "half-level shape not recognized");
  require(shape->d == 2, "wrong half level");
  ExceptionalAnalysis analysis = analyze_exceptional(*shape);
  require(preserves_equation(analysis.normalized_equation,
                             analysis.eta.moebius, analysis.eta.multiplier),
          "the extra symmetry does not preserve the curve");
  require(analysis.invariants == std::vector<long>{2, 4},
          "extension is not C2 x C4");
  require(analysis.genus == 3, "expected genus 3");
  UniquenessVerdict verdict = uniqueness_verdict(fam);
  require(verdict.status == Uniqueness::PossiblyNonUnique,
          "verdict should leave uniqueness open");
}

void check_canonical_orbits() {
  std::mt19937 rng(7);
  auto pick = [&rng](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    long n = 0;
    std::vector<long> exps;
    // Re-pick everything when the closing exponent lands on zero; some
    // (n, size) combinations admit no completion at all.
    while (exps.empty()) {
      n = pick(2, 20);
      std::size_t size = static_cast<std::size_t>(pick(3, 6));
      long sum = 0;
      std::vector<long> draft;
      for (std::size_t j = 0; j + 1 < size; ++j) {
        draft.push_back(pick(1, n - 1));
        sum = (sum + draft.back()) % n;
      }
      long last = (n - sum) % n;
      if (last == 0) continue;
      draft.push_back(last);
      exps = std::move(draft);
    }
    std::vector<long> canonical = canonical_exponent_form(n, exps);
    for (int action = 0; action < 20; ++action) {
      long unit = 1;
      do {
        unit = pick(1, n - 1);
      } while (std::gcd(unit, n) != 1);
      std::vector<long> moved;
      for (long l : exps) moved.push_back((unit * l) % n);
      std::shuffle(moved.begin(), moved.end(), rng);
      require(canonical_exponent_form(n, moved) == canonical,
              "canonical form moved under a unit-permutation action at n=" +
                  std::to_string(n));
    }
  }
}

void check_definability_partition() {
  for (long genus : {2L, 3L}) {
    std::vector<FamilyRecord> records =
        census_family_records(build_census_rows(genus));
    require(!records.empty(), "empty census");
    if (genus == 2)
      require(records.size() == 8, "expected eight genus-2 classes");
    for (const FamilyRecord& record : records) {
      bool unique = record.uniqueness.status == Uniqueness::Unique;
      bool open = record.uniqueness.status == Uniqueness::PossiblyNonUnique;
      require(unique != open, "uniqueness verdict must be exactly one status");
      bool definable =
          record.field_of_moduli.status == Definability::Definable;
      require(definable == record.field_of_moduli.rule.has_value(),
              "definability rule must be present exactly for definable "
              "families");
      const Signature& sig_g = record.family.full_quotient;
      if (sig_g.genus == 0 && sig_g.orders.size() == 3)
        require(definable && *record.field_of_moduli.rule ==
                                 DefinabilityRule::Quasiplatonic,
                "triangle quotient must be definable as quasiplatonic");
      if (record.family.n % 2 == 1)
        require(unique, "odd rotation order must pin the rotation subgroup");
    }
  }
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"genus-17 family via the command line", 1.0, check_genus_17_family},
      {"admissibility test matches the exhaustive oracle", 30.0,
       check_harvey_oracle},
      {"genus-2 census lists the eight branching data", 5.0,
       check_genus_two_census},
      {"ground-form equivariance identities all hold", 10.0,
       check_equivariance},
      {"random families balance the genus books", 60.0,
       check_genus_bookkeeping},
      {"half-level exceptional pipeline", 1.0, check_exceptional_pipeline},
      {"canonical exponent form is orbit-invariant", 30.0,
       check_canonical_orbits},
      {"definability partition of the small censuses", 60.0,
       check_definability_partition},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      criterion.check();
    } catch (const std::exception& e) {
      problem = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (problem.empty() && elapsed > criterion.budget_seconds) {
      std::ostringstream what;
      what << "exceeded the " << criterion.budget_seconds << " s budget";
      problem = what.str();
    }
    std::ostringstream line;
    line << (problem.empty() ? "[PASS] " : "[FAIL] ") << (i + 1) << ". "
         << criterion.name;
    if (!problem.empty()) line << ": " << problem;
    line << " (" << std::fixed;
    line.precision(2);
    line << elapsed << " s)";
    std::cout << line.str() << std::endl;
    if (!problem.empty()) ++failures;
  }
  if (failures) {
    std::cout << failures << " of " << criteria.size() << " checks failed"
              << std::endl;
    return 1;
  }
  std::cout << "all " << criteria.size() << " checks passed" << std::endl;
  return 0;
}
