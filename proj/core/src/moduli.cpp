// Descent decision rules over the field of moduli.

#include "gsc/moduli.hpp"

#include "gsc/error.hpp"
#include "gsc/signature.hpp"

namespace gsc {

std::string rule_token(DefinabilityRule rule) {
  switch (rule) {
    case DefinabilityRule::TrivialAutomorphisms:
      return "trivial_automorphisms";
    case DefinabilityRule::Quasiplatonic:
      return "quasiplatonic";
    case DefinabilityRule::NonCyclicReduced:
      return "non_cyclic_reduced";
    case DefinabilityRule::OddSignature:
      return "odd_signature";
  }
  throw InternalError("unhandled definability rule");
}

DefinabilityVerdict definability_verdict(const GSFamily& family,
                                         const UniquenessVerdict& uniqueness) {
  DefinabilityVerdict verdict;
  const Signature& quotient = family.full_quotient;

  if (quotient.genus == 0 && quotient.orders.size() == 3) {
    verdict.status = Definability::Definable;
    verdict.rule = DefinabilityRule::Quasiplatonic;
    verdict.detail = "the full quotient " + quotient.to_string() +
                     " is a triangle orbifold, so the family is rigid and "
                     "quasiplatonic";
    return verdict;
  }

  ReducedKind kind = family.reduced.kind;
  bool small_reduced =
      kind == ReducedKind::Trivial || kind == ReducedKind::Cyclic;
  if (!small_reduced && uniqueness.status == Uniqueness::Unique) {
    verdict.status = Definability::Definable;
    verdict.rule = DefinabilityRule::NonCyclicReduced;
    verdict.detail = "the rotation subgroup is unique (" + uniqueness.rule +
                     ") and the reduced group " +
                     family.reduced.display_name() +
                     " is neither trivial nor cyclic";
    return verdict;
  }

  if (small_reduced && is_odd_signature(quotient)) {
    verdict.status = Definability::Definable;
    verdict.rule = DefinabilityRule::OddSignature;
    verdict.detail = "the reduced group " + family.reduced.display_name() +
                     " is small and some cone order of " +
                     quotient.to_string() +
                     " appears an odd number of times";
    return verdict;
  }

  verdict.detail = "no sufficient descent condition applies";
  return verdict;
}

DefinabilityVerdict trivial_automorphisms_verdict() {
  DefinabilityVerdict verdict;
  verdict.status = Definability::Definable;
  verdict.rule = DefinabilityRule::TrivialAutomorphisms;
  verdict.detail =
      "a curve with trivial automorphism group descends to its field of "
      "moduli; the triviality is the caller's assertion";
  return verdict;
}

DefinabilitySummary census_definability_summary(
    const std::vector<GSFamily>& families) {
  DefinabilitySummary summary;
  for (std::size_t i = 0; i < families.size(); ++i) {
    DefinabilityVerdict verdict =
        definability_verdict(families[i], uniqueness_verdict(families[i]));
    if (verdict.status == Definability::Undetermined) {
      summary.undetermined.push_back(i);
      continue;
    }
    switch (*verdict.rule) {
      case DefinabilityRule::Quasiplatonic:
        ++summary.quasiplatonic;
        break;
      case DefinabilityRule::NonCyclicReduced:
        ++summary.non_cyclic_reduced;
        break;
      case DefinabilityRule::OddSignature:
        ++summary.odd_signature;
        break;
      case DefinabilityRule::TrivialAutomorphisms:
        throw InternalError(
            "family verdicts never assert trivial automorphisms");
    }
  }
  return summary;
}

}  // namespace gsc
