// Decides when a family's curves descend to their field of moduli, using the
// sufficient conditions attached to triangle quotients, unique rotation
// subgroups with a large reduced group, and odd-signature quotients.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsc/superelliptic.hpp"
#include "gsc/uniqueness.hpp"

namespace gsc {

enum class Definability { Definable, Undetermined };

enum class DefinabilityRule {
  TrivialAutomorphisms,
  Quasiplatonic,
  NonCyclicReduced,
  OddSignature,
};

// Stable lowercase identifier for serialization and reporting.
std::string rule_token(DefinabilityRule rule);

struct DefinabilityVerdict {
  Definability status = Definability::Undetermined;
  std::optional<DefinabilityRule> rule;  // present exactly when Definable
  std::string detail;
};

// Applies the sufficient descent conditions in a fixed order: a genus-zero
// full quotient with exactly three cone points; a unique rotation subgroup
// whose reduced group is neither trivial nor cyclic; and an odd-signature
// full quotient when the reduced group is trivial or cyclic. Families that
// match none of them stay Undetermined; no heuristic fills the gap.
DefinabilityVerdict definability_verdict(const GSFamily& family,
                                         const UniquenessVerdict& uniqueness);

// The verdict for a curve whose full automorphism group the caller asserts
// to be trivial. The assertion is not checked, and it never holds for a
// family built here, whose curves all carry the vertical rotation.
DefinabilityVerdict trivial_automorphisms_verdict();

struct DefinabilitySummary {
  long quasiplatonic = 0;
  long non_cyclic_reduced = 0;
  long odd_signature = 0;
  std::vector<std::size_t> undetermined;  // indices into the input list
};

// Tallies verdicts for a batch of families, deriving each family's
// uniqueness verdict along the way.
DefinabilitySummary census_definability_summary(
    const std::vector<GSFamily>& families);

}  // namespace gsc
