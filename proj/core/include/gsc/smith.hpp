#pragma once
// Smith normal form over the integers, for the small relation matrices that
// arise when reading off abelian invariants of automorphism groups.

#include <vector>

#include "gsc/numeric.hpp"

namespace gsc {

// Diagonal of the Smith normal form of an integer matrix (any shape).  The
// returned entries are non-negative, each divides the next, and trailing
// zeros indicate free rank.  Length is min(rows, cols).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> mat);

// Invariant factors of the cokernel of a square-or-wider relation matrix:
// the Smith diagonal with unit entries dropped.  A zero entry means the
// presented group is infinite and raises InvalidInput.
std::vector<long> invariant_factors(const std::vector<std::vector<Integer>>& mat);

}  // namespace gsc
