#pragma once
// The finite list of Fuchsian signature inclusions with genus-zero
// supergroups: which signatures always sit inside a larger triangle or
// quadrilateral group, with the index and whether the inclusion is normal.
// A signature admitting no inclusion is maximal, meaning a surface group
// with that quotient signature generically has no extra automorphisms.

#include <vector>

#include "gsc/signature.hpp"

namespace gsc {

struct SingermanInclusion {
  Signature super;
  long index = 1;
  bool normal = true;

  friend bool operator==(const SingermanInclusion& a, const SingermanInclusion& b) {
    return a.super == b.super && a.index == b.index && a.normal == b.normal;
  }
};

// All table inclusions whose subgroup signature matches sig, in table order
// with parameter bindings ascending.  Requires area(sig) > 0.
std::vector<SingermanInclusion> singerman_inclusions(const Signature& sig);

inline bool is_maximal_signature(const Signature& sig) {
  return singerman_inclusions(sig).empty();
}

}  // namespace gsc
