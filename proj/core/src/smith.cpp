#include "gsc/smith.hpp"

#include <cstdlib>
#include <utility>

#include "gsc/error.hpp"

namespace gsc {

namespace {

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  for (const auto& r : m)
    if (r.size() != cols) throw InvalidInput("matrix rows have unequal lengths");

  std::vector<Integer> diag;
  const size_t bound = rows < cols ? rows : cols;
  size_t t = 0;
  while (t < bound) {
    // Locate the smallest nonzero entry of the trailing submatrix.
    bool found = false;
    size_t pi = t, pj = t;
    Integer best;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Integer a = abs_int(m[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;  // the rest of the diagonal is zero
    std::swap(m[t], m[pi]);
    for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    // Clear the pivot row and column; restart whenever a remainder shrinks
    // below the pivot so the smallest entry always ends up at (t, t).
    bool dirty = false;
    for (size_t i = t + 1; i < rows && !dirty; ++i) {
      if (m[i][t] == 0) continue;
      Integer q = m[i][t] / m[t][t];
      for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) dirty = true;
    }
    if (dirty) continue;
    for (size_t j = t + 1; j < cols && !dirty; ++j) {
      if (m[t][j] == 0) continue;
      Integer q = m[t][j] / m[t][t];
      for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) dirty = true;
    }
    if (dirty) continue;

    // Enforce that the pivot divides every remaining entry.
    bool fixed = false;
    for (size_t i = t + 1; i < rows && !fixed; ++i)
      for (size_t j = t + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          fixed = true;
        }
    if (fixed) continue;

    diag.push_back(abs_int(m[t][t]));
    ++t;
  }
  while (diag.size() < bound) diag.push_back(Integer(0));
  return diag;
}

std::vector<long> invariant_factors(const std::vector<std::vector<Integer>>& mat) {
  const size_t cols = mat.empty() ? 0 : mat[0].size();
  std::vector<Integer> diag = smith_diagonal(mat);
  while (diag.size() < cols) diag.push_back(Integer(0));  // free generators
  std::vector<long> out;
  for (const Integer& d : diag) {
    if (d == 0) throw InvalidInput("relation matrix presents an infinite group");
    if (d == 1) continue;
    if (!d.fits_slong_p()) throw InternalError("invariant factor out of range");
    out.push_back(d.get_si());
  }
  return out;
}

}  // namespace gsc
