// JSON and CSV encodings for family records, census reports, and
// branched-curve input files. Every JSON form emitted here parses back
// losslessly; CSV is a flattened one-line-per-item projection.
#pragma once

#include <string>
#include <vector>

#include "gsc/census.hpp"
#include "gsc/moduli.hpp"
#include "gsc/superelliptic.hpp"
#include "gsc/uniqueness.hpp"

namespace gsc {

inline constexpr const char* kSchemaVersion = "1";

// A family together with its verdicts, as persisted by the command line
// tool.
struct FamilyRecord {
  GSFamily family;
  UniquenessVerdict uniqueness;
  DefinabilityVerdict field_of_moduli;
};

// Computes both verdicts for the family.
FamilyRecord make_family_record(GSFamily family);

std::string family_record_to_json(const FamilyRecord& record);
// Rejects unknown schema versions, malformed structure, and equation text
// that disagrees with its factor list.
FamilyRecord family_record_from_json(const std::string& text);

std::string family_record_csv_header();
std::string family_record_csv_row(const FamilyRecord& record);

// One census row: admissible branching data with its canonical exponent
// classes. The maximality marker records whether the quotient signature
// admits no extension in the finite inclusion table, which is the precise
// sense in which the rotation group is generically the full symmetry group.
struct CensusRow {
  SignatureTuple tuple;
  long genus = 0;
  bool maximal_quotient = true;
  long tuple_count = 0;  // raw exponent tuples before canonicalization
  std::vector<std::vector<long>> classes;  // canonical reps, lex order
};

std::vector<CensusRow> build_census_rows(long genus, long max_n = 0);

// One family per canonical class of the row, built with the plain rotation
// group: every class entry becomes a finite branch point, so infinity stays
// unbranched.
std::vector<GSFamily> census_row_families(const CensusRow& row);

// Family records for every canonical class of every row, in row-major
// order. Built across workers; the result is independent of the worker
// count.
std::vector<FamilyRecord> census_family_records(
    const std::vector<CensusRow>& rows);

std::string census_to_json(const std::vector<CensusRow>& rows,
                           bool with_families);
std::string census_to_csv(const std::vector<CensusRow>& rows);

// Branched-curve files for the isomorphism command, shaped like
// {"n": 4, "points": ["0", "1", "inf"], "exponents": [1, 1, 2]}.
// Parsing completes the data: a branch point at infinity is appended when
// the exponents do not sum to zero mod n.
BranchedCurve branched_curve_from_json(const std::string& text);
std::string branched_curve_to_json(const BranchedCurve& curve);

}  // namespace gsc
