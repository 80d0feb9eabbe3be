// Persistence formats: lossless JSON round trips for family records, the
// census encodings, CSV projections, and branched-curve files.
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>

#include "gsc/error.hpp"
#include "gsc/serialize.hpp"

using namespace gsc;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("family records round-trip through JSON byte for byte") {
  FamilyRecord record = make_family_record(
      build_family(4, ReducedGroup::parse("cyclic:4"), 2, {1, 1, 1}));
  std::string encoded = family_record_to_json(record);

  FamilyRecord parsed = family_record_from_json(encoded);
  CHECK(family_record_to_json(parsed) == encoded);

  CHECK(parsed.family.genus == 17);
  CHECK(parsed.family.reduced == record.family.reduced);
  CHECK(parsed.family.equation.to_string() ==
        "y^4 = x^2 * (x^4 - 1) * (x^4 - 16) * (x^4 - 81)");
  REQUIRE(parsed.family.presentation.generators.size() == 1);
  CHECK(parsed.family.presentation.generators[0].multiplier.as_constant() ==
        CycNumber::root_of_unity(16, 2));
  REQUIRE(parsed.family.warnings.size() == 1);
  CHECK(parsed.uniqueness.rule == "non_exceptional_shape");
  REQUIRE(parsed.field_of_moduli.rule.has_value());
  CHECK(*parsed.field_of_moduli.rule == DefinabilityRule::OddSignature);
}

TEST_CASE("nested exceptional analyses survive the round trip") {
  FamilyRecord record = make_family_record(
      build_family(4, ReducedGroup::parse("cyclic:2"), 2, {1, 2}));
  std::string encoded = family_record_to_json(record);
  FamilyRecord parsed = family_record_from_json(encoded);

  CHECK(family_record_to_json(parsed) == encoded);
  REQUIRE(parsed.uniqueness.exceptional.has_value());
  const ExceptionalAnalysis& a = *parsed.uniqueness.exceptional;
  CHECK(a.genus == 3);
  CHECK(a.invariants == std::vector<long>{2, 4});
  CHECK(a.eta.moebius == MoebiusMap::negation());
  CHECK(a.normalized_equation.to_string() ==
        record.family.equation.to_string());
}

TEST_CASE("unknown multipliers and null shortcuts serialize cleanly") {
  FamilyRecord record = make_family_record(
      build_family(2, ReducedGroup::parse("icosahedral"), 0, {}, {0, 0, 1}));
  std::string encoded = family_record_to_json(record);
  FamilyRecord parsed = family_record_from_json(encoded);

  CHECK(family_record_to_json(parsed) == encoded);
  bool saw_unknown = false;
  for (const AutGenerator& gen : parsed.family.presentation.generators)
    if (!gen.multiplier_known) saw_unknown = true;
  CHECK(saw_unknown);
}

TEST_CASE("malformed family documents are rejected") {
  CHECK_THROWS_AS(family_record_from_json("{"), InvalidInput);
  CHECK_THROWS_AS(family_record_from_json("{\"schema_version\": \"1\"}"),
                  InvalidInput);

  FamilyRecord record = make_family_record(
      build_family(4, ReducedGroup::parse("cyclic:4"), 2, {1, 1, 1}));
  std::string encoded = family_record_to_json(record);

  std::string wrong_version = encoded;
  wrong_version.replace(wrong_version.find("\"1\""), 3, "\"9\"");
  CHECK_THROWS_AS(family_record_from_json(wrong_version), InvalidInput);

  std::string tampered = encoded;
  tampered.replace(tampered.find("x^4 - 16"), 8, "x^4 - 17");
  CHECK_THROWS_AS(family_record_from_json(tampered), InvalidInput);
}

TEST_CASE("family CSV rows stay aligned with the header") {
  FamilyRecord record = make_family_record(
      build_family(4, ReducedGroup::parse("cyclic:4"), 2, {1, 1, 1}));
  auto header = split_csv_line(family_record_csv_header());
  auto row = split_csv_line(family_record_csv_row(record));
  REQUIRE(header.size() == row.size());

  CHECK(row[0] == "4");
  CHECK(row[1] == "cyclic:4");
  CHECK(row[6] == "17");
  CHECK(row[8] == "(0; 4,4,4,8,8)");
  CHECK(row[9] == "unique");
  CHECK(row[11] == "definable");
  CHECK(row[12] == "odd_signature");
  CHECK(row[14] == record.family.equation.to_string());
}

TEST_CASE("the genus-two census rows carry one canonical class each") {
  auto rows = build_census_rows(2);
  REQUIRE(rows.size() == 8);

  std::vector<long> ns, tuple_counts;
  for (const CensusRow& row : rows) {
    ns.push_back(row.tuple.n);
    tuple_counts.push_back(row.tuple_count);
    CHECK(row.genus == 2);
    CHECK(row.classes.size() == 1);
  }
  CHECK(ns == std::vector<long>{2, 3, 4, 5, 6, 6, 8, 10});
  CHECK(tuple_counts == std::vector<long>{1, 6, 2, 12, 2, 2, 4, 4});

  CHECK(rows[2].classes[0] == std::vector<long>{2, 2, 1, 3});
  CHECK(rows[3].classes[0] == std::vector<long>{1, 1, 3});
  CHECK(rows[6].classes[0] == std::vector<long>{4, 1, 3});
  CHECK(rows[7].classes[0] == std::vector<long>{5, 2, 3});
}

TEST_CASE("census families rebuild the rows with the plain rotation group") {
  auto rows = build_census_rows(2);
  std::size_t total = 0;
  for (const CensusRow& row : rows) {
    for (const GSFamily& fam : census_row_families(row)) {
      ++total;
      CHECK(fam.genus == 2);
      CHECK(fam.n == row.tuple.n);
      CHECK(fam.reduced.kind == ReducedKind::Trivial);
      CHECK(fam.rotation_quotient == row.tuple.quotient_signature());
      CHECK(fam.full_quotient == fam.rotation_quotient);
    }
  }
  CHECK(total == 8);
}

TEST_CASE("census family records keep row-major order across worker counts") {
  auto rows = build_census_rows(2);

  std::vector<std::string> expected;
  for (const CensusRow& row : rows)
    for (GSFamily& fam : census_row_families(row))
      expected.push_back(
          family_record_to_json(make_family_record(std::move(fam))));
  REQUIRE(expected.size() == 8);

  auto snapshot = [&rows] {
    std::vector<std::string> out;
    for (const FamilyRecord& record : census_family_records(rows))
      out.push_back(family_record_to_json(record));
    return out;
  };

  setenv("GSC_MAX_WORKERS", "1", 1);
  CHECK(snapshot() == expected);
  setenv("GSC_MAX_WORKERS", "4", 1);
  CHECK(snapshot() == expected);
  unsetenv("GSC_MAX_WORKERS");
  CHECK(snapshot() == expected);
}

TEST_CASE("census CSV and JSON agree row by row") {
  auto rows = build_census_rows(2);
  auto csv_lines = split_lines(census_to_csv(rows));
  REQUIRE(csv_lines.size() == 9);

  nlohmann::json parsed = nlohmann::json::parse(census_to_json(rows, true));
  CHECK(parsed.at("schema_version") == "1");
  REQUIRE(parsed.at("rows").size() == 8);

  for (std::size_t i = 0; i < 8; ++i) {
    const auto& jrow = parsed.at("rows")[i];
    auto fields = split_csv_line(csv_lines[i + 1]);
    REQUIRE(fields.size() == 6);
    CHECK(std::to_string(jrow.at("n").get<long>()) == fields[0]);

    std::string orders;
    for (long m : jrow.at("orders").get<std::vector<long>>()) {
      if (!orders.empty()) orders += " ";
      orders += std::to_string(m);
    }
    CHECK(orders == fields[1]);

    std::string classes;
    for (const auto& cls : jrow.at("classes")) {
      if (!classes.empty()) classes += "|";
      for (std::size_t k = 0; k < cls.size(); ++k) {
        if (k) classes += " ";
        classes += std::to_string(cls[k].get<long>());
      }
    }
    CHECK(classes == fields[5]);

    REQUIRE(jrow.at("families").size() == jrow.at("classes").size());
    FamilyRecord embedded =
        family_record_from_json(jrow.at("families")[0].dump(2));
    CHECK(embedded.family.n == jrow.at("n").get<long>());
    CHECK(embedded.family.genus == 2);
  }
}

TEST_CASE("branched-curve files parse, complete, and round-trip") {
  BranchedCurve curve = branched_curve_from_json(
      R"({"n": 4, "points": ["0", "1", "inf"], "exponents": [1, 1, 2]})");
  CHECK(curve.n == 4);
  REQUIRE(curve.points.size() == 3);
  CHECK(curve.points[2].infinite);
  CHECK(curve.exponents == std::vector<long>{1, 1, 2});

  std::string encoded = branched_curve_to_json(curve);
  BranchedCurve reparsed = branched_curve_from_json(encoded);
  CHECK(branched_curve_to_json(reparsed) == encoded);

  BranchedCurve completed = branched_curve_from_json(
      R"({"n": 4, "points": ["0", "1"], "exponents": [1, 1]})");
  REQUIRE(completed.points.size() == 3);
  CHECK(completed.points[2].infinite);
  CHECK(completed.exponents == std::vector<long>{1, 1, 2});

  CHECK_THROWS_AS(branched_curve_from_json("[1, 2"), InvalidInput);
  CHECK_THROWS_AS(branched_curve_from_json(
                      R"({"n": 4, "points": ["0", "0", "1"],
                          "exponents": [1, 1, 2]})"),
                  InvalidInput);
  CHECK_THROWS_AS(branched_curve_from_json(R"({"n": 4, "points": ["0"]})"),
                  InvalidInput);
}
