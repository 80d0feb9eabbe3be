// Encoding and decoding of the persistent JSON and CSV formats.

#include "gsc/serialize.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "gsc/error.hpp"
#include "gsc/parallel.hpp"
#include "gsc/singerman.hpp"

namespace gsc {

namespace {

using Json = nlohmann::ordered_json;

Json cyc_to_json(const CycNumber& value) { return value.to_string(); }

CycNumber cyc_from_json(const Json& j) {
  return parse_cyc(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const CycNumber& c : p.coefficients()) coeffs.push_back(cyc_to_json(c));
  return coeffs;
}

Poly poly_from_json(const Json& j) {
  std::vector<CycNumber> coeffs;
  for (const Json& c : j) coeffs.push_back(cyc_from_json(c));
  return Poly(std::move(coeffs));
}

Json signature_to_json(const Signature& sig) {
  return Json{{"genus", sig.genus}, {"orders", sig.orders}};
}

Signature signature_from_json(const Json& j) {
  return make_signature(j.at("genus").get<long>(),
                        j.at("orders").get<std::vector<long>>());
}

Json moebius_to_json(const MoebiusMap& m) {
  return Json::array({cyc_to_json(m.a()), cyc_to_json(m.b()),
                      cyc_to_json(m.c()), cyc_to_json(m.d())});
}

MoebiusMap moebius_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InvalidInput("a Moebius map needs exactly four matrix entries");
  return MoebiusMap(cyc_from_json(j[0]), cyc_from_json(j[1]),
                    cyc_from_json(j[2]), cyc_from_json(j[3]));
}

Json multiplier_to_json(const FactoredMultiplier& mult) {
  Json factors = Json::array();
  for (const auto& [base, exponent] : mult.factors())
    factors.push_back(
        {{"coefficients", poly_to_json(base)}, {"exponent", exponent}});
  return Json{{"constant", cyc_to_json(mult.constant())},
              {"factors", std::move(factors)}};
}

FactoredMultiplier multiplier_from_json(const Json& j) {
  FactoredMultiplier mult(cyc_from_json(j.at("constant")));
  for (const Json& f : j.at("factors"))
    mult.multiply_by(poly_from_json(f.at("coefficients")),
                     f.at("exponent").get<long>());
  return mult;
}

Json generator_to_json(const AutGenerator& gen) {
  return Json{{"name", gen.name},
              {"moebius", moebius_to_json(gen.moebius)},
              {"multiplier", multiplier_to_json(gen.multiplier)},
              {"multiplier_known", gen.multiplier_known}};
}

AutGenerator generator_from_json(const Json& j) {
  AutGenerator gen;
  gen.name = j.at("name").get<std::string>();
  gen.moebius = moebius_from_json(j.at("moebius"));
  gen.multiplier = multiplier_from_json(j.at("multiplier"));
  gen.multiplier_known = j.at("multiplier_known").get<bool>();
  return gen;
}

Json relation_to_json(const GroupRelation& rel) {
  Json j{{"text", rel.text},
         {"word", rel.word},
         {"tau_power", rel.tau_power},
         {"tau_power_known", rel.tau_power_known}};
  j["shortcut_power"] =
      rel.shortcut_power ? Json(*rel.shortcut_power) : Json(nullptr);
  return j;
}

GroupRelation relation_from_json(const Json& j) {
  GroupRelation rel;
  rel.text = j.at("text").get<std::string>();
  rel.word = j.at("word").get<std::vector<int>>();
  rel.tau_power = j.at("tau_power").get<long>();
  rel.tau_power_known = j.at("tau_power_known").get<bool>();
  const Json& shortcut = j.at("shortcut_power");
  if (!shortcut.is_null()) rel.shortcut_power = shortcut.get<long>();
  return rel;
}

Json presentation_to_json(const AutPresentation& pres) {
  Json generators = Json::array();
  for (const AutGenerator& gen : pres.generators)
    generators.push_back(generator_to_json(gen));
  Json relations = Json::array();
  for (const GroupRelation& rel : pres.relations)
    relations.push_back(relation_to_json(rel));
  return Json{{"n", pres.n},
              {"abelian", pres.abelian},
              {"generators", std::move(generators)},
              {"relations", std::move(relations)}};
}

AutPresentation presentation_from_json(const Json& j) {
  AutPresentation pres;
  pres.n = j.at("n").get<long>();
  pres.abelian = j.at("abelian").get<bool>();
  for (const Json& gen : j.at("generators"))
    pres.generators.push_back(generator_from_json(gen));
  for (const Json& rel : j.at("relations"))
    pres.relations.push_back(relation_from_json(rel));
  return pres;
}

Json equation_to_json(const CurveEquation& eq) {
  Json factors = Json::array();
  for (const CurveFactor& f : eq.factors)
    factors.push_back(
        {{"coefficients", poly_to_json(f.poly)}, {"exponent", f.exponent}});
  return Json{
      {"n", eq.n}, {"text", eq.to_string()}, {"factors", std::move(factors)}};
}

CurveEquation equation_from_json(const Json& j) {
  std::vector<CurveFactor> factors;
  for (const Json& f : j.at("factors"))
    factors.push_back(
        {poly_from_json(f.at("coefficients")), f.at("exponent").get<long>()});
  CurveEquation eq =
      make_curve_equation(j.at("n").get<long>(), std::move(factors));
  if (eq.to_string() != j.at("text").get<std::string>())
    throw InvalidInput("equation text disagrees with its factor list");
  return eq;
}

Json family_fields_to_json(const GSFamily& fam) {
  Json j;
  j["n"] = fam.n;
  j["group"] = fam.reduced.token();
  j["l0"] = fam.l0;
  j["special_exponents"] = fam.special_exponents;
  j["orbit_exponents"] = fam.orbit_exponents;
  j["free_parameters"] = fam.free_parameters;
  j["genus"] = fam.genus;
  j["equation"] = equation_to_json(fam.equation);
  j["presentation"] = presentation_to_json(fam.presentation);
  j["sig_H"] = signature_to_json(fam.rotation_quotient);
  j["sig_G"] = signature_to_json(fam.full_quotient);
  j["warnings"] = fam.warnings;
  return j;
}

GSFamily family_fields_from_json(const Json& j) {
  GSFamily fam;
  fam.n = j.at("n").get<long>();
  fam.reduced = ReducedGroup::parse(j.at("group").get<std::string>());
  fam.l0 = j.at("l0").get<long>();
  fam.special_exponents = j.at("special_exponents").get<std::vector<long>>();
  fam.orbit_exponents = j.at("orbit_exponents").get<std::vector<long>>();
  fam.free_parameters = j.at("free_parameters").get<long>();
  fam.genus = j.at("genus").get<long>();
  fam.equation = equation_from_json(j.at("equation"));
  fam.presentation = presentation_from_json(j.at("presentation"));
  fam.rotation_quotient = signature_from_json(j.at("sig_H"));
  fam.full_quotient = signature_from_json(j.at("sig_G"));
  fam.warnings = j.at("warnings").get<std::vector<std::string>>();
  return fam;
}

Json shape_to_json(const ExceptionalShape& shape) {
  return Json{{"d", shape.d},
              {"swapped", shape.swapped},
              {"unit", shape.unit},
              {"case", shape.shape_case},
              {"pair_exponents", shape.pair_exponents},
              {"infinity_exponent", shape.infinity_exponent}};
}

ExceptionalShape shape_from_json(const Json& j) {
  ExceptionalShape shape;
  shape.d = j.at("d").get<long>();
  shape.swapped = j.at("swapped").get<bool>();
  shape.unit = j.at("unit").get<long>();
  shape.shape_case = j.at("case").get<int>();
  shape.pair_exponents = j.at("pair_exponents").get<std::vector<long>>();
  shape.infinity_exponent = j.at("infinity_exponent").get<long>();
  return shape;
}

Json analysis_to_json(const ExceptionalAnalysis& a) {
  return Json{{"shape", shape_to_json(a.shape)},
              {"normalized_equation", equation_to_json(a.normalized_equation)},
              {"eta", generator_to_json(a.eta)},
              {"extended", presentation_to_json(a.extended)},
              {"invariants", a.invariants},
              {"quotient", signature_to_json(a.quotient)},
              {"genus", a.genus},
              {"warnings", a.warnings}};
}

ExceptionalAnalysis analysis_from_json(const Json& j) {
  ExceptionalAnalysis a;
  a.shape = shape_from_json(j.at("shape"));
  a.normalized_equation = equation_from_json(j.at("normalized_equation"));
  a.eta = generator_from_json(j.at("eta"));
  a.extended = presentation_from_json(j.at("extended"));
  a.invariants = j.at("invariants").get<std::vector<long>>();
  a.quotient = signature_from_json(j.at("quotient"));
  a.genus = j.at("genus").get<long>();
  a.warnings = j.at("warnings").get<std::vector<std::string>>();
  return a;
}

Json uniqueness_to_json(const UniquenessVerdict& v) {
  Json j;
  j["status"] = v.status == Uniqueness::Unique ? "unique" : "possibly_non_unique";
  j["rule"] = v.rule;
  j["detail"] = v.detail;
  j["exceptional"] =
      v.exceptional ? analysis_to_json(*v.exceptional) : Json(nullptr);
  return j;
}

UniquenessVerdict uniqueness_from_json(const Json& j) {
  UniquenessVerdict v;
  std::string status = j.at("status").get<std::string>();
  if (status == "unique")
    v.status = Uniqueness::Unique;
  else if (status == "possibly_non_unique")
    v.status = Uniqueness::PossiblyNonUnique;
  else
    throw InvalidInput("unknown uniqueness status '" + status + "'");
  v.rule = j.at("rule").get<std::string>();
  v.detail = j.at("detail").get<std::string>();
  const Json& exceptional = j.at("exceptional");
  if (!exceptional.is_null()) v.exceptional = analysis_from_json(exceptional);
  return v;
}

Json definability_to_json(const DefinabilityVerdict& v) {
  Json j;
  j["status"] =
      v.status == Definability::Definable ? "definable" : "undetermined";
  j["rule"] = v.rule ? Json(rule_token(*v.rule)) : Json(nullptr);
  j["detail"] = v.detail;
  return j;
}

DefinabilityRule definability_rule_from_token(const std::string& token) {
  for (DefinabilityRule rule :
       {DefinabilityRule::TrivialAutomorphisms, DefinabilityRule::Quasiplatonic,
        DefinabilityRule::NonCyclicReduced, DefinabilityRule::OddSignature})
    if (rule_token(rule) == token) return rule;
  throw InvalidInput("unknown definability rule '" + token + "'");
}

DefinabilityVerdict definability_from_json(const Json& j) {
  DefinabilityVerdict v;
  std::string status = j.at("status").get<std::string>();
  if (status == "definable")
    v.status = Definability::Definable;
  else if (status == "undetermined")
    v.status = Definability::Undetermined;
  else
    throw InvalidInput("unknown definability status '" + status + "'");
  const Json& rule = j.at("rule");
  if (!rule.is_null())
    v.rule = definability_rule_from_token(rule.get<std::string>());
  if (v.rule.has_value() != (v.status == Definability::Definable))
    throw InvalidInput("definability rule must be present exactly when "
                       "the status is definable");
  v.detail = j.at("detail").get<std::string>();
  return v;
}

Json record_to_json_object(const FamilyRecord& record) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json fields = family_fields_to_json(record.family);
  Json warnings = fields["warnings"];
  fields.erase("warnings");
  j.update(fields);
  j["uniqueness"] = uniqueness_to_json(record.uniqueness);
  j["field_of_moduli"] = definability_to_json(record.field_of_moduli);
  j["warnings"] = std::move(warnings);
  return j;
}

FamilyRecord record_from_json_object(const Json& j) {
  std::string version = j.at("schema_version").get<std::string>();
  if (version != kSchemaVersion)
    throw InvalidInput("unsupported schema_version '" + version + "'");
  FamilyRecord record;
  record.family = family_fields_from_json(j);
  record.uniqueness = uniqueness_from_json(j.at("uniqueness"));
  record.field_of_moduli = definability_from_json(j.at("field_of_moduli"));
  return record;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// Converts nlohmann's type and lookup errors on structurally wrong documents
// into the library's input error.
template <typename F>
auto guard_structure(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_longs(const std::vector<long>& values,
                       const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace

FamilyRecord make_family_record(GSFamily family) {
  FamilyRecord record;
  record.family = std::move(family);
  record.uniqueness = uniqueness_verdict(record.family);
  record.field_of_moduli =
      definability_verdict(record.family, record.uniqueness);
  return record;
}

std::string family_record_to_json(const FamilyRecord& record) {
  return record_to_json_object(record).dump(2);
}

FamilyRecord family_record_from_json(const std::string& text) {
  Json j = parse_json(text);
  return guard_structure([&] { return record_from_json_object(j); });
}

std::string family_record_csv_header() {
  return "n,group,l0,special_exponents,orbit_exponents,free_parameters,genus,"
         "sig_H,sig_G,uniqueness,uniqueness_rule,field_of_moduli,"
         "field_of_moduli_rule,warnings,equation";
}

std::string family_record_csv_row(const FamilyRecord& record) {
  const GSFamily& fam = record.family;
  std::ostringstream out;
  out << fam.n << ',' << fam.reduced.token() << ',' << fam.l0 << ','
      << join_longs(fam.special_exponents, " ") << ','
      << join_longs(fam.orbit_exponents, " ") << ',' << fam.free_parameters
      << ',' << fam.genus << ','
      << csv_escape(fam.rotation_quotient.to_string()) << ','
      << csv_escape(fam.full_quotient.to_string()) << ','
      << (record.uniqueness.status == Uniqueness::Unique
              ? "unique"
              : "possibly_non_unique")
      << ',' << record.uniqueness.rule << ','
      << (record.field_of_moduli.status == Definability::Definable
              ? "definable"
              : "undetermined")
      << ','
      << (record.field_of_moduli.rule ? rule_token(*record.field_of_moduli.rule)
                                      : "")
      << ',';
  std::string warnings;
  for (std::size_t i = 0; i < fam.warnings.size(); ++i) {
    if (i) warnings += " | ";
    warnings += fam.warnings[i];
  }
  out << csv_escape(warnings) << ',' << csv_escape(fam.equation.to_string());
  return out.str();
}

std::vector<CensusRow> build_census_rows(long genus, long max_n) {
  std::vector<CensusRow> rows;
  for (const SignatureTuple& tuple : enumerate_families(genus, max_n)) {
    CensusRow row;
    row.tuple = tuple;
    row.genus = tuple.genus();
    row.maximal_quotient = is_maximal_signature(tuple.quotient_signature());
    std::set<std::vector<long>> classes;
    for (const std::vector<long>& exps : enumerate_exponents(tuple)) {
      ++row.tuple_count;
      classes.insert(canonical_exponent_form(tuple.n, exps));
    }
    row.classes.assign(classes.begin(), classes.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<GSFamily> census_row_families(const CensusRow& row) {
  std::vector<GSFamily> families;
  for (const std::vector<long>& exps : row.classes)
    families.push_back(build_family(row.tuple.n,
                                    ReducedGroup{ReducedKind::Trivial, 1}, 0,
                                    exps));
  return families;
}

std::vector<FamilyRecord> census_family_records(
    const std::vector<CensusRow>& rows) {
  std::vector<std::pair<long, const std::vector<long>*>> jobs;
  for (const CensusRow& row : rows)
    for (const std::vector<long>& exps : row.classes)
      jobs.emplace_back(row.tuple.n, &exps);
  return parallel_map(jobs.size(), [&](std::size_t k) {
    const auto& [n, exps] = jobs[k];
    return make_family_record(
        build_family(n, ReducedGroup{ReducedKind::Trivial, 1}, 0, *exps));
  });
}

std::string census_to_json(const std::vector<CensusRow>& rows,
                           bool with_families) {
  std::vector<FamilyRecord> records;
  if (with_families) records = census_family_records(rows);

  Json out;
  out["schema_version"] = kSchemaVersion;
  Json encoded_rows = Json::array();
  std::size_t next_record = 0;
  for (const CensusRow& row : rows) {
    Json r;
    r["n"] = row.tuple.n;
    r["orders"] = row.tuple.orders;
    r["genus"] = row.genus;
    r["tuple_count"] = row.tuple_count;
    r["maximal_quotient"] = row.maximal_quotient;
    r["classes"] = row.classes;
    if (with_families) {
      Json families = Json::array();
      for (std::size_t i = 0; i < row.classes.size(); ++i)
        families.push_back(record_to_json_object(records.at(next_record++)));
      r["families"] = std::move(families);
    }
    encoded_rows.push_back(std::move(r));
  }
  out["rows"] = std::move(encoded_rows);
  return out.dump(2);
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,orders,genus,tuple_count,maximal_quotient,classes\n";
  for (const CensusRow& row : rows) {
    out << row.tuple.n << ',' << join_longs(row.tuple.orders, " ") << ','
        << row.genus << ',' << row.tuple_count << ','
        << (row.maximal_quotient ? "true" : "false") << ',';
    for (std::size_t i = 0; i < row.classes.size(); ++i) {
      if (i) out << '|';
      out << join_longs(row.classes[i], " ");
    }
    out << '\n';
  }
  return out.str();
}

BranchedCurve branched_curve_from_json(const std::string& text) {
  Json j = parse_json(text);
  return guard_structure([&] {
    std::vector<ExtendedPoint> points;
    for (const Json& p : j.at("points"))
      points.push_back(parse_extended_point(p.get<std::string>()));
    return make_branched_curve(j.at("n").get<long>(), std::move(points),
                               j.at("exponents").get<std::vector<long>>());
  });
}

std::string branched_curve_to_json(const BranchedCurve& curve) {
  Json points = Json::array();
  for (const ExtendedPoint& p : curve.points) points.push_back(p.to_string());
  Json j;
  j["n"] = curve.n;
  j["points"] = std::move(points);
  j["exponents"] = curve.exponents;
  return j.dump(2);
}

}  // namespace gsc
