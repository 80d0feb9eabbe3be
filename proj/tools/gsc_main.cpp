// Command line driver: census reports, admissibility and genus queries,
// family construction with verdicts, curve isomorphism testing, and the
// exact equivariance self test.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsc/census.hpp"
#include "gsc/error.hpp"
#include "gsc/platonic.hpp"
#include "gsc/serialize.hpp"
#include "gsc/signature.hpp"
#include "gsc/superelliptic.hpp"

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gsc::InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Prints to stdout or to the requested file, with a final newline.
void emit(const std::string& text, const std::string& out_path) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gsc::InvalidInput("cannot write " + out_path);
  out << payload;
}

struct CensusOptions {
  long genus = 0;
  long max_n = 0;
  bool gs_only = false;
  std::string group;
  std::string format = "json";
  std::string out;
};

void run_census(const CensusOptions& opt) {
  if (!opt.group.empty() && opt.group != "trivial")
    throw gsc::InvalidInput(
        "the census builds families for the plain rotation group only; "
        "declare richer groups through the family command");
  bool with_families = opt.gs_only || !opt.group.empty();
  std::vector<gsc::CensusRow> rows = gsc::build_census_rows(opt.genus, opt.max_n);
  if (opt.format == "json") {
    emit(gsc::census_to_json(rows, with_families), opt.out);
    return;
  }
  std::string text = gsc::census_to_csv(rows);
  if (with_families) {
    text += '\n';
    text += gsc::family_record_csv_header();
    text += '\n';
    for (const gsc::FamilyRecord& record : gsc::census_family_records(rows)) {
      text += gsc::family_record_csv_row(record);
      text += '\n';
    }
  }
  emit(text, opt.out);
}

struct HarveyOptions {
  long n = 0;
  std::vector<long> orders;
  std::string out;
};

void run_harvey(const HarveyOptions& opt) {
  Json j;
  j["n"] = opt.n;
  j["orders"] = opt.orders;
  j["admissible"] = gsc::harvey_check(opt.n, opt.orders);
  emit(j.dump(2), opt.out);
}

struct GenusOptions {
  long n = 0;
  std::vector<long> exponents;
  std::string out;
};

void run_genus(const GenusOptions& opt) {
  Json j;
  j["n"] = opt.n;
  j["exponents"] = opt.exponents;
  j["genus"] = gsc::genus_from_exponents(opt.n, opt.exponents);
  emit(j.dump(2), opt.out);
}

struct FamilyOptions {
  std::string group = "trivial";
  long n = 0;
  long l0 = 0;
  std::vector<long> exponents;
  std::vector<long> special;
  std::string format = "json";
  std::string out;
};

void run_family(const FamilyOptions& opt) {
  gsc::FamilyRecord record = gsc::make_family_record(
      gsc::build_family(opt.n, gsc::ReducedGroup::parse(opt.group), opt.l0,
                        opt.exponents, opt.special));
  if (opt.format == "json") {
    emit(gsc::family_record_to_json(record), opt.out);
    return;
  }
  emit(gsc::family_record_csv_header() + "\n" +
           gsc::family_record_csv_row(record),
       opt.out);
}

struct IsoOptions {
  std::string first;
  std::string second;
  std::string out;
};

void run_iso(const IsoOptions& opt) {
  gsc::BranchedCurve a = gsc::branched_curve_from_json(read_file(opt.first));
  gsc::BranchedCurve b = gsc::branched_curve_from_json(read_file(opt.second));
  std::optional<gsc::CurveIsomorphism> iso = gsc::find_curve_isomorphism(a, b);
  Json j;
  j["isomorphic"] = iso.has_value();
  if (iso) {
    j["map"] = Json::array({iso->map.a().to_string(), iso->map.b().to_string(),
                            iso->map.c().to_string(),
                            iso->map.d().to_string()});
    j["point_permutation"] = iso->point_permutation;
    j["unit"] = iso->unit;
  }
  emit(j.dump(2), opt.out);
}

struct VerdictOptions {
  std::string file;
  std::string format = "json";
  std::string out;
};

void run_verdict(const VerdictOptions& opt) {
  gsc::FamilyRecord parsed = gsc::family_record_from_json(read_file(opt.file));
  gsc::FamilyRecord updated =
      gsc::make_family_record(std::move(parsed.family));
  if (opt.format == "json") {
    emit(gsc::family_record_to_json(updated), opt.out);
    return;
  }
  emit(gsc::family_record_csv_header() + "\n" +
           gsc::family_record_csv_row(updated),
       opt.out);
}

int run_selftest(const std::string& out_path) {
  Json reports = Json::array();
  bool all_hold = true;
  for (gsc::PlatonicKind kind :
       {gsc::PlatonicKind::Tetrahedral, gsc::PlatonicKind::Octahedral,
        gsc::PlatonicKind::Icosahedral}) {
    gsc::EquivarianceReport report = gsc::verify_equivariance(kind);
    Json identities = Json::array();
    for (const gsc::EquivarianceIdentity& identity : report.identities) {
      Json entry;
      entry["name"] = identity.name;
      entry["holds"] = identity.holds;
      entry["detail"] = identity.detail;
      identities.push_back(std::move(entry));
    }
    Json r;
    r["kind"] = gsc::platonic_data(kind).name;
    r["identities"] = std::move(identities);
    r["all_hold"] = report.all_hold();
    all_hold = all_hold && report.all_hold();
    reports.push_back(std::move(r));
  }
  Json j;
  j["reports"] = std::move(reports);
  j["all_hold"] = all_hold;
  emit(j.dump(2), out_path);
  return all_hold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Enumeration and classification of cyclic n-gonal surface families "
      "over exact cyclotomic arithmetic",
      "gsc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gsc 0.1.0");
  int status = 0;

  CensusOptions census;
  CLI::App* census_cmd = app.add_subcommand(
      "census", "Enumerate admissible branching data for a genus");
  census_cmd->add_option("--genus", census.genus, "Surface genus, at least 2")
      ->required();
  census_cmd->add_option("--max-n", census.max_n,
                         "Keep only covering degrees up to this bound");
  census_cmd->add_flag("--gs-only", census.gs_only,
                       "Attach a family record with verdicts to every "
                       "canonical exponent class");
  census_cmd->add_option("--group", census.group,
                         "Reduced-group declaration for the attached "
                         "families; only 'trivial' applies census-wide");
  census_cmd->add_option("--format", census.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_option("--out", census.out,
                         "Write to this file instead of stdout");
  census_cmd->callback([&census] { run_census(census); });

  HarveyOptions harvey;
  CLI::App* harvey_cmd = app.add_subcommand(
      "harvey", "Decide whether branching orders admit a cyclic cover");
  harvey_cmd->add_option("--n", harvey.n, "Covering degree")->required();
  harvey_cmd
      ->add_option("--orders", harvey.orders,
                   "Branching orders, each dividing n")
      ->required()
      ->delimiter(',');
  harvey_cmd->add_option("--out", harvey.out,
                         "Write to this file instead of stdout");
  harvey_cmd->callback([&harvey] { run_harvey(harvey); });

  GenusOptions genus;
  CLI::App* genus_cmd = app.add_subcommand(
      "genus", "Genus of the cyclic cover with the given branching exponents");
  genus_cmd->add_option("--n", genus.n, "Covering degree")->required();
  genus_cmd
      ->add_option("--exponents", genus.exponents,
                   "Finite branching exponents in [1, n-1]")
      ->required()
      ->delimiter(',');
  genus_cmd->add_option("--out", genus.out,
                        "Write to this file instead of stdout");
  genus_cmd->callback([&genus] { run_genus(genus); });

  FamilyOptions family;
  CLI::App* family_cmd = app.add_subcommand(
      "family", "Build one surface family and print its record with verdicts");
  family_cmd->add_option("--group", family.group,
                         "Reduced group token: trivial, cyclic:m, dihedral:m, "
                         "tetrahedral, octahedral, icosahedral");
  family_cmd->add_option("--n", family.n, "Order of the vertical rotation")
      ->required();
  family_cmd->add_option("--l0", family.l0,
                         "Branching exponent at the origin");
  family_cmd
      ->add_option("--exponents", family.exponents,
                   "Exponents of the generic orbits")
      ->delimiter(',');
  family_cmd
      ->add_option("--special", family.special,
                   "Exponents of the distinguished orbits of the reduced "
                   "group, in its fixed orbit order")
      ->delimiter(',');
  family_cmd->add_option("--format", family.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  family_cmd->add_option("--out", family.out,
                         "Write to this file instead of stdout");
  family_cmd->callback([&family] { run_family(family); });

  IsoOptions iso;
  CLI::App* iso_cmd = app.add_subcommand(
      "iso", "Test two branched-curve files for Moebius isomorphism");
  iso_cmd->add_option("first", iso.first, "Branched-curve JSON file")
      ->required();
  iso_cmd->add_option("second", iso.second, "Branched-curve JSON file")
      ->required();
  iso_cmd->add_option("--out", iso.out,
                      "Write to this file instead of stdout");
  iso_cmd->callback([&iso] { run_iso(iso); });

  VerdictOptions verdict;
  CLI::App* verdict_cmd = app.add_subcommand(
      "verdict", "Recompute the verdicts for a stored family record");
  verdict_cmd->add_option("file", verdict.file, "Family record JSON file")
      ->required();
  verdict_cmd->add_option("--format", verdict.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  verdict_cmd->add_option("--out", verdict.out,
                          "Write to this file instead of stdout");
  verdict_cmd->callback([&verdict] { run_verdict(verdict); });

  std::string selftest_out;
  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "Re-verify every ground-form equivariance identity");
  selftest_cmd->add_option("--out", selftest_out,
                           "Write to this file instead of stdout");
  selftest_cmd->callback([&] { status = run_selftest(selftest_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const gsc::InternalError& e) {
    std::cerr << Json{{"error", e.what()}}.dump(2) << '\n';
    return 2;
  } catch (const gsc::ConstraintError& e) {
    Json j;
    j["error"] = e.what();
    j["constraint"] = e.constraint();
    std::cerr << j.dump(2) << '\n';
    return 1;
  } catch (const gsc::InvalidInput& e) {
    std::cerr << Json{{"error", e.what()}}.dump(2) << '\n';
    return 1;
  }
  return status;
}
