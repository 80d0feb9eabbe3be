// Microbenchmarks for the hot paths: cyclotomic arithmetic, family
// construction, ground-form verification, canonicalization, and the census
// pipeline.
#include <benchmark/benchmark.h>

#include <vector>

#include "gsc/census.hpp"
#include "gsc/cyclotomic.hpp"
#include "gsc/platonic.hpp"
#include "gsc/serialize.hpp"
#include "gsc/superelliptic.hpp"

static void BM_CycMultiply(benchmark::State& state) {
  gsc::CycNumber a = gsc::CycNumber::root_of_unity(60) + gsc::CycNumber(2);
  gsc::CycNumber b = gsc::CycNumber::root_of_unity(60, 7) - gsc::CycNumber(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CycMultiply);

static void BM_BuildCyclicFamily(benchmark::State& state) {
  gsc::ReducedGroup group = gsc::ReducedGroup::parse("cyclic:4");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsc::build_family(4, group, 2, {1, 1, 1}));
  }
}
BENCHMARK(BM_BuildCyclicFamily);

static void BM_BuildOctahedralFamily(benchmark::State& state) {
  gsc::ReducedGroup group = gsc::ReducedGroup::parse("octahedral");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsc::build_family(2, group, 0, {}, {0, 0, 1}));
  }
}
BENCHMARK(BM_BuildOctahedralFamily);

static void BM_VerifyIcosahedral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gsc::verify_equivariance(gsc::PlatonicKind::Icosahedral));
  }
}
BENCHMARK(BM_VerifyIcosahedral);

static void BM_CanonicalExponentForm(benchmark::State& state) {
  std::vector<long> exps = {3, 7, 11, 13, 17, 9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsc::canonical_exponent_form(20, exps));
  }
}
BENCHMARK(BM_CanonicalExponentForm);

static void BM_CensusRows(benchmark::State& state) {
  long genus = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsc::build_census_rows(genus));
  }
}
BENCHMARK(BM_CensusRows)->Arg(2)->Arg(3);

static void BM_CensusFamilyRecords(benchmark::State& state) {
  std::vector<gsc::CensusRow> rows = gsc::build_census_rows(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsc::census_family_records(rows));
  }
}
BENCHMARK(BM_CensusFamilyRecords)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
