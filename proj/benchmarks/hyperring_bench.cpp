#include <benchmark/benchmark.h>

#include "hyperring/axioms.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/ideals.hpp"
#include "hyperring/io.hpp"
#include "hyperring/phi.hpp"
#include "hyperring/search.hpp"

using namespace hyperring;

namespace {

KrasnerHyperring load(const char* file) { return load_structure(std::string(HYPERRING_DATA_DIR) + "/" + file); }

void BM_ValidateAxioms(benchmark::State& state) {
  const char* files[] = {"three_element.json", "z12.json", "three_element_squared.json"};
  KrasnerHyperring h = load(files[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(validate_axioms(h).pass());
  state.SetLabel(h.name());
}
BENCHMARK(BM_ValidateAxioms)->DenseRange(0, 2);

void BM_Enumerate(benchmark::State& state) {
  SearchConfig config;
  config.order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_structures(config).stats.classes);
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// Fresh handle per iteration so the lattice caches are rebuilt each time.
void BM_ClassifyIdeal(benchmark::State& state) {
  KrasnerHyperring tables = load("z12.json");
  const int k_max = static_cast<int>(state.range(0));
  const auto phis = standard_phi_set();
  for (auto _ : state) {
    Hyperring h = Hyperring::from(tables);
    Hyperideal q = Hyperideal::make(h, parse_subset(*h, "0,6"));
    benchmark::DoNotOptimize(classify_ideal(q, k_max, phis).results.size());
  }
}
BENCHMARK(BM_ClassifyIdeal)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
