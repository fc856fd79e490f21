#include <benchmark/benchmark.h>

#include "ssgac/domain_store.hpp"
#include "ssgac/model.hpp"
#include "ssgac/propagator_factory.hpp"
#include "ssgac/search.hpp"
#include "ssgac/support_index.hpp"

using namespace ssgac;

namespace {

PropagatorConfig configAt(int i) { return allGacConfigs()[static_cast<std::size_t>(i)]; }

void searchAll(benchmark::State& state, const Model& m) {
  const PropagatorConfig cfg = configAt(static_cast<int>(state.range(0)));
  std::int64_t nodes = 0;
  for (auto _ : state) {
    Instance inst = instantiate(m, cfg);
    SearchStats s = solveAllSolutions(*inst.engine, m.branchOrder, m.constraints);
    nodes += s.nodes;
    benchmark::DoNotOptimize(s.solutionDigest);
  }
  state.SetLabel(cfg.label());
  state.counters["nodes/s"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}

void BM_QG3Search(benchmark::State& state) {
  static const Model m = buildQG3(5);
  searchAll(state, m);
}

void BM_BIBDSearch(benchmark::State& state) {
  static const Model m = buildBIBD(1);
  searchAll(state, m);
}

void BM_RectPackSearch(benchmark::State& state) {
  static const Model m = buildRectPack(4, 7, 6);
  searchAll(state, m);
}

void allConfigs(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < static_cast<int>(allGacConfigs().size()); ++i) b->Arg(i);
}

// Add then remove one support over half the scope.
void BM_SupportIndexAddRemove(benchmark::State& state) {
  const int arity = static_cast<int>(state.range(0));
  DomainStore d;
  std::vector<VarId> scope;
  for (int i = 0; i < arity; ++i) scope.push_back(d.addVariable(0, 3));
  LiteralMap lits(d, scope);
  SupportIndex ix(lits, nullptr, false);
  std::vector<LitId> ls;
  for (int i = 0; i < arity; i += 2) ls.push_back(lits.encode(i, i % 4));
  SupportId s = ix.allocate(ls, static_cast<int>(ls.size()));
  for (auto _ : state) {
    ix.add(s);
    ix.remove(s);
  }
}

} // namespace

BENCHMARK(BM_QG3Search)->Apply(allConfigs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BIBDSearch)->Apply(allConfigs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RectPackSearch)->Apply(allConfigs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupportIndexAddRemove)->Arg(4)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
