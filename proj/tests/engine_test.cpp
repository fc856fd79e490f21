#include <gtest/gtest.h>

#include <random>

#include "ssgac/engine.hpp"
#include "ssgac/model.hpp"
#include "ssgac/propagator_factory.hpp"
#include "ssgac/search.hpp"

using namespace ssgac;

namespace {

// Records every literal event it receives.
class Recorder final : public Propagator {
public:
  Recorder(Engine& e, std::vector<VarId> scope) : Propagator(e), scope_(std::move(scope)) {}
  std::string_view name() const override { return "recorder"; }
  void initialise() override {
    lits_ = LiteralMap(engine_.domains(), scope_);
    base_ = engine_.registerScope(id(), lits_, scope_);
  }
  void onLiteralPruned(LitId l) override { seen.push_back(lits_.decode(l)); }
  void watch(int var, int val) { engine_.attachTrigger(base_ + lits_.encode(var, val)); }
  void unwatch(int var, int val) { engine_.removeTrigger(base_ + lits_.encode(var, val)); }

  std::vector<Literal> seen;

private:
  std::vector<VarId> scope_;
  LiteralMap lits_;
  int base_ = -1;
};

} // namespace

TEST(DomainStore, EraseAndRestoreTrackBounds) {
  DomainStore d;
  VarId x = d.addVariable(2, 6);
  d.erase(x, 2);
  d.erase(x, 6);
  EXPECT_EQ(d.min(x), 3);
  EXPECT_EQ(d.max(x), 5);
  EXPECT_EQ(d.size(x), 3);
  d.restore(x, 6);
  EXPECT_EQ(d.max(x), 6);
  EXPECT_EQ(d.values(x), (std::vector<int>{3, 4, 5, 6}));
  EXPECT_TRUE(d.inInitial(x, 2));
  EXPECT_FALSE(d.contains(x, 2));
}

TEST(DomainStore, SparseInitialDomain) {
  DomainStore d;
  std::vector<int> vals{1, 4, 7};
  VarId x = d.addVariable(vals);
  EXPECT_EQ(d.values(x), vals);
  EXPECT_FALSE(d.inInitial(x, 2));
  EXPECT_EQ(d.initialSize(x), 3);
}

TEST(Engine, PruneWakesWatcher) {
  Engine e;
  VarId z = e.addVariable(0, 3);
  auto& r = e.emplace<Recorder>(std::vector<VarId>{z});
  ASSERT_TRUE(e.initialise());
  r.watch(0, 3);
  EXPECT_TRUE(e.prune(z, 3));
  EXPECT_TRUE(e.propagate());
  ASSERT_EQ(r.seen.size(), 1u);
  EXPECT_EQ(r.seen[0], (Literal{0, 3}));
  EXPECT_EQ(e.domains().values(z), (std::vector<int>{0, 1, 2}));
}

TEST(Engine, PruneLastValueFails) {
  Engine e;
  VarId x = e.addVariable(5, 5);
  ASSERT_TRUE(e.initialise());
  EXPECT_FALSE(e.prune(x, 5));
  EXPECT_TRUE(e.failed());
}

TEST(Engine, UnwatchedPruneDeliversNothing) {
  Engine e;
  VarId x = e.addVariable(0, 2);
  auto& r = e.emplace<Recorder>(std::vector<VarId>{x});
  ASSERT_TRUE(e.initialise());
  EXPECT_TRUE(e.prune(x, 1));
  EXPECT_TRUE(e.propagate());
  EXPECT_TRUE(r.seen.empty());
  EXPECT_EQ(e.eventsDelivered(), 0);
}

TEST(Engine, AttachThenRemoveRestoresTable) {
  Engine e;
  VarId x = e.addVariable(0, 2);
  auto& r = e.emplace<Recorder>(std::vector<VarId>{x});
  ASSERT_TRUE(e.initialise());
  EXPECT_EQ(e.watcherCount(x, 1), 0);
  r.watch(0, 1);
  EXPECT_EQ(e.watcherCount(x, 1), 1);
  r.unwatch(0, 1);
  EXPECT_EQ(e.watcherCount(x, 1), 0);
}

TEST(Engine, TwoWatchersOneRemoves) {
  Engine e;
  VarId x = e.addVariable(0, 2);
  auto& a = e.emplace<Recorder>(std::vector<VarId>{x});
  auto& b = e.emplace<Recorder>(std::vector<VarId>{x});
  ASSERT_TRUE(e.initialise());
  a.watch(0, 1);
  b.watch(0, 1);
  a.unwatch(0, 1);
  EXPECT_TRUE(e.prune(x, 1));
  EXPECT_TRUE(e.propagate());
  EXPECT_TRUE(a.seen.empty());
  EXPECT_EQ(b.seen.size(), 1u);
}

TEST(Engine, BacktrackRestoresDomainsExactly) {
  std::mt19937_64 rng(7);
  Engine e;
  std::vector<VarId> xs;
  for (int i = 0; i < 5; ++i) xs.push_back(e.addVariable(0, 5));
  ASSERT_TRUE(e.initialise());
  for (int round = 0; round < 200; ++round) {
    DomainStore before = e.domains();
    e.pushNode();
    for (int k = 0; k < 6; ++k) {
      VarId x = xs[rng() % xs.size()];
      int v = static_cast<int>(rng() % 6);
      if (e.domains().contains(x, v) && e.domains().size(x) > 1) e.prune(x, v);
    }
    e.backtrackNode();
    ASSERT_TRUE(e.domains() == before);
  }
}

TEST(Search, OneFreeVariableHasTwoSolutions) {
  Engine e;
  VarId x = e.addVariable(0, 1);
  ASSERT_TRUE(e.initialise());
  std::vector<VarId> order{x};
  SearchStats s = solveAllSolutions(e, order, {});
  EXPECT_EQ(s.solutions, 2);
  EXPECT_EQ(s.nodes, 2);
  EXPECT_EQ(s.status, SearchStatus::Complete);
}

TEST(Search, NodeLimitReportedDistinctly) {
  Model m = buildQG3(4);
  Instance inst = instantiate(m, PropagatorConfig{});
  SearchLimits lim;
  lim.nodeLimit = 3;
  SearchStats s = solveAllSolutions(*inst.engine, m.branchOrder, m.constraints, lim);
  EXPECT_EQ(s.status, SearchStatus::NodeLimit);
  EXPECT_TRUE(s.limitHit());
}

TEST(Search, SolutionDigestIgnoresOrder) {
  std::vector<int> a{1, 2, 3}, b{3, 2, 1};
  EXPECT_NE(solutionHash(a), solutionHash(b));
  EXPECT_EQ(solutionHash(a) + solutionHash(b), solutionHash(b) + solutionHash(a));
}

TEST(Search, QG3FourSameAcrossConfigs) {
  Model m = buildQG3(4);
  std::int64_t nodes = -1;
  std::uint64_t digest = 0;
  for (const PropagatorConfig& cfg : allGacConfigs()) {
    Instance inst = instantiate(m, cfg);
    SearchStats s = solveAllSolutions(*inst.engine, m.branchOrder, m.constraints);
    EXPECT_EQ(s.invalidSolutions, 0) << cfg.label();
    if (nodes < 0) {
      nodes = s.nodes;
      digest = s.solutionDigest;
    }
    EXPECT_EQ(s.nodes, nodes) << cfg.label();
    EXPECT_EQ(s.solutionDigest, digest) << cfg.label();
  }
}
