#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "ssgac/engine.hpp"
#include "ssgac/haggisgac.hpp"
#include "ssgac/haggisgac_stable.hpp"
#include "ssgac/shortgac.hpp"
#include "ssgac/suites.hpp"
#include "ssgac/verification.hpp"

using namespace ssgac;

namespace {

struct ElementSetup {
  Engine e;
  ConstraintDef c;
  ElementSetup() {
    std::vector<VarId> xs{e.addVariable(0, 2), e.addVariable(0, 2), e.addVariable(0, 2)};
    VarId y = e.addVariable(0, 2), z = e.addVariable(0, 3);
    c = makeElement(xs, y, z);
  }
};

ScopeDomains current(const Engine& e, const ConstraintDef& c) { return scopeDomains(e.domains(), c.scope); }

// Answers every query with the empty support.
class EntailedSource final : public SupportSource {
public:
  std::string_view name() const override { return "entailed"; }
  bool find(const DomainStore&, int, int, LiteralSet& out) override {
    out.clear();
    return true;
  }
};

} // namespace

TEST(WorkedExample, ScratchSets) { EXPECT_EQ(fixtures::checkScratchSets(), ""); }

TEST(ShortGac, ElementInitialisePrunesZ3) {
  ElementSetup s;
  auto& p = s.e.emplace<ShortGac>(s.c, makeSpecificSource(s.c, false));
  ASSERT_TRUE(s.e.initialise());
  EXPECT_FALSE(s.e.domains().contains(s.c.scope[4], 3));
  EXPECT_EQ(p.audit(), "");
  EXPECT_EQ(current(s.e, s.c), bruteForceGAC(s.c, initialScopeDomains(s.e.domains(), s.c.scope)));
}

TEST(ShortGac, EntailedSourceNeedsOneSupport) {
  Engine e;
  VarId a = e.addVariable(0, 2), b = e.addVariable(0, 2);
  ConstraintDef c = makeTable({a, b}, {{}});
  auto& p = e.emplace<ShortGac>(c, std::make_unique<EntailedSource>());
  ASSERT_TRUE(e.initialise());
  EXPECT_EQ(p.index().numSupports(), 1);
  EXPECT_EQ(p.sourceCalls(), 1);
  EXPECT_EQ(e.domains().size(a), 3);
}

TEST(ShortGac, UnsatisfiableWipesOut) {
  Engine e;
  VarId a = e.addVariable(0, 1);
  ConstraintDef c = makeTable({a}, {{{0, 5}}});
  e.emplace<ShortGac>(c, makeSpecificSource(c, false));
  EXPECT_FALSE(e.initialise());
}

TEST(HaggisGac, BacktrackDeletesAddedSupports) {
  ElementSetup s;
  auto& p = s.e.emplace<HaggisGac>(s.c, makeSpecificSource(s.c, false));
  ASSERT_TRUE(s.e.initialise());
  const int before = p.index().numSupports();
  const auto stored = p.index().storedCount();
  s.e.pushNode();
  ASSERT_TRUE(s.e.prune(s.c.scope[0], 1));
  ASSERT_TRUE(s.e.propagate());
  EXPECT_EQ(p.audit(), "");
  s.e.backtrackNode();
  EXPECT_EQ(p.index().numSupports(), before);
  EXPECT_EQ(p.index().storedCount(), stored);
  EXPECT_EQ(p.audit(), "");
}

TEST(HaggisGac, PrunedLiteralOutsideSupportsIsCheap) {
  ElementSetup s;
  auto& p = s.e.emplace<HaggisGac>(s.c, makeSpecificSource(s.c, false));
  ASSERT_TRUE(s.e.initialise());
  const auto calls = p.sourceCalls();
  // x1 -> 2 is implicitly supported and in no active support.
  ASSERT_TRUE(p.index().listEmpty(p.literals().encode(1, 2)));
  ASSERT_TRUE(s.e.prune(s.c.scope[1], 2));
  ASSERT_TRUE(s.e.propagate());
  EXPECT_EQ(p.sourceCalls(), calls);
}

TEST(HaggisGac, UpdatePlacementGivesSameFixpoint) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    RandomCase rc = randomCase(ConstraintKind::Table, rng);
    ScopeDomains got[2];
    for (int inside = 0; inside < 2; ++inside) {
      Engine e;
      for (const auto& dom : rc.initial) e.addVariable(dom);
      HaggisOptions opt;
      opt.updatesInsideLoop = inside;
      e.emplace<HaggisGac>(rc.def, makeSpecificSource(rc.def, false), opt);
      bool ok = e.initialise();
      for (int x = 0; ok && x < rc.def.arity(); ++x)
        for (int v : rc.initial[x])
          if (ok && e.domains().contains(x, v) &&
              !std::binary_search(rc.current[x].begin(), rc.current[x].end(), v))
            ok = e.prune(x, v) && e.propagate();
      got[inside] = ok ? current(e, rc.def) : ScopeDomains{};
    }
    ASSERT_EQ(got[0], got[1]) << rc.def.describe();
  }
}

TEST(HaggisGac, MatchesShortGacOnRandomTables) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    RandomCase rc = randomCase(ConstraintKind::Table, rng);
    ScopeDomains got[2];
    for (int k = 0; k < 2; ++k) {
      Engine e;
      for (const auto& dom : rc.initial) e.addVariable(dom);
      if (k == 0)
        e.emplace<ShortGac>(rc.def, makeSpecificSource(rc.def, false));
      else
        e.emplace<HaggisGac>(rc.def, makeSpecificSource(rc.def, false));
      got[k] = e.initialise() ? current(e, rc.def) : ScopeDomains{};
    }
    ASSERT_EQ(got[0], got[1]);
  }
}

TEST(HaggisGacStable, RejectsUnstableSource) {
  Engine e;
  std::vector<VarId> v{e.addVariable(0, 3), e.addVariable(0, 3), e.addVariable(0, 3), e.addVariable(0, 3)};
  ConstraintDef c = makeRectNonOverlap(v[0], v[1], v[2], v[3], 1, 2);
  EXPECT_THROW(HaggisGacStable(e, c, makeSpecificSource(c, false)), std::invalid_argument);
  EXPECT_NO_THROW(HaggisGacStable(e, c, makeSpecificSource(c, true)));
}

TEST(HaggisGacStable, KeepsSupportsAcrossBacktrack) {
  ElementSetup s;
  auto& p = s.e.emplace<HaggisGacStable>(s.c, makeSpecificSource(s.c, true));
  ASSERT_TRUE(s.e.initialise());
  s.e.pushNode();
  ASSERT_TRUE(s.e.prune(s.c.scope[3], 0));
  ASSERT_TRUE(s.e.propagate());
  const int afterPrune = p.index().numSupports();
  s.e.backtrackNode();
  EXPECT_GE(p.index().numSupports(), afterPrune);
  EXPECT_EQ(p.audit(), "");
  EXPECT_EQ(p.primeInvariantViolations(), 0);
  EXPECT_LE(p.storedSupports(), 2 * p.literalCount());
}

TEST(HaggisGacStable, PrunedLiteralCarriesPrimeSupport) {
  ElementSetup s;
  auto& p = s.e.emplace<HaggisGacStable>(s.c, makeSpecificSource(s.c, true));
  ASSERT_TRUE(s.e.initialise());
  s.e.pushNode();
  // With y = 0 only x0's values matter; pruning x0 -> 0..1 leaves z -> 2 alone.
  ASSERT_TRUE(s.e.assign(s.c.scope[3], 0));
  ASSERT_TRUE(s.e.prune(s.c.scope[0], 0));
  ASSERT_TRUE(s.e.prune(s.c.scope[0], 1));
  ASSERT_TRUE(s.e.propagate());
  EXPECT_EQ(s.e.domains().values(s.c.scope[4]), (std::vector<int>{2}));
  EXPECT_GT(p.backtrackStack().size(), 1u);
  EXPECT_LE(p.maxPairsPerLiteral(), 2);
  EXPECT_EQ(p.primeInvariantViolations(), 0);
  s.e.backtrackNode();
  EXPECT_EQ(p.backtrackStack().size(), 1u);
  EXPECT_EQ(p.audit(), "");
  EXPECT_EQ(current(s.e, s.c), bruteForceGAC(s.c, initialScopeDomains(s.e.domains(), s.c.scope)));
}

TEST(HaggisGacStable, RandomWalkStaysWithinGauge) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    RandomCase rc = randomCase(ConstraintKind::Element, rng);
    Engine e;
    for (const auto& dom : rc.initial) e.addVariable(dom);
    auto& p = e.emplace<HaggisGacStable>(rc.def, makeSpecificSource(rc.def, true));
    if (!e.initialise()) continue;
    for (int step = 0; step < 20; ++step) {
      if (e.depth() > 0 && rng() % 3 == 0) {
        e.backtrackNode();
      } else {
        int x = static_cast<int>(rng() % rc.def.arity());
        auto vals = e.domains().values(x);
        if (vals.size() < 2) continue;
        e.pushNode();
        if (!e.prune(x, vals[rng() % vals.size()]) || !e.propagate()) {
          e.backtrackNode();
          continue;
        }
        ASSERT_EQ(current(e, rc.def), bruteForceGAC(rc.def, current(e, rc.def)));
      }
      ASSERT_EQ(p.audit(), "");
      ASSERT_EQ(p.boundViolations(), 0);
      ASSERT_LE(p.maxPairsPerLiteral(), 2);
    }
  }
}
