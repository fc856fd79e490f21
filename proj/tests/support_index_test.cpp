#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "ssgac/domain_store.hpp"
#include "ssgac/support_index.hpp"

using namespace ssgac;

namespace {

struct Harness : TriggerSink {
  explicit Harness(std::vector<int> widths) {
    for (int w : widths) scope.push_back(d.addVariable(0, w - 1));
    lits = LiteralMap(d, scope);
    triggers.assign(lits.numLiterals(), 0);
  }
  void attachLiteral(LitId l) override { ++triggers[l]; }
  void detachLiteral(LitId l) override { --triggers[l]; }
  std::vector<LitId> ids(std::initializer_list<Literal> ls) const {
    std::vector<LitId> out;
    for (Literal l : ls) out.push_back(lits.encode(l));
    return out;
  }

  DomainStore d;
  std::vector<VarId> scope;
  LiteralMap lits;
  std::vector<int> triggers;
};

std::vector<int> perVar(const SupportIndex& ix) {
  std::vector<int> out;
  for (int x = 0; x < ix.arity(); ++x) out.push_back(ix.supportsPerVar(x));
  return out;
}

} // namespace

TEST(WorkedExample, ElementTables) { EXPECT_EQ(fixtures::checkElementTables(), ""); }
TEST(WorkedExample, PartitionTrace) { EXPECT_EQ(fixtures::checkPartitionTrace(), ""); }

TEST(SupportIndex, DeleteAfterFourSupports) {
  // x0 x1 x2 y z
  Harness h({3, 3, 3, 3, 4});
  SupportIndex ix(h.lits, &h, false);
  auto add = [&](std::initializer_list<Literal> ls) {
    auto v = h.ids(ls);
    SupportId s = ix.allocate(v, static_cast<int>(v.size()));
    ix.add(s);
    return s;
  };
  add({{0, 1}, {3, 0}, {4, 1}});
  add({{1, 0}, {3, 1}, {4, 0}});
  add({{0, 2}, {3, 0}, {4, 2}});
  SupportId d = add({{2, 0}, {3, 2}, {4, 0}});
  EXPECT_EQ(perVar(ix), (std::vector<int>{2, 1, 1, 4, 4}));
  ix.remove(d);
  EXPECT_EQ(ix.numSupports(), 3);
  EXPECT_EQ(perVar(ix), (std::vector<int>{2, 1, 0, 3, 3}));
  EXPECT_FALSE(ix.listEmpty(h.lits.encode(4, 0)));
  EXPECT_TRUE(ix.listEmpty(h.lits.encode(2, 0)));
  EXPECT_TRUE(ix.inZeroLits(h.lits.encode(2, 0)));
  EXPECT_EQ(ix.audit(), "");
}

TEST(SupportIndex, EmptySupportOnlyCounts) {
  Harness h({2, 2});
  SupportIndex ix(h.lits, &h, false);
  SupportId s = ix.allocate({}, 0);
  ix.add(s);
  EXPECT_EQ(ix.numSupports(), 1);
  EXPECT_EQ(perVar(ix), (std::vector<int>{0, 0}));
  EXPECT_TRUE(ix.implicitlySupported(0));
  ix.remove(s);
  EXPECT_EQ(ix.numSupports(), 0);
  EXPECT_EQ(ix.audit(), "");
}

TEST(SupportIndex, TriggersFollowListOccupancy) {
  Harness h({2, 2});
  SupportIndex ix(h.lits, &h, false);
  auto v = h.ids({{0, 1}, {1, 0}});
  SupportId a = ix.allocate(v, 2);
  SupportId b = ix.allocate(v, 2);
  ix.add(a);
  ix.add(b);
  EXPECT_EQ(h.triggers[h.lits.encode(0, 1)], 1);
  ix.remove(a);
  EXPECT_EQ(h.triggers[h.lits.encode(0, 1)], 1);
  ix.remove(b);
  EXPECT_EQ(h.triggers[h.lits.encode(0, 1)], 0);
}

TEST(SupportIndex, PoolReusesAndOnlyGrows) {
  Harness h({2, 2, 2});
  SupportIndex ix(h.lits, &h, false);
  SupportId big = ix.allocate(h.ids({{0, 0}, {1, 0}, {2, 0}}), 3);
  ix.reclaim(big);
  SupportId small = ix.allocate(h.ids({{0, 1}, {1, 1}}), 2);
  EXPECT_EQ(small, big);
  EXPECT_EQ(ix.support(small).capacity(), 3);
  EXPECT_EQ(ix.support(small).size, 2);
  SupportId fresh = ix.allocate(h.ids({{0, 1}}), 1);
  EXPECT_NE(fresh, small);
  EXPECT_EQ(ix.poolSize(), 0);
}

TEST(SupportIndex, FullLengthFastPathSkipsCounters) {
  Harness h({2, 2});
  SupportIndex ix(h.lits, &h, true);
  auto v = h.ids({{0, 1}});
  SupportId s = ix.allocate(v, 2);
  ix.add(s);
  EXPECT_TRUE(ix.isFullLength(s));
  EXPECT_EQ(ix.numSupports(), 0);
  EXPECT_EQ(perVar(ix), (std::vector<int>{0, 0}));
  EXPECT_FALSE(ix.listEmpty(h.lits.encode(0, 1)));
}

TEST(SupportIndex, ZeroLitsLazyCleanup) {
  Harness h({3});
  SupportIndex ix(h.lits, &h, false);
  SupportId s = ix.allocate(h.ids({{0, 1}}), 1);
  ix.add(s);
  std::vector<LitId> seen;
  ix.zeroLitsIterate(0, [&](LitId l) { seen.push_back(l); });
  EXPECT_EQ(seen, (std::vector<LitId>{h.lits.encode(0, 0), h.lits.encode(0, 2)}));
  EXPECT_FALSE(ix.inZeroLits(h.lits.encode(0, 1)));
}

TEST(SupportPartition, SelfSwapMovesBoundary) {
  SupportPartition p(3);
  p.increment(1);
  EXPECT_EQ(p.count(1), 1);
  EXPECT_EQ(p.lowIdx(1), 2);
  EXPECT_EQ(p.varAt(2), 1);
  EXPECT_EQ(p.check(), "");
}

TEST(SupportPartition, TwoIncrementsMoveTwoCells) {
  SupportPartition p(4);
  p.increment(0);
  p.increment(0);
  EXPECT_EQ(p.count(0), 2);
  EXPECT_EQ(p.lowIdx(2), 3);
  EXPECT_EQ(p.varAt(3), 0);
  EXPECT_EQ(p.check(), "");
}

TEST(SupportIndex, RandomAddRemoveKeepsInvariants) {
  std::mt19937_64 rng(11);
  Harness h({3, 2, 4, 3});
  SupportIndex ix(h.lits, &h, false);
  std::vector<SupportId> live;
  for (int step = 0; step < 2000; ++step) {
    if (live.empty() || rng() % 2) {
      std::vector<LitId> v;
      for (int x = 0; x < 4; ++x)
        if (rng() % 3) v.push_back(h.lits.first(x) + static_cast<int>(rng() % h.lits.width(x)));
      SupportId s = ix.allocate(v, static_cast<int>(v.size()));
      ix.add(s);
      live.push_back(s);
    } else {
      std::size_t k = rng() % live.size();
      std::vector<int> before = perVar(ix);
      int n = ix.numSupports();
      SupportId s = live[k];
      std::vector<int> expect = before;
      for (const SupportCell& c : ix.support(s).live()) --expect[h.lits.var(c.literal)];
      ix.remove(s);
      ix.reclaim(s);
      live.erase(live.begin() + static_cast<long>(k));
      ASSERT_EQ(perVar(ix), expect);
      ASSERT_EQ(ix.numSupports(), n - 1);
    }
    ASSERT_EQ(ix.audit(), "") << "step " << step;
    for (LitId l = 0; l < h.lits.numLiterals(); ++l) ASSERT_EQ(h.triggers[l] > 0, !ix.listEmpty(l));
  }
}
