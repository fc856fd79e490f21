#include <gtest/gtest.h>

#include <random>

#include "ssgac/engine.hpp"
#include "ssgac/sources.hpp"
#include "ssgac/support_tables.hpp"
#include "ssgac/verification.hpp"

using namespace ssgac;

namespace {

DomainStore boxes(std::initializer_list<std::pair<int, int>> ranges, std::vector<VarId>& scope) {
  DomainStore d;
  for (auto [lo, hi] : ranges) scope.push_back(d.addVariable(lo, hi));
  return d;
}

bool supports(SupportSource& src, const DomainStore& d, int var, int val, LiteralSet& out) {
  return src.find(d, var, val, out);
}

} // namespace

TEST(ListSource, WrapsToStartOfList) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{0, 1}, {0, 2}}, scope);
  ConstraintDef c = makeTable(scope, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}, {{0, 0}, {1, 2}}});
  auto table = std::make_shared<SupportListTable>(initialScopeDomains(d, scope), listSupportsFor(c, d, 100));
  ASSERT_EQ(table->list(0, 0), (std::vector<int>{0, 1, 2}));
  ListSource src(c, d, table);
  src.setListPos(0, 0, 1);
  d.erase(scope[1], 1);
  d.erase(scope[1], 2);
  LiteralSet out;
  ASSERT_TRUE(supports(src, d, 0, 0, out));
  EXPECT_EQ(out, (LiteralSet{{0, 0}, {1, 0}}));
  EXPECT_EQ(src.listPos(0, 0), 0);
}

TEST(ListSource, ImplicitSupportsAreListed) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{0, 1}, {0, 1}}, scope);
  SupportListTable t(initialScopeDomains(d, scope), {{{0, 1}}, {{1, 0}}});
  EXPECT_EQ(t.list(0, 0), (std::vector<int>{1}));
  EXPECT_EQ(t.list(0, 1), (std::vector<int>{0, 1}));
  EXPECT_EQ(t.list(1, 1), (std::vector<int>{0}));
}

TEST(NDListTable, ThreeSupportJumps) {
  NDListTable t({{{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}}});
  EXPECT_EQ(std::vector<int>(t.next(0).begin(), t.next(0).end()), (std::vector<int>{2, 1}));
  EXPECT_EQ(std::vector<int>(t.next(1).begin(), t.next(1).end()), (std::vector<int>{2, 2}));
  EXPECT_EQ(std::vector<int>(t.next(2).begin(), t.next(2).end()), (std::vector<int>{3, 3}));
}

TEST(NDListTable, DisjointSupportsStepByOne) {
  NDListTable t({{{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}});
  for (int j = 0; j < t.size(); ++j)
    for (int n : t.next(j)) EXPECT_EQ(n, j + 1);
}

TEST(NDListSource, JumpsPastInvalidLiteral) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{0, 2}, {0, 2}}, scope);
  std::vector<LiteralSet> sup{{{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}}};
  ConstraintDef c = makeTable(scope, sup);
  NDListSource src(c, d, std::make_shared<NDListTable>(sup));
  d.erase(scope[0], 1);
  LiteralSet out;
  ASSERT_TRUE(src.find(d, 1, 1, out));
  EXPECT_EQ(out, (LiteralSet{{0, 2}, {1, 1}}));
  EXPECT_EQ(src.lastVisited(), 2);
  EXPECT_EQ(src.listPos(1, 1), 2);
}

TEST(NDListSource, QueryVariableIsForced) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{0, 2}, {0, 2}}, scope);
  std::vector<LiteralSet> sup{{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
  ConstraintDef c = makeTable(scope, sup);
  NDListSource src(c, d, std::make_shared<NDListTable>(sup));
  LiteralSet out;
  ASSERT_TRUE(src.find(d, 0, 2, out));
  EXPECT_EQ(out, (LiteralSet{{0, 2}, {1, 2}}));
  EXPECT_FALSE(src.find(d, 0, 0, out));
}

TEST(ListSources, AgreeWithLinearScan) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    std::vector<VarId> scope;
    DomainStore d = boxes({{0, 2}, {0, 2}, {0, 2}}, scope);
    std::vector<LiteralSet> sup;
    for (int k = 0; k < 6; ++k) {
      LiteralSet s;
      for (int x = 0; x < 3; ++x)
        if (rng() % 3) s.push_back({x, static_cast<int>(rng() % 3)});
      sup.push_back(s);
    }
    ConstraintDef c = makeTable(scope, sup);
    ListSource list(c, d, std::make_shared<SupportListTable>(initialScopeDomains(d, scope), sup));
    NDListSource nd(c, d, std::make_shared<NDListTable>(sup));
    for (int k = 0; k < 3; ++k) {
      VarId x = scope[rng() % 3];
      int v = static_cast<int>(rng() % 3);
      if (d.contains(x, v) && d.size(x) > 1) d.erase(x, v);
    }
    for (int x = 0; x < 3; ++x)
      for (int v : d.values(scope[x])) {
        bool any = false;
        for (const LiteralSet& s : sup) {
          bool ok = true;
          for (const Literal& l : s) ok = ok && d.contains(scope[l.var], l.val) && (l.var != x || l.val == v);
          any = any || ok;
        }
        LiteralSet a, b;
        ASSERT_EQ(list.find(d, x, v, a), any);
        ASSERT_EQ(nd.find(d, x, v, b), any);
        if (any) {
          EXPECT_TRUE(supportsLiteral(a, x, v));
          EXPECT_TRUE(supportsLiteral(b, x, v));
        }
      }
  }
}

TEST(ElementSource, WorkedExampleAnswers) {
  Engine e;
  std::vector<VarId> xs{e.addVariable(0, 2), e.addVariable(0, 2), e.addVariable(0, 2)};
  VarId y = e.addVariable(0, 2), z = e.addVariable(0, 3);
  ConstraintDef c = makeElement(xs, y, z);
  ElementSource src(c);
  LiteralSet out;
  EXPECT_FALSE(src.find(e.domains(), 4, 3, out));
  ASSERT_TRUE(src.find(e.domains(), 4, 1, out));
  EXPECT_EQ(out, (LiteralSet{{0, 1}, {3, 0}, {4, 1}}));
  ScopeDomains sd = scopeDomains(e.domains(), c.scope);
  EXPECT_EQ(isShortSupport(c, sd, {{0, 1}, {3, 0}, {4, 1}}), Verdict::Yes);
}

TEST(LexSource, PrefixUpToFirstStrictPair) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{1, 1}, {0, 1}, {1, 2}, {0, 1}}, scope);
  ConstraintDef c = makeLexLeq(std::vector<VarId>{scope[0], scope[1]}, std::vector<VarId>{scope[2], scope[3]});
  LexSource src(c);
  LiteralSet out;
  ASSERT_TRUE(src.find(d, 0, 1, out));
  EXPECT_EQ(out, (LiteralSet{{0, 1}, {2, 2}}));
  ASSERT_TRUE(src.find(d, 2, 1, out));
  EXPECT_EQ(out, (LiteralSet{{0, 1}, {1, 0}, {2, 1}, {3, 1}}));
}

TEST(LexSource, NullWhenMinExceedsMax) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{2, 3}, {0, 1}}, scope);
  ConstraintDef c = makeLexLeq(std::vector<VarId>{scope[0]}, std::vector<VarId>{scope[1]});
  LexSource src(c);
  LiteralSet out;
  EXPECT_FALSE(src.find(d, 0, 2, out));
}

TEST(RectSource, EntailedGivesEmptyOnlyWhenNotStable) {
  std::vector<VarId> scope;
  // xi, xj, yi, yj with sizes 1 and 1: xi + 1 <= xj holds everywhere.
  DomainStore d = boxes({{0, 0}, {1, 2}, {0, 2}, {0, 2}}, scope);
  ConstraintDef c = makeRectNonOverlap(scope[0], scope[1], scope[2], scope[3], 1, 1);
  RectSource plain(c, false), stable(c, true);
  LiteralSet out{{0, 0}};
  ASSERT_TRUE(plain.find(d, 2, 1, out));
  EXPECT_TRUE(out.empty());
  ASSERT_TRUE(stable.find(d, 2, 1, out));
  EXPECT_EQ(out, (LiteralSet{{0, 0}, {1, 2}}));
  EXPECT_FALSE(plain.backtrackStable());
  EXPECT_TRUE(stable.backtrackStable());
}

TEST(RectSource, EntailmentUsesUnforcedDomains) {
  std::vector<VarId> scope;
  // Entailed only once xi is forced to 0; the unforced box is not entailed.
  DomainStore d = boxes({{0, 2}, {2, 2}, {0, 0}, {0, 0}}, scope);
  ConstraintDef c = makeRectNonOverlap(scope[0], scope[1], scope[2], scope[3], 2, 2);
  RectSource plain(c, false);
  LiteralSet out;
  ASSERT_TRUE(plain.find(d, 0, 0, out));
  EXPECT_FALSE(out.empty());
  EXPECT_EQ(isShortSupport(c, scopeDomains(d, c.scope), out), Verdict::Yes);
}

TEST(DisjunctionSupportSet, TwoStrictOrders) {
  ScopeDomains dom{{0, 1}, {0, 1}};
  std::vector<Conjunction> ds{{Atom::leqOffset(0, 1, 1)}, {Atom::leqOffset(1, 1, 0)}};
  auto set = disjunctionSupportSet(ds, dom);
  EXPECT_EQ(set, (std::vector<LiteralSet>{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}));
  ConstraintDef c = makeDisjunction({0, 1}, ds);
  EXPECT_EQ(isShortSupportSet(c, dom, set), Verdict::Yes);
}

TEST(DisjunctionSupportSet, CapThrows) {
  ScopeDomains dom{{0, 1, 2}, {0, 1, 2}};
  std::vector<Conjunction> ds{{Atom::eq(0, 1)}};
  EXPECT_THROW(disjunctionSupportSet(ds, dom, 2), SupportSetTooLarge);
}

TEST(Longify, FillsMinimaAndHonoursForced) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{1, 3}, {0, 2}, {2, 4}}, scope);
  EXPECT_EQ(longify({{1, 2}}, d, scope), (LiteralSet{{0, 1}, {1, 2}, {2, 2}}));
  EXPECT_EQ(longify({{1, 2}}, d, scope, Literal{2, 4}), (LiteralSet{{0, 1}, {1, 2}, {2, 4}}));
}

TEST(StripAssigned, DropsSingletons) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{1, 1}, {0, 2}, {3, 3}}, scope);
  EXPECT_EQ(stripAssigned({{0, 1}, {1, 2}, {2, 3}}, d, scope), (LiteralSet{{1, 2}}));
}

TEST(LongSource, ProducesFullLengthSupports) {
  Engine e;
  std::vector<VarId> xs{e.addVariable(0, 2), e.addVariable(0, 2)};
  VarId y = e.addVariable(0, 1), z = e.addVariable(0, 2);
  ConstraintDef c = makeElement(xs, y, z);
  LongSource src(c, std::make_unique<ElementSource>(c));
  LiteralSet out;
  ASSERT_TRUE(src.find(e.domains(), 1, 2, out));
  EXPECT_EQ(out.size(), 4u);
  EXPECT_TRUE(supportsLiteral(out, 1, 2));
  EXPECT_EQ(isShortSupport(c, scopeDomains(e.domains(), c.scope), out), Verdict::Yes);
}

TEST(DisjunctSearchSource, FindsDisjunctAssignment) {
  std::vector<VarId> scope;
  DomainStore d = boxes({{0, 2}, {0, 2}, {0, 1}}, scope);
  // (a = b and c = 1) or (a + 2 <= b)
  ConstraintDef c = makeDisjunction(scope, {{Atom::eq(0, 1), Atom::eqConst(2, 1)}, {Atom::leqOffset(0, 2, 1)}});
  DisjunctSearchSource src(c);
  d.erase(scope[2], 1);
  LiteralSet out;
  ASSERT_TRUE(src.find(d, 0, 0, out));
  EXPECT_EQ(out, (LiteralSet{{0, 0}, {1, 2}}));
  EXPECT_FALSE(src.find(d, 0, 1, out));
}
