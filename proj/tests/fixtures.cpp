#include "fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "ssgac/constraint.hpp"
#include "ssgac/engine.hpp"
#include "ssgac/haggisgac.hpp"
#include "ssgac/shortgac.hpp"
#include "ssgac/support_index.hpp"

namespace ssgac::fixtures {

bool CandidateSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  for (const LiteralSet& s : candidates_) {
    bool ok = true;
    for (const Literal& l : s) {
      if (!d.contains(scope_[l.var], l.val) || (l.var == var && l.val != val)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out = s;
      return true;
    }
  }
  return false;
}

namespace {

// x0 x1 x2 y z
constexpr int X0 = 0, X1 = 1, X2 = 2, Y = 3, Z = 4;

std::string listsOf(const ShortSupportPropagator& p, const std::vector<SupportId>& names, const std::string& letters) {
  std::ostringstream os;
  const LiteralMap& lm = p.literals();
  for (LitId l = 0; l < lm.numLiterals(); ++l) {
    os << lm.var(l) << "=" << lm.val(l) << ":";
    std::vector<char> got;
    for (SupportId s : p.index().listSupports(l)) {
      auto it = std::find(names.begin(), names.end(), s);
      got.push_back(it == names.end() ? '?' : letters[it - names.begin()]);
    }
    std::sort(got.begin(), got.end());
    os << std::string(got.begin(), got.end()) << " ";
  }
  return os.str();
}

std::string counts(const ShortSupportPropagator& p) {
  std::ostringstream os;
  for (int x = 0; x < p.index().arity(); ++x) os << p.index().supportsPerVar(x) << " ";
  os << "/ " << p.index().numSupports();
  return os.str();
}

std::string expectEq(const std::string& what, const std::string& got, const std::string& want) {
  return got == want ? std::string() : what + ": got [" + got + "] want [" + want + "]";
}

} // namespace

std::string checkElementTables() {
  const LiteralSet A{{X0, 1}, {Y, 0}, {Z, 1}};
  const LiteralSet B{{X1, 0}, {Y, 1}, {Z, 0}};
  const LiteralSet C{{X0, 2}, {Y, 0}, {Z, 2}};
  const LiteralSet D{{X2, 0}, {Y, 2}, {Z, 0}};
  auto build = [&](Engine& e) -> ShortGac& {
    std::vector<VarId> xs{e.addVariable(0, 2), e.addVariable(0, 2), e.addVariable(0, 2)};
    VarId y = e.addVariable(0, 2), z = e.addVariable(0, 3);
    ConstraintDef c = makeElement(xs, y, z);
    return e.emplace<ShortGac>(c, std::make_unique<CandidateSource>(std::vector<LiteralSet>{A, B, C, D}, c.scope));
  };

  {
    Engine e;
    ShortGac& p = build(e);
    SupportId a = p.installSupport(A);
    std::string err = expectEq("after A", counts(p), "1 0 0 1 1 / 1");
    if (!err.empty()) return err;
    err = expectEq("lists after A", listsOf(p, {a}, "A"),
                   "0=0: 0=1:A 0=2: 1=0: 1=1: 1=2: 2=0: 2=1: 2=2: 3=0:A 3=1: 3=2: 4=0: 4=1:A 4=2: 4=3: ");
    if (!err.empty()) return err;
    SupportId b = p.installSupport(B);
    err = expectEq("after B", counts(p), "1 1 0 2 2 / 2");
    if (!err.empty()) return err;
    err = expectEq("lists after B", listsOf(p, {a, b}, "AB"),
                   "0=0: 0=1:A 0=2: 1=0:B 1=1: 1=2: 2=0: 2=1: 2=2: 3=0:A 3=1:B 3=2: 4=0:B 4=1:A 4=2: 4=3: ");
    if (!err.empty()) return err;
  }
  {
    Engine e;
    ShortGac& p = build(e);
    if (!e.initialise()) return "initialise failed";
    if (e.domains().contains(Z, 3)) return "z->3 was not pruned";
    for (VarId x : {X0, X1, X2, Y})
      if (e.domains().size(x) != 3) return "unexpected pruning";
    std::string err = expectEq("after A-D", counts(p), "2 1 1 4 4 / 4");
    if (!err.empty()) return err;
    std::vector<SupportId> names(4, kNoSupport);
    const LiteralSet* sets[4] = {&A, &B, &C, &D};
    for (SupportId s = 0; s < p.index().arenaSize(); ++s) {
      const ShortSupport& sup = p.index().support(s);
      if (!sup.active) continue;
      LiteralSet ls;
      for (const SupportCell& cell : sup.live()) ls.push_back(p.literals().decode(cell.literal));
      std::sort(ls.begin(), ls.end());
      for (int k = 0; k < 4; ++k)
        if (ls == *sets[k]) names[k] = s;
    }
    if (std::count(names.begin(), names.end(), kNoSupport)) return "active supports are not exactly A-D";
    err = expectEq("lists after A-D", listsOf(p, names, "ABCD"),
                   "0=0: 0=1:A 0=2:C 1=0:B 1=1: 1=2: 2=0:D 2=1: 2=2: 3=0:AC 3=1:B 3=2:D 4=0:BD 4=1:A 4=2:C 4=3: ");
    if (!err.empty()) return err;
  }
  return {};
}

std::string checkPartitionTrace() {
  enum { z3, w1, z1, y3, z2, y1, x2, x3, w2, y2, x1 };
  const char* names[] = {"z3", "w1", "z1", "y3", "z2", "y1", "x2", "x3", "w2", "y2", "x1"};
  const std::vector<std::vector<int>> supports = {
      {w2, y1, z3, z1, z2, x3, y2, x1, y3, x2, w1}, {x2, x3, z2, x1, z3, z1},
      {z3, z1, w2, y3, y2, x3, w1, y1, x2, z2},     {w1, z1, y3, x2, w2, y1, x1, z2, z3, y2},
      {z1, x3, y2, z2, x2, x1, z3, y1, y3, w2, w1}, {z1, y1, x2, y2, z2, x3, w1, z3, y3, w2, x1},
      {x3, y2, z1, z2, x1, z3, y3, y1},             {z3, x3, z2, y3, y2, x2, x1, z1, w2, y1, w1}};
  const std::vector<std::vector<int>> rows = {
      {w1, w2, y1, x1, x2, y2, y3, x3, z1, z2, z3}, {w1, w2, x2, x1, y1, y2, y3, x3, z1, z2, z3},
      {w1, w2, x2, x3, y1, y2, y3, x1, z1, z2, z3}, {w1, w2, x2, x3, y1, y2, y3, x1, z2, z1, z3},
      {w1, w2, x2, x3, x1, y2, y3, y1, z2, z1, z3}, {w1, w2, x2, x3, x1, y2, y3, y1, z2, z3, z1},
      {w1, w2, x2, x3, x1, y2, y3, y1, z2, z3, z1}};
  auto show = [&](std::span<const int> order) {
    std::string s;
    for (int v : order) s += std::string(names[v]) + " ";
    return s;
  };
  auto expectRow = [&](std::span<const int> order, int r) {
    return expectEq("row " + std::to_string(r), show(order), show(rows[r]));
  };

  SupportPartition part(11);
  for (const auto& s : supports)
    for (int x : s) part.increment(x);
  std::string err = expectRow(part.order(), 0);
  if (!err.empty()) return err;
  const int deleted[] = {x2, x3, z2, x1, z3, z1};
  for (int k = 0; k < 6; ++k) {
    part.decrement(deleted[k]);
    err = expectRow(part.order(), k + 1);
    if (!err.empty()) return err;
  }

  // The same deletion through the index reports the region between the two boundaries.
  DomainStore d;
  std::vector<VarId> scope;
  for (int i = 0; i < 11; ++i) scope.push_back(d.addVariable(0, 0));
  LiteralMap lm(d, scope);
  SupportIndex index(lm, nullptr, false);
  std::vector<SupportId> ids;
  for (const auto& s : supports) {
    std::vector<LitId> ls;
    for (int x : s) ls.push_back(lm.encode(x, 0));
    ids.push_back(index.allocate(ls, static_cast<int>(ls.size())));
    index.add(ids.back());
  }
  index.setLemmaAudit(true);
  index.remove(ids[1]);
  err = expectRow(index.partition().order(), 6);
  if (!err.empty()) return "index " + err;
  if (index.lastRegion() != std::make_pair(5, 8)) return "region is not [5,8)";
  std::vector<int> region;
  for (int i = 5; i < 8; ++i) region.push_back(index.partition().varAt(i));
  std::sort(region.begin(), region.end());
  std::vector<int> want{y3, y1, y2};
  std::sort(want.begin(), want.end());
  if (region != want) return "region does not hold y1 y2 y3";
  if (index.lemmaAudit().failures != 0) return "region audit failed: " + index.lemmaAudit().firstFailure;
  return {};
}

std::string checkScratchSets() {
  Engine e;
  constexpr int W = 0, X = 1, Y = 2, Z = 3;
  std::vector<VarId> scope;
  for (int i = 0; i < 4; ++i) scope.push_back(e.addVariable(0, 3));
  // AllDifferentExceptZero: full tuples with distinct non-zero values, or any three zeros.
  std::vector<LiteralSet> sups;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          int v[4] = {a, b, c, d};
          bool ok = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (v[i] && v[i] == v[j]) ok = false;
          if (ok) sups.push_back({{W, a}, {X, b}, {Y, c}, {Z, d}});
        }
  for (int free = 0; free < 4; ++free) {
    LiteralSet s;
    for (int i = 0; i < 4; ++i)
      if (i != free) s.push_back({i, 0});
    sups.push_back(s);
  }
  ConstraintDef c = makeTable(scope, sups);
  HaggisOptions opt;
  opt.fullLengthFastPath = false;
  HaggisGac& p = e.emplace<HaggisGac>(c, makeSpecificSource(c, false), opt);
  p.installSupport(LiteralSet{{W, 0}, {X, 2}, {Y, 3}, {Z, 1}});
  p.installSupport(LiteralSet{{W, 0}, {X, 3}, {Y, 2}, {Z, 1}});
  p.installSupport(LiteralSet{{W, 3}, {X, 0}, {Y, 1}, {Z, 2}});
  p.installSupport(LiteralSet{{X, 0}, {Y, 0}, {Z, 0}});
  p.installSupport(LiteralSet{{W, 0}, {X, 1}, {Y, 2}, {Z, 3}});
  std::string err = expectEq("before", counts(p), "4 5 5 5 / 5");
  if (!err.empty()) return err;
  e.prune(scope[Y], 0);
  e.propagate();
  if (e.failed()) return "propagation failed";
  std::vector<Literal> lost;
  for (LitId l : p.lostExplicit()) lost.push_back(p.literals().decode(l));
  if (lost != std::vector<Literal>{{Z, 0}}) return "lost explicit set is not {z->0}";
  if (p.lostImplicit() != std::vector<int>{W}) return "lost implicit set is not {w}";
  for (int i = 0; i < 4; ++i)
    if (e.domains().size(scope[i]) != (i == Y ? 3 : 4)) return "unexpected pruning";
  return {};
}

} // namespace ssgac::fixtures
