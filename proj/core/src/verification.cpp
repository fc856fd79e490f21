#include "ssgac/verification.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ssgac/baselines.hpp"
#include "ssgac/model.hpp"
#include "ssgac/short_support_propagator.hpp"

namespace ssgac {

const char* verdictName(Verdict v) {
  switch (v) {
  case Verdict::Yes: return "yes";
  case Verdict::No: return "no";
  case Verdict::Unverifiable: return "unverifiable at this size";
  }
  return "?";
}

namespace {

bool contains(const std::vector<int>& d, int v) { return std::binary_search(d.begin(), d.end(), v); }

// Product of domain sizes over positions not fixed; saturates at cap + 1.
std::uint64_t boxSize(const ScopeDomains& d, const std::vector<std::uint8_t>& fixed, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (fixed[i]) continue;
    if (d[i].empty()) return 0;
    n *= d[i].size();
    if (n > cap) return cap + 1;
  }
  return n;
}

// Visits every tuple of the box with fixed positions preset in vals; stops when f returns false.
bool forEachTuple(const ScopeDomains& d, const std::vector<std::uint8_t>& fixed, std::vector<int>& vals,
                  const std::function<bool(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(d.size());
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return f(vals);
    if (fixed[i]) return rec(i + 1);
    for (int v : d[i]) {
      vals[i] = v;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

} // namespace

bool supportsLiteral(const LiteralSet& s, int var, int val) {
  for (const Literal& l : s)
    if (l.var == var) return l.val == val;
  return true;
}

Verdict isShortSupport(const ConstraintDef& c, const ScopeDomains& d, const LiteralSet& s, std::uint64_t cap) {
  const int n = c.arity();
  std::vector<std::uint8_t> fixed(n, 0);
  std::vector<int> vals(n, 0);
  for (const Literal& l : s) {
    if (l.var < 0 || l.var >= n || fixed[l.var] || !contains(d[l.var], l.val)) return Verdict::No;
    fixed[l.var] = 1;
    vals[l.var] = l.val;
  }
  if (boxSize(d, fixed, cap) > cap) return Verdict::Unverifiable;
  bool all = forEachTuple(d, fixed, vals, [&](const std::vector<int>& t) { return c.satisfied(t); });
  return all ? Verdict::Yes : Verdict::No;
}

std::vector<std::vector<int>> fullLengthSupports(const ConstraintDef& c, const ScopeDomains& d, std::uint64_t cap) {
  std::vector<std::uint8_t> fixed(c.arity(), 0);
  if (boxSize(d, fixed, cap) > cap) throw OracleCapExceeded("box of " + c.describe() + " exceeds cap");
  std::vector<int> vals(c.arity(), 0);
  std::vector<std::vector<int>> out;
  forEachTuple(d, fixed, vals, [&](const std::vector<int>& t) {
    if (c.satisfied(t)) out.push_back(t);
    return true;
  });
  return out;
}

Verdict isShortSupportSet(const ConstraintDef& c, const ScopeDomains& d, std::span<const LiteralSet> set,
                          std::uint64_t cap) {
  for (const LiteralSet& s : set) {
    Verdict v = isShortSupport(c, d, s, cap);
    if (v != Verdict::Yes) return v;
  }
  std::vector<std::vector<int>> full;
  try {
    full = fullLengthSupports(c, d, cap);
  } catch (const OracleCapExceeded&) {
    return Verdict::Unverifiable;
  }
  for (const auto& t : full) {
    bool covered = std::any_of(set.begin(), set.end(), [&](const LiteralSet& s) {
      return std::all_of(s.begin(), s.end(), [&](const Literal& l) { return t[l.var] == l.val; });
    });
    if (!covered) return Verdict::No;
  }
  return Verdict::Yes;
}

StabilityReport isBacktrackStable(const ConstraintDef& c, const ScopeDomains& initial, const LiteralSet& s,
                                  std::uint64_t cap) {
  Verdict v = isShortSupport(c, initial, s, cap);
  std::string sem = "sufficient condition: short support under the initial domains";
  if (v == Verdict::No) sem += "; not established (a stable support may still fail this check)";
  return {v, sem};
}

ScopeDomains bruteForceGAC(const ConstraintDef& c, const ScopeDomains& d, std::uint64_t cap) {
  const int n = c.arity();
  std::vector<std::vector<std::uint8_t>> seen(n);
  for (int i = 0; i < n; ++i) seen[i].assign(d[i].size(), 0);
  for (const auto& t : fullLengthSupports(c, d, cap))
    for (int i = 0; i < n; ++i) {
      auto pos = std::lower_bound(d[i].begin(), d[i].end(), t[i]) - d[i].begin();
      seen[i][pos] = 1;
    }
  ScopeDomains out(n);
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d[i].size(); ++k)
      if (seen[i][k]) out[i].push_back(d[i][k]);
  return out;
}

std::vector<std::vector<int>> bruteForceSolveAll(const std::vector<std::vector<int>>& domains,
                                                 std::span<const ConstraintDef> defs, std::span<const VarId> order,
                                                 std::uint64_t cap) {
  const int nv = static_cast<int>(domains.size());
  for (const auto& dom : domains)
    if (dom.empty()) return {};

  // Singletons first, then the branching order; a variable that completes some
  // constraint's scope is pulled forward as soon as the rest of that scope is placed.
  std::vector<VarId> seq;
  std::vector<std::uint8_t> placed(nv, 0);
  std::vector<std::vector<int>> byVar(nv);
  for (int k = 0; k < static_cast<int>(defs.size()); ++k)
    for (VarId x : defs[k].scope) byVar[x].push_back(k);
  std::vector<int> missing(defs.size());
  for (std::size_t k = 0; k < defs.size(); ++k) {
    std::vector<VarId> s = defs[k].scope;
    std::sort(s.begin(), s.end());
    missing[k] = static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
  }
  std::function<void(VarId)> place = [&](VarId x) {
    if (placed[x]) return;
    placed[x] = 1;
    seq.push_back(x);
    for (int k : byVar[x]) --missing[k];
    for (int k : byVar[x]) {
      if (missing[k] != 1) continue;
      for (VarId y : defs[k].scope)
        if (!placed[y]) {
          place(y);
          break;
        }
    }
  };
  for (auto& ks : byVar) {
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  }
  for (VarId x = 0; x < nv; ++x)
    if (domains[x].size() == 1) place(x);
  for (VarId x : order) place(x);
  for (VarId x = 0; x < nv; ++x) place(x);

  std::vector<int> pos(nv);
  for (int i = 0; i < nv; ++i) pos[seq[i]] = i;
  std::vector<std::vector<int>> checkAt(nv);
  for (int k = 0; k < static_cast<int>(defs.size()); ++k) {
    int last = -1;
    for (VarId x : defs[k].scope) last = std::max(last, pos[x]);
    if (last >= 0) checkAt[last].push_back(k);
  }

  std::vector<int> vals(nv, 0), tuple;
  std::vector<std::vector<int>> out;
  std::uint64_t nodes = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == nv) {
      out.push_back(vals);
      return;
    }
    const VarId x = seq[i];
    for (int v : domains[x]) {
      if (++nodes > cap) throw OracleCapExceeded("enumeration exceeds cap");
      vals[x] = v;
      bool ok = true;
      for (int k : checkAt[i]) {
        tuple.clear();
        for (VarId y : defs[k].scope) tuple.push_back(vals[y]);
        if (!defs[k].satisfied(tuple)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
  };
  bool emptyScopeViolated = false;
  for (const auto& c : defs)
    if (c.scope.empty() && !c.satisfied(std::vector<int>{})) emptyScopeViolated = true;
  if (!emptyScopeViolated) rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> bruteForceSolveAll(const Model& m, std::uint64_t cap) {
  return bruteForceSolveAll(m.domains(), m.constraints, m.branchOrder, cap);
}

std::string auditPropagatorState(const Propagator& p) {
  if (auto* s = dynamic_cast<const ShortSupportPropagator*>(&p)) return s->audit();
  if (auto* g = dynamic_cast<const GacSchema*>(&p)) return g->audit();
  return {};
}

LemmaAuditTotals lemmaAuditTotals(const Engine& e) {
  LemmaAuditTotals t;
  for (const auto& p : e.propagators()) {
    auto* s = dynamic_cast<const ShortSupportPropagator*>(p.get());
    if (!s) continue;
    const LemmaAuditStats& st = s->index().lemmaAudit();
    t.deletions += st.deletions;
    t.failures += st.failures;
    if (t.firstFailure.empty() && !st.firstFailure.empty())
      t.firstFailure = std::string(p->name()) + ": " + st.firstFailure;
  }
  return t;
}

} // namespace ssgac
