#include "ssgac/support_tables.hpp"

#include <algorithm>
#include <set>

namespace ssgac {

namespace {

struct DisjunctEnumerator {
  const Conjunction& atoms;
  const ScopeDomains& domains;
  std::vector<int> vars;
  std::vector<std::vector<const Atom*>> checkAt;
  std::vector<int> vals;
  std::size_t cap;
  std::set<LiteralSet>& seen;
  std::vector<LiteralSet>& out;

  DisjunctEnumerator(const Conjunction& a, const ScopeDomains& d, std::size_t c, std::set<LiteralSet>& s,
                     std::vector<LiteralSet>& o)
      : atoms(a), domains(d), cap(c), seen(s), out(o) {
    for (const Atom& at : atoms) {
      vars.push_back(at.a);
      if (at.op != Atom::Op::EqConst) vars.push_back(at.b);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    checkAt.resize(vars.size());
    for (const Atom& at : atoms) {
      int last = at.a;
      if (at.op != Atom::Op::EqConst) last = std::max(at.a, at.b);
      auto pos = std::lower_bound(vars.begin(), vars.end(), last) - vars.begin();
      checkAt[pos].push_back(&at);
    }
    vals.assign(domains.size(), 0);
  }

  void run(std::size_t k) {
    if (k == vars.size()) {
      LiteralSet s;
      for (int v : vars) s.push_back({v, vals[v]});
      if (seen.insert(s).second) {
        if (out.size() >= cap) throw SupportSetTooLarge("short support set exceeds cap");
        out.push_back(std::move(s));
      }
      return;
    }
    int x = vars[k];
    for (int v : domains[x]) {
      vals[x] = v;
      bool ok = std::all_of(checkAt[k].begin(), checkAt[k].end(), [&](const Atom* a) { return a->holds(vals); });
      if (ok) run(k + 1);
    }
  }
};

} // namespace

std::vector<LiteralSet> disjunctionSupportSet(std::span<const Conjunction> disjuncts, const ScopeDomains& domains,
                                              std::size_t cap) {
  std::vector<LiteralSet> out;
  std::set<LiteralSet> seen;
  for (const Conjunction& d : disjuncts) {
    DisjunctEnumerator e(d, domains, cap, seen, out);
    e.run(0);
  }
  return out;
}

SupportListTable::SupportListTable(const ScopeDomains& initial, std::vector<LiteralSet> supports)
    : supports_(std::move(supports)) {
  int next = 0;
  for (const auto& dom : initial) {
    int lo = dom.empty() ? 0 : dom.front();
    int hi = dom.empty() ? -1 : dom.back();
    lo_.push_back(lo);
    base_.push_back(next);
    next += hi - lo + 1;
  }
  base_.push_back(next);
  lists_.resize(next);
  for (int i = 0; i < numSupports(); ++i) {
    const LiteralSet& s = supports_[i];
    for (int x = 0; x < arity(); ++x) {
      auto it = std::find_if(s.begin(), s.end(), [&](const Literal& l) { return l.var == x; });
      if (it != s.end()) {
        if (it->val >= lo_[x] && it->val < lo_[x] + (base_[x + 1] - base_[x])) lists_[base_[x] + it->val - lo_[x]].push_back(i);
        continue;
      }
      for (int v : initial[x]) lists_[base_[x] + v - lo_[x]].push_back(i);
    }
  }
}

const std::vector<int>& SupportListTable::list(int var, int val) const {
  int off = val - lo_[var];
  if (off < 0 || off >= base_[var + 1] - base_[var]) return emptyList_;
  return lists_[base_[var] + off];
}

NDListTable::NDListTable(std::vector<LiteralSet> supports) : supports_(std::move(supports)) {
  for (auto& s : supports_) std::sort(s.begin(), s.end());
  const int t = size();
  nd_.resize(t);
  for (int j = t - 1; j >= 0; --j) {
    const LiteralSet& s = supports_[j];
    nd_[j].resize(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (j + 1 == t) {
        nd_[j][k] = t;
        continue;
      }
      const LiteralSet& n = supports_[j + 1];
      auto it = std::lower_bound(n.begin(), n.end(), s[k]);
      if (it != n.end() && *it == s[k])
        nd_[j][k] = nd_[j + 1][it - n.begin()];
      else
        nd_[j][k] = j + 1;
    }
  }
}

LiteralSet longify(const LiteralSet& s, const DomainStore& d, std::span<const VarId> scope,
                   std::optional<Literal> forced) {
  std::vector<int> val(scope.size(), 0);
  std::vector<char> have(scope.size(), 0);
  for (const Literal& l : s) {
    val[l.var] = l.val;
    have[l.var] = 1;
  }
  LiteralSet out;
  out.reserve(scope.size());
  for (std::size_t x = 0; x < scope.size(); ++x) {
    int v;
    if (have[x])
      v = val[x];
    else if (forced && forced->var == static_cast<int>(x))
      v = forced->val;
    else
      v = d.min(scope[x]);
    out.push_back({static_cast<int>(x), v});
  }
  return out;
}

LiteralSet stripAssigned(const LiteralSet& s, const DomainStore& d, std::span<const VarId> scope) {
  LiteralSet out;
  out.reserve(s.size());
  for (const Literal& l : s)
    if (!d.assigned(scope[l.var])) out.push_back(l);
  return out;
}

} // namespace ssgac
