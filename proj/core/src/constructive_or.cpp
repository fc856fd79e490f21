#include "ssgac/baselines.hpp"

#include <algorithm>

namespace ssgac {

ConstructiveOr::ConstructiveOr(Engine& e, ConstraintDef def) : ScopedPropagator(e, std::move(def)) {
  disjuncts_ = disjunctsOf(def_);
  const int n = def_.arity();
  const int nd = static_cast<int>(disjuncts_.size());
  dvars_.resize(nd);
  checkAt_.resize(nd);
  byVar_.resize(n);
  view_.assign(nd, std::vector<std::uint8_t>(lits_.numLiterals(), 0));
  dead_.assign(nd, 0);
  dirty_.assign(nd, 1);
  seen_.assign(lits_.numLiterals(), 0);
  vals_.assign(n, 0);
  for (int k = 0; k < nd; ++k) {
    std::vector<int>& vs = dvars_[k];
    for (const Atom& a : disjuncts_[k]) {
      vs.push_back(a.a);
      if (a.op != Atom::Op::EqConst) vs.push_back(a.b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    checkAt_[k].resize(vs.size());
    for (const Atom& a : disjuncts_[k]) {
      int last = a.a;
      if (a.op != Atom::Op::EqConst) last = std::max(last, a.b);
      auto pos = std::lower_bound(vs.begin(), vs.end(), last) - vs.begin();
      checkAt_[k][pos].push_back(&a);
    }
    for (int i : vs) {
      byVar_[i].push_back(k);
      e.domains().forEachValue(def_.scope[i], [&](int v) { view_[k][lits_.encode(i, v)] = 1; });
    }
  }
}

int ConstructiveOr::liveDisjuncts() const {
  return static_cast<int>(std::count(dead_.begin(), dead_.end(), 0));
}

void ConstructiveOr::initialise() {
  watchAll();
  propagate();
}

void ConstructiveOr::onLiteralPruned(LitId lit) {
  const int i = lits_.var(lit);
  bool any = false;
  for (int k : byVar_[i]) {
    if (dead_[k] || !view_[k][lit]) continue;
    view_[k][lit] = 0;
    engine_.trail(id(), k, lit);
    dirty_[k] = 1;
    any = true;
  }
  if (any) engine_.scheduleCoarse(id());
}

bool ConstructiveOr::firstSolution(int k, std::size_t pos) {
  const auto& vs = dvars_[k];
  if (pos == vs.size()) return true;
  const int i = vs[pos];
  auto tryValue = [&](int v) {
    vals_[i] = v;
    for (const Atom* a : checkAt_[k][pos])
      if (!a->holds(vals_)) return false;
    return firstSolution(k, pos + 1);
  };
  if (i == forcedVar_) return tryValue(forcedVal_);
  const int base = lits_.first(i);
  const int lo = lits_.val(base);
  for (int off = 0; off < lits_.width(i); ++off) {
    if (!view_[k][base + off] || !valid(base + off)) continue;
    if (tryValue(lo + off)) return true;
  }
  return false;
}

void ConstructiveOr::reviseDisjunct(int k) {
  dirty_[k] = 0;
  for (int i : dvars_[k]) {
    const int base = lits_.first(i);
    for (int off = 0; off < lits_.width(i); ++off) seen_[base + off] = 0;
  }
  bool anySolution = false;
  for (int i : dvars_[k]) {
    const int base = lits_.first(i);
    for (int off = 0; off < lits_.width(i); ++off) {
      const LitId l = base + off;
      if (!view_[k][l]) continue;
      if (!valid(l)) {
        view_[k][l] = 0;
        engine_.trail(id(), k, l);
        continue;
      }
      if (seen_[l]) continue;
      forcedVar_ = i;
      forcedVal_ = lits_.val(l);
      bool found = firstSolution(k, 0);
      forcedVar_ = -1;
      if (found) {
        anySolution = true;
        for (int j : dvars_[k]) seen_[lits_.encode(j, vals_[j])] = 1;
      } else {
        view_[k][l] = 0;
        engine_.trail(id(), k, l);
      }
    }
    if (!anySolution) break;
  }
  if (!anySolution && !dvars_[k].empty()) {
    dead_[k] = 1;
    engine_.trail(id(), -(k + 1), 0);
  }
}

void ConstructiveOr::propagate() {
  const int nd = static_cast<int>(disjuncts_.size());
  for (int k = 0; k < nd; ++k)
    if (!dead_[k] && dirty_[k]) reviseDisjunct(k);
  if (liveDisjuncts() == 0) {
    engine_.fail();
    return;
  }
  for (int i = 0; i < def_.arity(); ++i) {
    bool omitted = false;
    for (int k = 0; k < nd && !omitted; ++k)
      if (!dead_[k] && !std::binary_search(dvars_[k].begin(), dvars_[k].end(), i)) omitted = true;
    if (omitted) continue;
    const int base = lits_.first(i);
    for (int off = 0; off < lits_.width(i); ++off) {
      const LitId l = base + off;
      if (!valid(l)) continue;
      bool supported = false;
      for (int k : byVar_[i])
        if (!dead_[k] && view_[k][l]) {
          supported = true;
          break;
        }
      if (!supported && !prune(i, lits_.val(l))) return;
    }
  }
}

void ConstructiveOr::undo(std::int32_t a, std::int32_t b) {
  if (a >= 0)
    view_[a][b] = 1;
  else
    dead_[-a - 1] = 0;
}

} // namespace ssgac
