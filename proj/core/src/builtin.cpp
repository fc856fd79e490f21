#include "ssgac/baselines.hpp"

#include <algorithm>

namespace ssgac {

namespace {

// Prunes every listed-unsupported value; returns true if anything changed.
template <class Supported>
bool pruneUnsupported(Engine& e, std::span<const VarId> scope, int i, Supported&& supported, bool& ok) {
  bool changed = false;
  for (int v : e.domains().values(scope[i])) {
    if (supported(v)) continue;
    changed = true;
    if (!e.prune(scope[i], v)) {
      ok = false;
      return changed;
    }
  }
  return changed;
}

} // namespace

void SourceScanGac::initialise() {
  watchAll();
  propagate();
}

void SourceScanGac::propagate() {
  bool changed = true, ok = true;
  while (changed && ok) {
    changed = false;
    for (int i = 0; i < def_.arity() && ok; ++i)
      changed |= pruneUnsupported(engine_, def_.scope, i,
                                  [&](int v) { return source_->find(dom(), i, v, buf_); }, ok);
  }
}

void ElementGac::initialise() {
  watchAll();
  propagate();
}

void ElementGac::propagate() {
  const int m = def_.arity() - 2;
  const VarId y = def_.scope[m], z = def_.scope[m + 1];
  auto intersects = [&](int i) {
    bool hit = false;
    dom().forEachValue(def_.scope[i], [&](int v) { hit = hit || dom().contains(z, v); });
    return hit;
  };
  bool changed = true, ok = true;
  while (changed && ok) {
    changed = false;
    changed |= pruneUnsupported(engine_, def_.scope, m,
                                [&](int i) { return i >= 0 && i < m && intersects(i); }, ok);
    if (!ok) return;
    std::vector<int> ys = dom().values(y);
    changed |= pruneUnsupported(engine_, def_.scope, m + 1, [&](int v) {
      for (int i : ys)
        if (dom().contains(def_.scope[i], v)) return true;
      return false;
    }, ok);
    if (!ok) return;
    for (int i = 0; i < m && ok; ++i) {
      if (!dom().contains(y, i)) continue;
      if (dom().size(y) > 1) continue;
      changed |= pruneUnsupported(engine_, def_.scope, i, [&](int v) { return dom().contains(z, v); }, ok);
    }
  }
}

void LexLeqGac::initialise() {
  watchAll();
  propagate();
}

void LexLeqGac::propagate() {
  const int h = def_.arity() / 2;
  // min X <=lex max Y with position p forced to value v.
  auto feasible = [&](int p, int v) {
    for (int i = 0; i < h; ++i) {
      int a = i == p ? v : dom().min(def_.scope[i]);
      int b = h + i == p ? v : dom().max(def_.scope[h + i]);
      if (a < b) return true;
      if (a > b) return false;
    }
    return true;
  };
  bool changed = true, ok = true;
  while (changed && ok) {
    changed = false;
    for (int p = 0; p < def_.arity() && ok; ++p)
      changed |= pruneUnsupported(engine_, def_.scope, p, [&](int v) { return feasible(p, v); }, ok);
  }
}

void AllDifferentGac::initialise() {
  watchAll();
  propagate();
}

bool AllDifferentGac::augment(int i, int round) {
  for (int k = adjStart_[i]; k < adjStart_[i + 1]; ++k) {
    int w = adjVals_[k];
    if (stamp_[w] == round) continue;
    stamp_[w] = round;
    if (matchVal_[w] < 0 || augment(matchVal_[w], round)) {
      matchVar_[i] = w;
      matchVal_[w] = i;
      return true;
    }
  }
  return false;
}

void AllDifferentGac::propagate() {
  const int n = def_.arity();
  int lo = dom().min(def_.scope[0]), hi = dom().max(def_.scope[0]);
  for (int i = 1; i < n; ++i) {
    lo = std::min(lo, dom().min(def_.scope[i]));
    hi = std::max(hi, dom().max(def_.scope[i]));
  }
  const int nv = hi - lo + 1;
  adjStart_.assign(n + 1, 0);
  adjVals_.clear();
  for (int i = 0; i < n; ++i) {
    dom().forEachValue(def_.scope[i], [&](int v) { adjVals_.push_back(v - lo); });
    adjStart_[i + 1] = static_cast<int>(adjVals_.size());
  }

  matchVar_.assign(n, -1);
  matchVal_.assign(nv, -1);
  stamp_.assign(nv, -1);
  for (int i = 0; i < n; ++i)
    if (!augment(i, i)) {
      engine_.fail();
      return;
    }

  // Residual graph, implicit: var i -> unmatched values of i, value w -> matchVal_[w].
  // Nodes are vars 0..n-1 and values n..n+nv-1.
  const int nn = n + nv;
  auto succCount = [&](int u) { return u < n ? adjStart_[u + 1] - adjStart_[u] : (matchVal_[u - n] >= 0 ? 1 : 0); };
  auto succ = [&](int u, int k) { return u < n ? n + adjVals_[adjStart_[u] + k] : matchVal_[u - n]; };

  // Values reaching a free value: walk backwards from free values.
  revStart_.assign(nv + 1, 0);
  for (int k = 0; k < adjStart_[n]; ++k) ++revStart_[adjVals_[k] + 1];
  for (int w = 0; w < nv; ++w) revStart_[w + 1] += revStart_[w];
  revVars_.resize(adjStart_[n]);
  fill_.assign(revStart_.begin(), revStart_.end() - 1);
  for (int i = 0; i < n; ++i)
    for (int k = adjStart_[i]; k < adjStart_[i + 1]; ++k) revVars_[fill_[adjVals_[k]]++] = i;
  reachFree_.assign(nn, 0);
  work_.clear();
  for (int w = 0; w < nv; ++w)
    if (matchVal_[w] < 0 && revStart_[w + 1] > revStart_[w]) {
      reachFree_[n + w] = 1;
      work_.push_back(n + w);
    }
  while (!work_.empty()) {
    int u = work_.back();
    work_.pop_back();
    if (u >= n) {
      int w = u - n;
      for (int k = revStart_[w]; k < revStart_[w + 1]; ++k) {
        int i = revVars_[k];
        if (matchVar_[i] != w && !reachFree_[i]) {
          reachFree_[i] = 1;
          work_.push_back(i);
        }
      }
    } else {
      int w = matchVar_[u];
      if (!reachFree_[n + w]) {
        reachFree_[n + w] = 1;
        work_.push_back(n + w);
      }
    }
  }

  // Iterative Tarjan.
  index_.assign(nn, -1);
  low_.assign(nn, 0);
  comp_.assign(nn, -1);
  onStack_.assign(nn, 0);
  tstack_.clear();
  call_.clear();
  int counter = 0, ncomp = 0;
  for (int s = 0; s < nn; ++s) {
    if (index_[s] >= 0) continue;
    call_.push_back({s, 0});
    index_[s] = low_[s] = counter++;
    tstack_.push_back(s);
    onStack_[s] = 1;
    while (!call_.empty()) {
      auto& [u, k] = call_.back();
      if (k < succCount(u)) {
        int w = succ(u, k++);
        if (u < n && w - n == matchVar_[u]) continue;
        if (index_[w] < 0) {
          index_[w] = low_[w] = counter++;
          tstack_.push_back(w);
          onStack_[w] = 1;
          call_.push_back({w, 0});
        } else if (onStack_[w]) {
          low_[u] = std::min(low_[u], index_[w]);
        }
        continue;
      }
      int done = u;
      call_.pop_back();
      if (!call_.empty()) low_[call_.back().first] = std::min(low_[call_.back().first], low_[done]);
      if (low_[done] == index_[done]) {
        int w;
        do {
          w = tstack_.back();
          tstack_.pop_back();
          onStack_[w] = 0;
          comp_[w] = ncomp;
        } while (w != done);
        ++ncomp;
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int k = adjStart_[i]; k < adjStart_[i + 1]; ++k) {
      int w = adjVals_[k];
      if (matchVar_[i] == w || comp_[i] == comp_[n + w] || reachFree_[n + w]) continue;
      if (!engine_.prune(def_.scope[i], w + lo)) return;
    }
}

void BoolSumEqGac::initialise() {
  watchAll();
  for (int i = 0; i < def_.arity(); ++i)
    for (int v : dom().values(def_.scope[i]))
      if ((v != 0 && v != 1) && !engine_.prune(def_.scope[i], v)) return;
  propagate();
}

void BoolSumEqGac::propagate() {
  const int k = def_.params[0];
  int ones = 0, possible = 0;
  for (VarId x : def_.scope) {
    if (dom().min(x) == 1) ++ones;
    if (dom().max(x) == 1) ++possible;
  }
  if (ones > k || possible < k) {
    engine_.fail();
    return;
  }
  if (ones == k) {
    for (VarId x : def_.scope)
      if (!dom().assigned(x) && !engine_.prune(x, 1)) return;
  } else if (possible == k) {
    for (VarId x : def_.scope)
      if (!dom().assigned(x) && !engine_.prune(x, 0)) return;
  }
}

void LinearAuxGac::initialise() {
  watchAll();
  propagate();
}

void LinearAuxGac::propagate() {
  const VarId aux = def_.scope[0], p = def_.scope[1], q = def_.scope[2];
  const int c = def_.params[0];
  auto mark = [&](VarId x, std::vector<std::uint8_t>& seen) { seen.assign(dom().max(x) - dom().min(x) + 1, 0); };
  auto sweep = [&](VarId x, std::vector<std::uint8_t>& seen, int lo, bool& changed) {
    for (int v = lo; v < lo + static_cast<int>(seen.size()); ++v)
      if (!seen[v - lo] && dom().contains(x, v)) {
        changed = true;
        if (!engine_.prune(x, v)) return false;
      }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    const int alo = dom().min(aux), plo = dom().min(p), qlo = dom().min(q);
    mark(aux, seenAux_);
    mark(p, seenP_);
    mark(q, seenQ_);
    dom().forEachValue(p, [&](int vp) {
      dom().forEachValue(q, [&](int vq) {
        int s = c * vp + vq;
        if (!dom().contains(aux, s)) return;
        seenP_[vp - plo] = 1;
        seenQ_[vq - qlo] = 1;
        seenAux_[s - alo] = 1;
      });
    });
    if (!sweep(aux, seenAux_, alo, changed) || !sweep(p, seenP_, plo, changed) || !sweep(q, seenQ_, qlo, changed))
      return;
  }
}

void EnumerationGac::initialise() {
  watchAll();
  propagate();
}

void EnumerationGac::propagate() {
  const int n = def_.arity();
  std::vector<std::vector<int>> ds(n);
  for (int i = 0; i < n; ++i) ds[i] = dom().values(def_.scope[i]);
  std::vector<std::uint8_t> seen(lits_.numLiterals(), 0);
  std::vector<int> vals(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (def_.satisfied(vals))
        for (int j = 0; j < n; ++j) seen[lits_.encode(j, vals[j])] = 1;
      return;
    }
    for (int v : ds[i]) {
      vals[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  for (int i = 0; i < n; ++i)
    for (int v : ds[i])
      if (!seen[lits_.encode(i, v)] && !engine_.prune(def_.scope[i], v)) return;
}

std::unique_ptr<Propagator> makeBuiltin(Engine& e, const ConstraintDef& def) {
  switch (def.kind) {
  case ConstraintKind::Element: return std::make_unique<ElementGac>(e, def);
  case ConstraintKind::LexLeq: return std::make_unique<LexLeqGac>(e, def);
  case ConstraintKind::AllDifferent: return std::make_unique<AllDifferentGac>(e, def);
  case ConstraintKind::BoolSumEq: return std::make_unique<BoolSumEqGac>(e, def);
  case ConstraintKind::LinearAux: return std::make_unique<LinearAuxGac>(e, def);
  case ConstraintKind::And: return std::make_unique<EnumerationGac>(e, def);
  case ConstraintKind::RectNonOverlap:
  case ConstraintKind::Table:
  case ConstraintKind::Disjunction:
    return std::make_unique<SourceScanGac>(e, def, makeSpecificSource(def, false));
  }
  return nullptr;
}

} // namespace ssgac
