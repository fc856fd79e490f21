#include "ssgac/engine.hpp"

#include <cassert>
#include <stdexcept>

namespace ssgac {

VarId Engine::addVariable(int lo, int hi) {
  if (frozen_) throw std::logic_error("variables must be added before propagators");
  return dom_.addVariable(lo, hi);
}

VarId Engine::addVariable(std::span<const int> values) {
  if (frozen_) throw std::logic_error("variables must be added before propagators");
  return dom_.addVariable(values);
}

void Engine::freezeVariables() {
  if (frozen_) return;
  frozen_ = true;
  litBase_.resize(dom_.numVariables());
  int next = 0;
  for (VarId x = 0; x < dom_.numVariables(); ++x) {
    litBase_[x] = next;
    next += dom_.initialMax(x) - dom_.initialMin(x) + 1;
  }
  watchers_.assign(next, {});
}

Propagator& Engine::add(std::unique_ptr<Propagator> p) {
  freezeVariables();
  p->id_ = static_cast<PropId>(props_.size());
  if (p->wantsNodeEvents()) nodeProps_.push_back(p.get());
  props_.push_back(std::move(p));
  inCoarse_.push_back(0);
  return *props_.back();
}

int Engine::registerScope(PropId p, const LiteralMap& lits, std::span<const VarId> scope) {
  freezeVariables();
  int base = static_cast<int>(slots_.size());
  for (LitId l = 0; l < lits.numLiterals(); ++l) {
    int var = lits.var(l);
    slots_.push_back({p, l, globalLit(scope[var], lits.val(l))});
    slotPos_.push_back(-1);
  }
  return base;
}

void Engine::attachTrigger(int slot) {
  assert(slotPos_[slot] < 0);
  auto& w = watchers_[slots_[slot].global];
  slotPos_[slot] = static_cast<int>(w.size());
  w.push_back(slot);
}

void Engine::removeTrigger(int slot) {
  assert(slotPos_[slot] >= 0);
  auto& w = watchers_[slots_[slot].global];
  int pos = slotPos_[slot];
  int last = w.back();
  w[pos] = last;
  slotPos_[last] = pos;
  w.pop_back();
  slotPos_[slot] = -1;
}

int Engine::watcherCount(VarId x, int v) const {
  if (!dom_.inInitial(x, v)) return 0;
  return static_cast<int>(watchers_[globalLit(x, v)].size());
}

bool Engine::prune(VarId x, int v) {
  assert(dom_.contains(x, v));
  dom_.erase(x, v);
  trail_.push_back({-1, x, v});
  if (frozen_) {
    for (int slot : watchers_[globalLit(x, v)]) events_.push_back({slots_[slot].prop, slots_[slot].local});
  }
  if (dom_.empty(x)) failed_ = true;
  return !failed_;
}

bool Engine::assign(VarId x, int v) {
  if (!dom_.contains(x, v)) {
    failed_ = true;
    return false;
  }
  for (int w : dom_.values(x))
    if (w != v) prune(x, w);
  return !failed_;
}

void Engine::scheduleCoarse(PropId p) {
  if (inCoarse_[p]) return;
  inCoarse_[p] = 1;
  coarse_.push_back(p);
}

void Engine::clearQueues() {
  events_.clear();
  eventHead_ = 0;
  for (std::size_t i = coarseHead_; i < coarse_.size(); ++i) inCoarse_[coarse_[i]] = 0;
  coarse_.clear();
  coarseHead_ = 0;
}

bool Engine::initialise() {
  freezeVariables();
  for (auto& p : props_) {
    p->initialise();
    if (failed_) break;
  }
  return propagate();
}

bool Engine::propagate() {
  while (!failed_) {
    if (eventHead_ < events_.size()) {
      Event e = events_[eventHead_++];
      ++eventsDelivered_;
      props_[e.prop]->onLiteralPruned(e.lit);
      continue;
    }
    if (coarseHead_ < coarse_.size()) {
      PropId p = coarse_[coarseHead_++];
      inCoarse_[p] = 0;
      props_[p]->propagate();
      continue;
    }
    break;
  }
  clearQueues();
  return !failed_;
}

void Engine::pushNode() {
  markers_.push_back(trail_.size());
  for (Propagator* p : nodeProps_) p->nodePushed();
}

void Engine::backtrackNode() {
  assert(!markers_.empty());
  std::size_t mark = markers_.back();
  markers_.pop_back();
  clearQueues();
  while (trail_.size() > mark) {
    TrailEntry t = trail_.back();
    trail_.pop_back();
    if (t.owner < 0)
      dom_.restore(t.a, t.b);
    else
      props_[t.owner]->undo(t.a, t.b);
  }
  failed_ = false;
  for (auto it = nodeProps_.rbegin(); it != nodeProps_.rend(); ++it) (*it)->nodeBacktracked();
}

} // namespace ssgac
