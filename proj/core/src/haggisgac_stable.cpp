#include "ssgac/haggisgac_stable.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssgac {

namespace {
std::unique_ptr<SupportSource> requireStable(std::unique_ptr<SupportSource> s) {
  if (!s || !s->backtrackStable())
    throw std::invalid_argument("haggisgac-stable needs a backtrack-stable support source");
  return s;
}
} // namespace

HaggisGacStable::HaggisGacStable(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source,
                                 StableOptions opt)
    : ShortSupportPropagator(e, std::move(def), requireStable(std::move(source)),
                             ShortSupportOptions{false, opt.fullLengthFastPath, opt.auditLemmas}),
      z_(countInitialLiterals(e.domains(), def_.scope)),
      lastPerLit_(lits_.numLiterals(), kNoSupport),
      lastPerVar_(lits_.arity(), kNoSupport) {
  stack_.push_back({-1, kNoSupport});
}

void HaggisGacStable::initialise() {
  ensureRegistered();
  initialising_ = true;
  for (int x = 0; x < index_.arity(); ++x) {
    variableUpdate(x);
    if (engine_.failed()) break;
  }
  initialising_ = false;
  checkGauge();
}

void HaggisGacStable::listEmptied(LitId lit, SupportId sup, bool lacksImplicit) {
  lastPerLit_[lit] = sup;
  if (lacksImplicit) litsLost_.push_back(lit);
}

void HaggisGacStable::implicitSupportLost(int var, SupportId sup) {
  lastPerVar_[var] = sup;
  varsLost_.push_back(var);
}

void HaggisGacStable::onLiteralPruned(LitId lit) {
  litsLost_.clear();
  varsLost_.clear();
  deleted_.clear();
  while (!index_.listEmpty(lit)) {
    SupportId s = index_.firstSupport(lit);
    index_.remove(s, this);
    ShortSupport& sup = index_.support(s);
    sup.numPrimeSupported = 0;
    sup.restored = false;
    deleted_.push_back(s);
  }
  for (LitId l : litsLost_) literalUpdate(l);
  for (int x : varsLost_) variableUpdate(x);
  for (SupportId s : deleted_) {
    const ShortSupport& sup = index_.support(s);
    if (!sup.active && !sup.pooled && sup.numPrimeSupported == 0) index_.reclaim(s);
  }
  checkGauge();
}

SupportId HaggisGacStable::seek(LitId l) {
  // After a wipeout the node is abandoned; bookkeeping continues without queries.
  if (engine_.failed()) return kNoSupport;
  return findNewSupport(l);
}

void HaggisGacStable::pushPair(LitId l, SupportId s) {
  if (s == kNoSupport) return;
  ++index_.support(s).numPrimeSupported;
  stack_.push_back({l, s});
}

void HaggisGacStable::literalUpdate(LitId l) {
  const int x = lits_.var(l);
  if (valid(l)) {
    if (!index_.implicitlySupported(x) && index_.listEmpty(l)) {
      SupportId s = seek(l);
      if (s == kNoSupport) {
        if (!engine_.failed()) pruneLiteral(l);
        pushPair(l, lastPerLit_[l]);
      } else {
        index_.add(s);
      }
    }
  } else {
    pushPair(l, lastPerLit_[l]);
  }
}

void HaggisGacStable::variableUpdate(int x) {
  for (int i = 0; i < index_.zeroLitsSize(x);) {
    if (index_.implicitlySupported(x)) return;
    LitId l = index_.zeroLitAt(x, i);
    if (!index_.listEmpty(l)) {
      index_.removeZeroLitAt(x, i);
      continue;
    }
    if (valid(l)) {
      SupportId s = seek(l);
      if (s != kNoSupport) {
        index_.add(s);
        ++i;
        continue;
      }
      if (!engine_.failed()) pruneLiteral(l);
    }
    if (initialising_) {
      // Root prunings are never undone.
      ++i;
      continue;
    }
    pushPair(l, lastPerVar_[x]);
    index_.removeZeroLitAt(x, i);
  }
}

void HaggisGacStable::nodePushed() {
  if (engine_.depth() == 1 && rootInvalid_.empty()) {
    rootInvalid_.resize(lits_.numLiterals());
    for (LitId l = 0; l < lits_.numLiterals(); ++l) rootInvalid_[l] = !valid(l);
  }
  stack_.push_back({-1, kNoSupport});
}

void HaggisGacStable::nodeBacktracked() {
  while (stack_.back().literal != -1) {
    PrimePair p = stack_.back();
    stack_.pop_back();
    const int x = lits_.var(p.literal);
    ShortSupport& sup = index_.support(p.support);
    if (!sup.restored) {
      if (!index_.implicitlySupported(x) && index_.listEmpty(p.literal)) {
        index_.add(p.support);
        sup.restored = true;
      } else if (--sup.numPrimeSupported == 0) {
        index_.reclaim(p.support);
      }
    }
    if (index_.listEmpty(p.literal)) index_.pushZeroLit(p.literal);
  }
  stack_.pop_back();
  checkGauge();
}

void HaggisGacStable::checkGauge() {
  notePeak();
  if (index_.storedCount() > 2 * static_cast<std::int64_t>(z_)) ++boundViolations_;
}

int HaggisGacStable::maxPairsPerLiteral() const {
  std::vector<int> count(lits_.numLiterals(), 0);
  int best = 0;
  for (const PrimePair& p : stack_)
    if (p.literal >= 0) best = std::max(best, ++count[p.literal]);
  return best;
}

int HaggisGacStable::primeInvariantViolations() const {
  std::vector<std::uint8_t> onStack(lits_.numLiterals(), 0);
  for (const PrimePair& p : stack_)
    if (p.literal >= 0) onStack[p.literal] = 1;
  int bad = 0;
  for (LitId l = 0; l < lits_.numLiterals(); ++l) {
    const int x = lits_.var(l);
    if (!engine_.domains().inInitial(def_.scope[x], lits_.val(l)) || valid(l)) continue;
    if (!rootInvalid_.empty() && rootInvalid_[l]) continue;
    if (rootInvalid_.empty()) continue;
    if (!onStack[l] && !index_.implicitlySupported(x)) ++bad;
  }
  return bad;
}

std::string HaggisGacStable::audit() const {
  IndexAuditOptions opt;
  opt.hasTrigger = [this](LitId l) { return slotBase_ >= 0 && engine_.hasTrigger(slotBase_ + l); };
  opt.mayLeaveZeroLits = [this](LitId l) { return !valid(l); };
  std::string out = index_.audit(opt);
  std::int64_t expectStored = index_.activeCount();
  for (SupportId s = 0; s < index_.arenaSize(); ++s) {
    const ShortSupport& sup = index_.support(s);
    if (!sup.active && !sup.pooled) {
      ++expectStored;
      if (sup.numPrimeSupported <= 0) out += "deleted support " + std::to_string(s) + " kept without pairs; ";
    }
  }
  if (expectStored != index_.storedCount()) out += "stored count mismatch; ";
  return out;
}

} // namespace ssgac
