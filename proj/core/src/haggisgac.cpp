#include "ssgac/haggisgac.hpp"

namespace ssgac {

HaggisGac::HaggisGac(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source, HaggisOptions opt)
    : ShortSupportPropagator(e, std::move(def), std::move(source),
                             ShortSupportOptions{opt.stripAssigned, opt.fullLengthFastPath, opt.auditLemmas}),
      insideLoop_(opt.updatesInsideLoop) {}

void HaggisGac::initialise() {
  ensureRegistered();
  litsLost_.clear();
  varsLost_.clear();
  for (int x = 0; x < index_.arity(); ++x) {
    variableUpdate(x);
    if (engine_.failed()) return;
  }
  notePeak();
}

void HaggisGac::listEmptied(LitId lit, SupportId, bool lacksImplicit) {
  // Invalid literals would be skipped by literalUpdate anyway.
  if (lacksImplicit && valid(lit)) litsLost_.push_back(lit);
}

void HaggisGac::implicitSupportLost(int var, SupportId) { varsLost_.push_back(var); }

void HaggisGac::onLiteralPruned(LitId lit) {
  litsLost_.clear();
  varsLost_.clear();
  std::size_t litFrom = 0, varFrom = 0;
  while (!index_.listEmpty(lit)) {
    SupportId s = index_.firstSupport(lit);
    index_.remove(s, this);
    trailDelete(s);
    if (insideLoop_) {
      runUpdates(litFrom, varFrom);
      if (engine_.failed()) return;
    }
  }
  runUpdates(litFrom, varFrom);
  notePeak();
}

void HaggisGac::runUpdates(std::size_t& litFrom, std::size_t& varFrom) {
  for (; litFrom < litsLost_.size(); ++litFrom) {
    literalUpdate(litsLost_[litFrom]);
    if (engine_.failed()) return;
  }
  for (; varFrom < varsLost_.size(); ++varFrom) {
    variableUpdate(varsLost_[varFrom]);
    if (engine_.failed()) return;
  }
}

void HaggisGac::addFound(SupportId s) {
  index_.add(s);
  trailAdd(s);
}

void HaggisGac::literalUpdate(LitId l) {
  ++literalUpdates_;
  const int x = lits_.var(l);
  if (valid(l) && !index_.implicitlySupported(x) && index_.listEmpty(l)) {
    SupportId s = findNewSupport(l);
    if (s == kNoSupport)
      pruneLiteral(l);
    else
      addFound(s);
  }
}

void HaggisGac::variableUpdate(int x) {
  ++variableUpdates_;
  for (int i = 0; i < index_.zeroLitsSize(x);) {
    if (index_.implicitlySupported(x)) return;
    LitId l = index_.zeroLitAt(x, i);
    if (!index_.listEmpty(l)) {
      index_.removeZeroLitAt(x, i);
      continue;
    }
    if (valid(l)) {
      SupportId s = findNewSupport(l);
      if (s == kNoSupport) {
        pruneLiteral(l);
        if (engine_.failed()) return;
      } else {
        addFound(s);
      }
    }
    ++i;
  }
}

void HaggisGac::undo(std::int32_t op, std::int32_t sup) {
  if (op == kAdded) {
    index_.remove(sup);
    index_.reclaim(sup);
  } else {
    index_.add(sup);
  }
}

} // namespace ssgac
