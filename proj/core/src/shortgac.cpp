#include "ssgac/shortgac.hpp"

namespace ssgac {

ShortGac::ShortGac(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source, ShortSupportOptions opt)
    : ShortSupportPropagator(e, std::move(def), std::move(source), [&] {
        opt.fullLengthFastPath = false;
        return opt;
      }()) {}

void ShortGac::initialise() {
  ensureRegistered();
  updateLoop();
}

void ShortGac::onLiteralPruned(LitId lit) {
  if (index_.listEmpty(lit)) return;
  while (!index_.listEmpty(lit)) {
    SupportId s = index_.firstSupport(lit);
    index_.remove(s);
    trailDelete(s);
  }
  updateLoop();
}

void ShortGac::updateLoop() {
  bool again = true;
  while (again) {
    again = false;
    const int ns = index_.numSupports();
    const int lo = index_.partition().lowIdx(ns);
    const int hi = index_.partition().lowIdx(ns + 1);
    for (int i = lo; i < hi; ++i) {
      if (variableUpdate(index_.partition().varAt(i))) {
        again = true;
        break;
      }
      if (engine_.failed()) return;
    }
  }
  notePeak();
  if (opt_.auditLemmas && index_.numSupports() == 0 && !engine_.failed()) ++emptySupportExits_;
}

bool ShortGac::variableUpdate(int x) {
  for (int i = 0; i < index_.zeroLitsSize(x);) {
    LitId l = index_.zeroLitAt(x, i);
    if (!index_.listEmpty(l)) {
      index_.removeZeroLitAt(x, i);
      continue;
    }
    if (valid(l)) {
      SupportId s = findNewSupport(l);
      if (s == kNoSupport) {
        pruneLiteral(l);
        if (engine_.failed()) return false;
      } else {
        index_.add(s);
        trailAdd(s);
        if (!index_.listEmpty(l)) index_.removeZeroLitAt(x, i);
        return true;
      }
    }
    ++i;
  }
  return false;
}

void ShortGac::undo(std::int32_t op, std::int32_t sup) {
  if (op == kAdded) {
    index_.remove(sup);
    index_.reclaim(sup);
  } else {
    index_.add(sup);
  }
}

} // namespace ssgac
