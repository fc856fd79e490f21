#include "ssgac/short_support_propagator.hpp"

#include <cassert>

namespace ssgac {

ShortSupportPropagator::ShortSupportPropagator(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source,
                                               ShortSupportOptions opt)
    : Propagator(e),
      def_(std::move(def)),
      lits_(e.domains(), def_.scope),
      source_(std::move(source)),
      opt_(opt),
      index_(lits_, this, opt.fullLengthFastPath) {
  index_.setLemmaAudit(opt.auditLemmas);
}

void ShortSupportPropagator::ensureRegistered() {
  if (slotBase_ < 0) slotBase_ = engine_.registerScope(id(), lits_, def_.scope);
}

void ShortSupportPropagator::pruneLiteral(LitId l) {
  engine_.prune(def_.scope[lits_.var(l)], lits_.val(l));
}

SupportId ShortSupportPropagator::findNewSupport(LitId l) {
  ++sourceCalls_;
  if (!source_->find(engine_.domains(), lits_.var(l), lits_.val(l), buf_)) return kNoSupport;
  const int original = static_cast<int>(buf_.size());
  litBuf_.clear();
  const DomainStore& d = engine_.domains();
  for (const Literal& lit : buf_) {
    assert(d.contains(def_.scope[lit.var], lit.val));
    if (opt_.stripAssigned && d.assigned(def_.scope[lit.var])) continue;
    litBuf_.push_back(lits_.encode(lit));
  }
  return index_.allocate(litBuf_, original);
}

SupportId ShortSupportPropagator::installSupport(std::span<const Literal> lits) {
  ensureRegistered();
  litBuf_.clear();
  for (const Literal& l : lits) litBuf_.push_back(lits_.encode(l));
  SupportId s = index_.allocate(litBuf_, static_cast<int>(lits.size()));
  index_.add(s);
  if (trailsSupports()) trailAdd(s);
  notePeak();
  return s;
}

std::string ShortSupportPropagator::audit() const {
  IndexAuditOptions opt;
  opt.hasTrigger = [this](LitId l) { return slotBase_ >= 0 && engine_.hasTrigger(slotBase_ + l); };
  return index_.audit(opt);
}

} // namespace ssgac
