#pragma once

#include <memory>
#include <span>
#include <string>

#include "ssgac/constraint.hpp"
#include "ssgac/engine.hpp"
#include "ssgac/literal.hpp"
#include "ssgac/sources.hpp"
#include "ssgac/support_index.hpp"

namespace ssgac {

struct ShortSupportOptions {
  bool stripAssigned = true;
  bool fullLengthFastPath = false;
  bool auditLemmas = false;
};

// State and helpers shared by SHORTGAC, HAGGISGAC and HAGGISGAC-STABLE.
class ShortSupportPropagator : public Propagator, protected TriggerSink {
public:
  ShortSupportPropagator(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source,
                         ShortSupportOptions opt);

  const ConstraintDef& definition() const { return def_; }
  const LiteralMap& literals() const { return lits_; }
  SupportIndex& index() { return index_; }
  const SupportIndex& index() const { return index_; }
  SupportSource& source() { return *source_; }

  // Allocates and activates a support as if the source had found it. Test helper.
  SupportId installSupport(std::span<const Literal> lits);

  std::int64_t storedSupports() const override { return index_.storedCount(); }
  std::int64_t peakStoredSupports() const override { return peakStored_; }
  std::int64_t sourceCalls() const { return sourceCalls_; }

  // Empty when the index and trigger state are consistent.
  virtual std::string audit() const;

protected:
  enum TrailOp : std::int32_t { kAdded = 0, kDeleted = 1 };

  bool valid(LitId l) const { return engine_.domains().contains(def_.scope[lits_.var(l)], lits_.val(l)); }
  void pruneLiteral(LitId l);
  // Source query; allocates the result. kNoSupport when none.
  SupportId findNewSupport(LitId l);
  void trailAdd(SupportId s) { engine_.trail(id(), kAdded, s); }
  void trailDelete(SupportId s) { engine_.trail(id(), kDeleted, s); }
  void notePeak() {
    if (index_.storedCount() > peakStored_) peakStored_ = index_.storedCount();
  }
  void ensureRegistered();
  virtual bool trailsSupports() const { return true; }

  void attachLiteral(LitId l) override { engine_.attachTrigger(slotBase_ + l); }
  void detachLiteral(LitId l) override { engine_.removeTrigger(slotBase_ + l); }

  ConstraintDef def_;
  LiteralMap lits_;
  std::unique_ptr<SupportSource> source_;
  ShortSupportOptions opt_;
  SupportIndex index_;
  int slotBase_ = -1;
  std::int64_t peakStored_ = 0;
  std::int64_t sourceCalls_ = 0;
  LiteralSet buf_;
  std::vector<LitId> litBuf_;
};

} // namespace ssgac
