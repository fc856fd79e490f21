#pragma once

#include <vector>

#include "ssgac/short_support_propagator.hpp"

namespace ssgac {

struct StableOptions {
  bool fullLengthFastPath = true;
  bool auditLemmas = false;
};

struct PrimePair {
  LitId literal; // -1 marks a node sentinel
  SupportId support;
};

// Keeps active supports across backtracking; deleted supports survive only as prime supports.
class HaggisGacStable final : public ShortSupportPropagator, private DeletionObserver {
public:
  // Throws std::invalid_argument unless the source is backtrack stable.
  HaggisGacStable(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source, StableOptions opt = {});

  std::string_view name() const override { return "haggisgac-stable"; }
  void initialise() override;
  void onLiteralPruned(LitId lit) override;
  bool wantsNodeEvents() const override { return true; }
  void nodePushed() override;
  void nodeBacktracked() override;

  int literalCount() const { return z_; }
  std::int64_t boundViolations() const { return boundViolations_; }
  const std::vector<PrimePair>& backtrackStack() const { return stack_; }
  SupportId lastSupportPerLit(LitId l) const { return lastPerLit_[l]; }
  SupportId lastSupportPerVar(int x) const { return lastPerVar_[x]; }
  const std::vector<LitId>& lostExplicit() const { return litsLost_; }
  const std::vector<int>& lostImplicit() const { return varsLost_; }

  // Largest number of pairs naming one literal.
  int maxPairsPerLiteral() const;
  // Pruned literals that are neither prime-supported on the stack nor implicitly supported.
  int primeInvariantViolations() const;
  std::string audit() const override;

protected:
  bool trailsSupports() const override { return false; }

private:
  void listEmptied(LitId lit, SupportId sup, bool lacksImplicit) override;
  void implicitSupportLost(int var, SupportId sup) override;
  void literalUpdate(LitId l);
  void variableUpdate(int x);
  SupportId seek(LitId l);
  void pushPair(LitId l, SupportId s);
  void checkGauge();

  int z_;
  bool initialising_ = false;
  std::vector<PrimePair> stack_;
  std::vector<SupportId> lastPerLit_;
  std::vector<SupportId> lastPerVar_;
  std::vector<LitId> litsLost_;
  std::vector<int> varsLost_;
  std::vector<SupportId> deleted_;
  std::vector<std::uint8_t> rootInvalid_;
  std::int64_t boundViolations_ = 0;
};

} // namespace ssgac
