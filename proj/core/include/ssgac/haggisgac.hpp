#pragma once

#include <vector>

#include "ssgac/short_support_propagator.hpp"

namespace ssgac {

struct HaggisOptions {
  bool stripAssigned = true;
  bool fullLengthFastPath = true;
  bool auditLemmas = false;
  // Run the literal and variable updates after each deletion instead of after all of them.
  bool updatesInsideLoop = false;
};

class HaggisGac final : public ShortSupportPropagator, private DeletionObserver {
public:
  HaggisGac(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source, HaggisOptions opt = {});

  std::string_view name() const override { return "haggisgac"; }
  void initialise() override;
  void onLiteralPruned(LitId lit) override;
  void undo(std::int32_t op, std::int32_t sup) override;

  // Scratch sets of the most recent propagate call.
  const std::vector<LitId>& lostExplicit() const { return litsLost_; }
  const std::vector<int>& lostImplicit() const { return varsLost_; }
  std::int64_t literalUpdates() const { return literalUpdates_; }
  std::int64_t variableUpdates() const { return variableUpdates_; }

private:
  void listEmptied(LitId lit, SupportId sup, bool lacksImplicit) override;
  void implicitSupportLost(int var, SupportId sup) override;
  void runUpdates(std::size_t& litFrom, std::size_t& varFrom);
  void literalUpdate(LitId l);
  void variableUpdate(int x);
  void addFound(SupportId s);

  bool insideLoop_;
  std::vector<LitId> litsLost_;
  std::vector<int> varsLost_;
  std::int64_t literalUpdates_ = 0;
  std::int64_t variableUpdates_ = 0;
};

} // namespace ssgac
