#pragma once

#include "ssgac/short_support_propagator.hpp"

namespace ssgac {

class ShortGac final : public ShortSupportPropagator {
public:
  ShortGac(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source, ShortSupportOptions opt = {});

  std::string_view name() const override { return "shortgac"; }
  void initialise() override;
  void onLiteralPruned(LitId lit) override;
  void undo(std::int32_t op, std::int32_t sup) override;

  // Exits where no support was active and no domain was empty.
  std::int64_t emptySupportExits() const { return emptySupportExits_; }

private:
  void updateLoop();
  bool variableUpdate(int x);

  std::int64_t emptySupportExits_ = 0;
};

} // namespace ssgac
