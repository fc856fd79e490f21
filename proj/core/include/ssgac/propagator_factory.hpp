#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ssgac/engine.hpp"
#include "ssgac/model.hpp"
#include "ssgac/sources.hpp"

namespace ssgac {

enum class PropagatorKind { ShortGac, HaggisGac, HaggisGacStable, GacSchema, ConstructiveOr, Builtin };

const char* propagatorName(PropagatorKind k);
PropagatorKind parsePropagator(const std::string& s);
Instantiation parseInstantiation(const std::string& s);

struct PropagatorConfig {
  PropagatorKind prop = PropagatorKind::HaggisGac;
  Instantiation inst = Instantiation::Specific;
  bool auditLemmas = false;
  std::size_t listCap = std::size_t{1} << 20;

  // "haggisgac-specific", "gac-schema", ...
  std::string label() const;
};

// Every short-support propagator with every instantiation, then the three baselines.
std::vector<PropagatorConfig> allGacConfigs();

struct Instance {
  std::unique_ptr<Engine> engine;
  // Propagators posted for target constraints, in model order.
  std::vector<Propagator*> targets;
};

// Posts target constraints with the configured propagator and the rest with builtins.
Instance instantiate(const Model& m, const PropagatorConfig& cfg);

// Posts one constraint with the configured propagator.
Propagator& post(Engine& e, const ConstraintDef& c, const PropagatorConfig& cfg);

} // namespace ssgac
