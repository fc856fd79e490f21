#include "ssgac/propagator_factory.hpp"

#include <stdexcept>

#include "ssgac/baselines.hpp"
#include "ssgac/haggisgac.hpp"
#include "ssgac/haggisgac_stable.hpp"
#include "ssgac/shortgac.hpp"

namespace ssgac {

const char* propagatorName(PropagatorKind k) {
  switch (k) {
  case PropagatorKind::ShortGac: return "shortgac";
  case PropagatorKind::HaggisGac: return "haggisgac";
  case PropagatorKind::HaggisGacStable: return "haggisgac-stable";
  case PropagatorKind::GacSchema: return "gac-schema";
  case PropagatorKind::ConstructiveOr: return "constructive-or";
  case PropagatorKind::Builtin: return "builtin";
  }
  return "?";
}

PropagatorKind parsePropagator(const std::string& s) {
  for (auto k : {PropagatorKind::ShortGac, PropagatorKind::HaggisGac, PropagatorKind::HaggisGacStable,
                 PropagatorKind::GacSchema, PropagatorKind::ConstructiveOr, PropagatorKind::Builtin})
    if (s == propagatorName(k)) return k;
  throw std::invalid_argument("unknown propagator " + s);
}

Instantiation parseInstantiation(const std::string& s) {
  for (auto i : {Instantiation::Specific, Instantiation::List, Instantiation::NDList, Instantiation::Long})
    if (s == instantiationName(i)) return i;
  throw std::invalid_argument("unknown instantiation " + s);
}

namespace {
bool isShortSupportKind(PropagatorKind k) {
  return k == PropagatorKind::ShortGac || k == PropagatorKind::HaggisGac || k == PropagatorKind::HaggisGacStable;
}
} // namespace

std::string PropagatorConfig::label() const {
  std::string s = propagatorName(prop);
  if (isShortSupportKind(prop) || (prop == PropagatorKind::GacSchema && inst == Instantiation::List))
    s += std::string("-") + instantiationName(inst);
  return s;
}

std::vector<PropagatorConfig> allGacConfigs() {
  std::vector<PropagatorConfig> out;
  for (auto k : {PropagatorKind::ShortGac, PropagatorKind::HaggisGac, PropagatorKind::HaggisGacStable})
    for (auto i : {Instantiation::Specific, Instantiation::List, Instantiation::NDList, Instantiation::Long})
      out.push_back({k, i});
  out.push_back({PropagatorKind::GacSchema});
  out.push_back({PropagatorKind::ConstructiveOr});
  out.push_back({PropagatorKind::Builtin});
  return out;
}

Propagator& post(Engine& e, const ConstraintDef& c, const PropagatorConfig& cfg) {
  const DomainStore& d = e.domains();
  switch (cfg.prop) {
  case PropagatorKind::ShortGac: {
    ShortSupportOptions o;
    o.auditLemmas = cfg.auditLemmas;
    return e.emplace<ShortGac>(c, makeSource(c, d, cfg.inst, false, cfg.listCap), o);
  }
  case PropagatorKind::HaggisGac: {
    HaggisOptions o;
    o.auditLemmas = cfg.auditLemmas;
    return e.emplace<HaggisGac>(c, makeSource(c, d, cfg.inst, false, cfg.listCap), o);
  }
  case PropagatorKind::HaggisGacStable: {
    StableOptions o;
    o.auditLemmas = cfg.auditLemmas;
    return e.emplace<HaggisGacStable>(c, makeSource(c, d, cfg.inst, true, cfg.listCap), o);
  }
  case PropagatorKind::GacSchema:
    if (cfg.inst == Instantiation::List)
      return e.emplace<GacSchema>(c, nullptr, GacSchema::Mode::List, cfg.listCap);
    return e.emplace<GacSchema>(c, makeSpecificSource(c, false), GacSchema::Mode::Functional, cfg.listCap);
  case PropagatorKind::ConstructiveOr: return e.emplace<ConstructiveOr>(c);
  case PropagatorKind::Builtin: return e.add(makeBuiltin(e, c));
  }
  throw std::invalid_argument("unknown propagator kind");
}

Instance instantiate(const Model& m, const PropagatorConfig& cfg) {
  Instance inst;
  inst.engine = std::make_unique<Engine>();
  Engine& e = *inst.engine;
  for (const auto& v : m.variables) e.addVariable(v.domain);
  const PropagatorConfig builtin{PropagatorKind::Builtin};
  for (std::size_t k = 0; k < m.constraints.size(); ++k) {
    if (m.target[k])
      inst.targets.push_back(&post(e, m.constraints[k], cfg));
    else
      post(e, m.constraints[k], builtin);
  }
  return inst;
}

} // namespace ssgac
