#include "ssgac/suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ssgac/engine.hpp"
#include "ssgac/haggisgac_stable.hpp"
#include "ssgac/search.hpp"
#include "ssgac/sources.hpp"
#include "ssgac/verification.hpp"

namespace ssgac {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<int> randomSubset(std::mt19937_64& rng, const std::vector<int>& from, double keep) {
  std::vector<int> out;
  for (int v : from)
    if (chance(rng, keep)) out.push_back(v);
  if (out.empty()) out.push_back(from[uniform(rng, 0, static_cast<int>(from.size()) - 1)]);
  return out;
}

std::vector<int> range(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

std::vector<VarId> iota(int n) {
  std::vector<VarId> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

ScopeDomains engineDomains(const Engine& e, std::span<const VarId> scope) { return scopeDomains(e.domains(), scope); }

std::string show(const ScopeDomains& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << (i ? " " : "") << "{";
    for (std::size_t k = 0; k < d[i].size(); ++k) os << (k ? "," : "") << d[i][k];
    os << "}";
  }
  return os.str();
}

bool anyEmpty(const ScopeDomains& d) {
  return std::any_of(d.begin(), d.end(), [](const std::vector<int>& x) { return x.empty(); });
}

class OracleCache {
public:
  explicit OracleCache(const ConstraintDef& c) : c_(c) {}
  const ScopeDomains& gac(const ScopeDomains& d) {
    auto it = memo_.find(d);
    if (it == memo_.end()) it = memo_.emplace(d, bruteForceGAC(c_, d)).first;
    return it->second;
  }

private:
  const ConstraintDef& c_;
  std::map<ScopeDomains, ScopeDomains> memo_;
};

Atom randomAtom(std::mt19937_64& rng, int arity, int d) {
  int a = uniform(rng, 0, arity - 1);
  int b = uniform(rng, 0, arity - 2);
  if (b >= a) ++b;
  switch (uniform(rng, 0, 2)) {
  case 0: return Atom::eqConst(a, uniform(rng, 0, d - 1));
  case 1: return Atom::eq(a, b);
  default: return Atom::leqOffset(a, uniform(rng, 0, 2), b);
  }
}

} // namespace

RandomCase randomCase(ConstraintKind kind, std::mt19937_64& rng, int maxDomain) {
  RandomCase rc;
  const int d = uniform(rng, 2, std::max(2, maxDomain));
  switch (kind) {
  case ConstraintKind::Element: {
    const int m = uniform(rng, 1, 3);
    for (int i = 0; i < m; ++i) rc.initial.push_back(randomSubset(rng, range(d), 0.8));
    rc.initial.push_back(randomSubset(rng, range(m + 1), 0.8));
    rc.initial.push_back(randomSubset(rng, range(d), 0.8));
    auto s = iota(m);
    rc.def = makeElement(s, m, m + 1);
    break;
  }
  case ConstraintKind::LexLeq: {
    const int n = uniform(rng, 1, 4);
    for (int i = 0; i < 2 * n; ++i) rc.initial.push_back(randomSubset(rng, range(d), 0.8));
    auto s = iota(2 * n);
    rc.def = makeLexLeq(std::span<const VarId>(s).first(n), std::span<const VarId>(s).subspan(n));
    break;
  }
  case ConstraintKind::RectNonOverlap: {
    for (int i = 0; i < 4; ++i) rc.initial.push_back(randomSubset(rng, range(d), 0.8));
    rc.def = makeRectNonOverlap(0, 1, 2, 3, uniform(rng, 1, 3), uniform(rng, 1, 3));
    break;
  }
  case ConstraintKind::Table: {
    const int arity = uniform(rng, 3, 4);
    for (int i = 0; i < arity; ++i) rc.initial.push_back(randomSubset(rng, range(d), 0.85));
    std::vector<LiteralSet> sups;
    const int ns = chance(rng, 0.05) ? 0 : uniform(rng, 1, 10);
    for (int s = 0; s < ns; ++s) {
      LiteralSet sup;
      for (int i = 0; i < arity; ++i)
        if (!chance(rng, 0.35)) sup.push_back({i, uniform(rng, 0, d - 1)});
      sups.push_back(sup);
    }
    std::sort(sups.begin(), sups.end());
    sups.erase(std::unique(sups.begin(), sups.end()), sups.end());
    rc.def = makeTable(iota(arity), sups);
    break;
  }
  case ConstraintKind::Disjunction: {
    const int arity = 3;
    for (int i = 0; i < arity; ++i) rc.initial.push_back(randomSubset(rng, range(d), 0.85));
    std::vector<Conjunction> ds(uniform(rng, 1, 3));
    for (auto& conj : ds) {
      int atoms = uniform(rng, 1, 2);
      for (int a = 0; a < atoms; ++a) conj.push_back(randomAtom(rng, arity, d));
    }
    rc.def = makeDisjunction(iota(arity), ds);
    break;
  }
  default: throw std::invalid_argument("no random generator for this kind");
  }
  for (const auto& dom : rc.initial) rc.current.push_back(randomSubset(rng, dom, 0.75));
  return rc;
}

std::vector<Model> acceptanceModels() {
  return {buildQG3(2), buildQG3(3), buildQG3(4), buildBIBD(1), buildRectPack(2, 3, 3), buildRectPack(3, 5, 4)};
}

namespace {

// Builds an engine over rc.initial with one constraint posted, then narrows to rc.current.
std::unique_ptr<Engine> buildSingle(const RandomCase& rc, const PropagatorConfig& cfg, Propagator** out) {
  auto e = std::make_unique<Engine>();
  for (const auto& dom : rc.initial) e->addVariable(dom);
  Propagator& p = post(*e, rc.def, cfg);
  if (out) *out = &p;
  for (int i = 0; i < static_cast<int>(rc.initial.size()); ++i)
    for (int v : rc.initial[i])
      if (!std::binary_search(rc.current[i].begin(), rc.current[i].end(), v)) e->prune(i, v);
  return e;
}

// Compares the engine after propagation with the oracle fixpoint of before.
bool matchesOracle(const Engine& e, const RandomCase& rc, OracleCache& oracle, const ScopeDomains& before,
                   std::string& why) {
  const ScopeDomains& want = oracle.gac(before);
  if (e.failed()) {
    if (anyEmpty(want)) return true;
    why = "failed but oracle gives " + show(want);
    return false;
  }
  ScopeDomains got = engineDomains(e, rc.def.scope);
  if (anyEmpty(want)) {
    why = "oracle wipes out but propagator left " + show(got);
    return false;
  }
  if (got != want) {
    why = "got " + show(got) + " want " + show(want);
    return false;
  }
  return true;
}

// Random prune/backtrack walk; decisions depend only on walkSeed and the domains.
bool walk(Engine& e, const RandomCase& rc, OracleCache& oracle, std::uint64_t walkSeed, int steps,
          const Propagator* audited, std::string& why) {
  std::mt19937_64 rng(walkSeed);
  std::vector<ScopeDomains> snaps{engineDomains(e, rc.def.scope)};
  const int n = rc.def.arity();
  for (int s = 0; s < steps; ++s) {
    bool back = e.depth() > 0 && (e.failed() || chance(rng, 0.3));
    std::vector<int> open;
    if (!back) {
      for (int i = 0; i < n; ++i)
        if (e.domains().size(rc.def.scope[i]) > 1) open.push_back(i);
      if (open.empty()) {
        if (e.depth() == 0) return true;
        back = true;
      }
    }
    if (back) {
      e.backtrackNode();
      snaps.pop_back();
      if (engineDomains(e, rc.def.scope) != snaps.back()) {
        why = "backtrack did not restore " + show(snaps.back());
        return false;
      }
      continue;
    }
    int i = open[uniform(rng, 0, static_cast<int>(open.size()) - 1)];
    std::vector<int> vals = e.domains().values(rc.def.scope[i]);
    int v = vals[uniform(rng, 0, static_cast<int>(vals.size()) - 1)];
    e.pushNode();
    e.prune(rc.def.scope[i], v);
    ScopeDomains before = engineDomains(e, rc.def.scope);
    e.propagate();
    if (!matchesOracle(e, rc, oracle, before, why)) {
      why = "after pruning " + std::to_string(i) + "->" + std::to_string(v) + ": " + why;
      return false;
    }
    if (audited && !e.failed()) {
      std::string a = auditPropagatorState(*audited);
      if (!a.empty()) {
        why = "state audit: " + a;
        return false;
      }
    }
    snaps.push_back(engineDomains(e, rc.def.scope));
  }
  return true;
}

} // namespace

SuiteReport runGacEquivalenceSuite(ConstraintKind kind, int cases, std::uint64_t seed,
                                   const std::vector<PropagatorConfig>& configs) {
  SuiteReport r;
  r.name = std::string("gac-equivalence/") + kindName(kind);
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    RandomCase rc = randomCase(kind, rng);
    OracleCache oracle(rc.def);
    const std::uint64_t walkSeed = rng();
    ++r.cases;
    for (const PropagatorConfig& cfg : configs) {
      std::string why;
      try {
        Propagator* p = nullptr;
        auto e = buildSingle(rc, cfg, &p);
        ScopeDomains before = engineDomains(*e, rc.def.scope);
        e->initialise();
        bool ok = matchesOracle(*e, rc, oracle, before, why);
        if (ok && !e->failed()) ok = walk(*e, rc, oracle, walkSeed, 12, p, why);
        if (!ok) r.fail(cfg.label() + " on " + rc.def.describe() + " from " + show(rc.current) + ": " + why);
      } catch (const std::exception& ex) {
        r.fail(cfg.label() + " threw: " + ex.what());
      }
    }
  }
  return r;
}

SuiteReport runSupportValiditySuite(int queries, std::uint64_t seed) {
  SuiteReport r;
  r.name = "support-validity";
  std::mt19937_64 rng(seed);
  const ConstraintKind kinds[] = {ConstraintKind::Element, ConstraintKind::LexLeq, ConstraintKind::RectNonOverlap,
                                  ConstraintKind::Table, ConstraintKind::Disjunction};
  const Instantiation insts[] = {Instantiation::Specific, Instantiation::List, Instantiation::NDList,
                                 Instantiation::Long};
  while (r.cases < queries) {
    RandomCase rc = randomCase(kinds[uniform(rng, 0, 4)], rng);
    const Instantiation inst = insts[uniform(rng, 0, 3)];
    const bool stable = chance(rng, 0.5);
    DomainStore d;
    for (const auto& dom : rc.initial) d.addVariable(dom);
    auto src = makeSource(rc.def, d, inst, stable);
    for (int i = 0; i < rc.def.arity(); ++i)
      for (int v : rc.initial[i])
        if (!std::binary_search(rc.current[i].begin(), rc.current[i].end(), v)) d.erase(i, v);
    OracleCache oracle(rc.def);
    const ScopeDomains& gac = oracle.gac(rc.current);
    LiteralSet out;
    for (int q = 0; q < 12; ++q) {
      const int var = uniform(rng, 0, rc.def.arity() - 1);
      const auto& dom = rc.current[var];
      const int val = dom[uniform(rng, 0, static_cast<int>(dom.size()) - 1)];
      ++r.cases;
      std::string where = std::string(src->name()) + " " + rc.def.describe() + " on " + show(rc.current) +
                          " query " + std::to_string(var) + "->" + std::to_string(val);
      if (src->find(d, var, val, out)) {
        if (!supportsLiteral(out, var, val)) r.fail(where + ": answer does not support the literal");
        else if (isShortSupport(rc.def, rc.current, out) != Verdict::Yes) r.fail(where + ": answer is not a short support");
        else if (inst == Instantiation::Long && static_cast<int>(out.size()) != rc.def.arity())
          r.fail(where + ": long answer is not full length");
      } else if (std::binary_search(gac[var].begin(), gac[var].end(), val)) {
        r.fail(where + ": NULL but a full-length support exists");
      }
    }
  }
  return r;
}

SuiteReport runStabilitySuite(int cases, std::uint64_t seed) {
  SuiteReport r;
  r.name = "backtrack-stability";
  std::mt19937_64 rng(seed);
  std::int64_t elementLex = 0, rectEmptyUnstable = 0, stableChecked = 0;
  LiteralSet out;
  auto narrowed = [](const RandomCase& rc) {
    DomainStore d;
    for (const auto& dom : rc.initial) d.addVariable(dom);
    for (int i = 0; i < static_cast<int>(rc.initial.size()); ++i)
      for (int v : rc.initial[i])
        if (!std::binary_search(rc.current[i].begin(), rc.current[i].end(), v)) d.erase(i, v);
    return d;
  };
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    {
      RandomCase rc = randomCase(c % 2 ? ConstraintKind::LexLeq : ConstraintKind::Element, rng);
      DomainStore d = narrowed(rc);
      auto src = makeSpecificSource(rc.def, false);
      for (int var = 0; var < rc.def.arity(); ++var)
        for (int val : rc.current[var]) {
          if (!src->find(d, var, val, out)) continue;
          ++elementLex;
          if (isBacktrackStable(rc.def, rc.initial, out).verdict != Verdict::Yes)
            r.fail(std::string(src->name()) + " answer for " + rc.def.describe() + " not stable under " +
                   show(rc.initial));
        }
    }
    {
      RandomCase rc = randomCase(ConstraintKind::RectNonOverlap, rng);
      DomainStore d = narrowed(rc);
      RectSource plain(rc.def, false), stable(rc.def, true);
      const bool offRoot = rc.current != rc.initial;
      for (int var = 0; var < 4; ++var)
        for (int val : rc.current[var]) {
          if (plain.find(d, var, val, out) && out.empty() &&
              isBacktrackStable(rc.def, rc.initial, out).verdict == Verdict::No)
            ++rectEmptyUnstable;
          if (stable.find(d, var, val, out)) {
            ++stableChecked;
            if (offRoot && out.empty()) r.fail("stable rect source answered {} below the root");
            else if (isBacktrackStable(rc.def, rc.initial, out).verdict != Verdict::Yes)
              r.fail("stable rect answer fails the initial-domain condition");
          }
        }
    }
  }
  if (rectEmptyUnstable == 0) r.fail("no rect empty support failing the initial-domain condition was exhibited");
  std::ostringstream os;
  os << "element/lex answers " << elementLex << ", unstable rect {} answers " << rectEmptyUnstable
     << ", stable rect answers " << stableChecked;
  if (r.detail.empty()) r.detail = os.str();
  return r;
}

SuiteReport runLemmaFuzzSuite(int events, std::uint64_t seed) {
  SuiteReport r;
  r.name = "lemma-fuzz";
  std::mt19937_64 rng(seed);
  std::int64_t deletions = 0;
  const PropagatorKind props[] = {PropagatorKind::HaggisGac, PropagatorKind::ShortGac,
                                  PropagatorKind::HaggisGacStable};
  int round = 0;
  while (r.cases < events) {
    RandomCase rc;
    do {
      rc = randomCase(ConstraintKind::Table, rng);
    } while (rc.def.arity() != 4);
    PropagatorConfig cfg{props[round % 3], round % 2 ? Instantiation::List : Instantiation::Specific, true};
    ++round;
    OracleCache oracle(rc.def);
    Propagator* p = nullptr;
    auto e = buildSingle(rc, cfg, &p);
    ScopeDomains before = engineDomains(*e, rc.def.scope);
    e->initialise();
    std::string why;
    if (!matchesOracle(*e, rc, oracle, before, why)) {
      r.fail(cfg.label() + ": " + why);
      continue;
    }
    if (e->failed()) continue;
    const int steps = 40;
    if (!walk(*e, rc, oracle, rng(), steps, p, why)) r.fail(cfg.label() + " " + rc.def.describe() + ": " + why);
    r.cases += steps;
    LemmaAuditTotals t = lemmaAuditTotals(*e);
    deletions += t.deletions;
    if (t.failures > 0) r.fail(cfg.label() + " region audit: " + t.firstFailure);
  }
  if (deletions == 0) r.fail("no deletions were audited");
  if (r.detail.empty()) r.detail = "audited deletions " + std::to_string(deletions);
  return r;
}

SuiteReport runSearchInvarianceSuite(const std::vector<Model>& models, const std::vector<PropagatorConfig>& configs,
                                     bool compareOracle) {
  SuiteReport r;
  r.name = compareOracle ? "oracle-counts" : "search-invariance";
  SearchLimits lim;
  lim.nodeLimit = 50'000'000;
  lim.recordSolutions = true;
  lim.solutionLimit = 10'000'000;
  std::ostringstream summary;
  for (const Model& m : models) {
    bool haveRef = false;
    SearchStats ref;
    std::string refLabel;
    for (const PropagatorConfig& cfg : configs) {
      ++r.cases;
      Instance inst = instantiate(m, cfg);
      SearchStats s = solveAllSolutions(*inst.engine, m.branchOrder, m.constraints, lim);
      std::sort(s.solutionList.begin(), s.solutionList.end());
      const std::string where = m.id + " " + cfg.label();
      if (s.limitHit()) r.fail(where + ": search hit a limit");
      if (s.invalidSolutions) r.fail(where + ": reported invalid solutions");
      if (!haveRef) {
        ref = std::move(s);
        refLabel = cfg.label();
        haveRef = true;
        continue;
      }
      if (s.nodes != ref.nodes)
        r.fail(where + ": " + std::to_string(s.nodes) + " nodes vs " + std::to_string(ref.nodes) + " for " + refLabel);
      if (s.solutionList != ref.solutionList) r.fail(where + ": solution multiset differs from " + refLabel);
    }
    summary << m.id << " nodes=" << ref.nodes << " solutions=" << ref.solutions << "; ";
    if (compareOracle) {
      ++r.cases;
      auto oracle = bruteForceSolveAll(m);
      if (oracle != ref.solutionList)
        r.fail(m.id + ": oracle finds " + std::to_string(oracle.size()) + " solutions, solver " +
               std::to_string(ref.solutionList.size()));
    }
  }
  if (r.detail.empty()) r.detail = summary.str();
  return r;
}

SuiteReport runGaugeSuite(const std::vector<Model>& models) {
  SuiteReport r;
  r.name = "stable-gauge";
  double worst = 0;
  for (const Model& m : models)
    for (auto inst : {Instantiation::Specific, Instantiation::List, Instantiation::NDList, Instantiation::Long}) {
      PropagatorConfig cfg{PropagatorKind::HaggisGacStable, inst};
      Instance in = instantiate(m, cfg);
      solveAllSolutions(*in.engine, m.branchOrder, m.constraints);
      for (Propagator* p : in.targets) {
        ++r.cases;
        auto* s = dynamic_cast<HaggisGacStable*>(p);
        const std::int64_t bound = 2 * static_cast<std::int64_t>(s->literalCount());
        worst = std::max(worst, static_cast<double>(s->peakStoredSupports()) / bound);
        if (s->boundViolations() > 0 || s->peakStoredSupports() > bound)
          r.fail(m.id + " " + cfg.label() + ": peak " + std::to_string(s->peakStoredSupports()) + " > 2z = " +
                 std::to_string(bound));
      }
    }
  if (r.detail.empty()) {
    std::ostringstream os;
    os << "largest peak/2z ratio " << worst;
    r.detail = os.str();
  }
  return r;
}

SuiteReport runLemmaSearchSuite(const std::vector<Model>& models) {
  SuiteReport r;
  r.name = "lemma-search";
  std::int64_t deletions = 0;
  for (const Model& m : models)
    for (auto prop : {PropagatorKind::ShortGac, PropagatorKind::HaggisGac, PropagatorKind::HaggisGacStable})
      for (auto inst : {Instantiation::Specific, Instantiation::List, Instantiation::NDList, Instantiation::Long}) {
        ++r.cases;
        PropagatorConfig cfg{prop, inst, true};
        Instance in = instantiate(m, cfg);
        solveAllSolutions(*in.engine, m.branchOrder, m.constraints);
        LemmaAuditTotals t = lemmaAuditTotals(*in.engine);
        deletions += t.deletions;
        if (t.failures) r.fail(m.id + " " + cfg.label() + ": " + t.firstFailure);
      }
  if (deletions == 0) r.fail("no deletions were audited");
  if (r.detail.empty()) r.detail = "audited deletions " + std::to_string(deletions);
  return r;
}

std::vector<std::string> suiteNames() {
  return {"gac", "support", "stability", "lemma-fuzz", "search", "oracle", "gauge", "lemmas", "all"};
}

std::vector<SuiteReport> runNamedSuite(const std::string& name, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  const bool all = name == "all";
  bool known = false;
  if (all || name == "gac") {
    known = true;
    for (auto k : {ConstraintKind::Element, ConstraintKind::LexLeq, ConstraintKind::RectNonOverlap,
                   ConstraintKind::Table})
      out.push_back(runGacEquivalenceSuite(k, 1000, seed, allGacConfigs()));
  }
  if (all || name == "support") {
    known = true;
    out.push_back(runSupportValiditySuite(10'000, seed));
  }
  if (all || name == "stability") {
    known = true;
    out.push_back(runStabilitySuite(1000, seed));
  }
  if (all || name == "lemma-fuzz") {
    known = true;
    out.push_back(runLemmaFuzzSuite(10'000, seed));
  }
  if (all || name == "search") {
    known = true;
    out.push_back(runSearchInvarianceSuite(acceptanceModels(), allGacConfigs(), false));
  }
  if (all || name == "oracle") {
    known = true;
    out.push_back(runSearchInvarianceSuite(acceptanceModels(), {PropagatorConfig{}}, true));
  }
  if (all || name == "gauge") {
    known = true;
    out.push_back(runGaugeSuite(acceptanceModels()));
  }
  if (all || name == "lemmas") {
    known = true;
    out.push_back(runLemmaSearchSuite(acceptanceModels()));
  }
  if (!known) throw std::invalid_argument("unknown suite " + name);
  return out;
}

} // namespace ssgac
