#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ssgac/constraint.hpp"
#include "ssgac/model.hpp"
#include "ssgac/propagator_factory.hpp"

namespace ssgac {

struct SuiteReport {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string detail;

  bool passed() const { return cases > 0 && failures == 0; }
  void fail(const std::string& why) {
    ++failures;
    if (detail.empty()) detail = why;
  }
};

// A single constraint over variables 0..arity-1.
struct RandomCase {
  ConstraintDef def;
  std::vector<std::vector<int>> initial;
  std::vector<std::vector<int>> current;
};

// kind: Element, LexLeq, RectNonOverlap, Table or Disjunction; values stay below maxDomain.
RandomCase randomCase(ConstraintKind kind, std::mt19937_64& rng, int maxDomain = 4);

// The instances every search-level check runs over.
std::vector<Model> acceptanceModels();

// Fixpoint domains after initialise and along a random prune/backtrack walk equal bruteForceGAC.
SuiteReport runGacEquivalenceSuite(ConstraintKind kind, int cases, std::uint64_t seed,
                                   const std::vector<PropagatorConfig>& configs);
// Non-NULL answers are short supports of the queried literal; NULL answers are confirmed by the oracle.
SuiteReport runSupportValiditySuite(int queries, std::uint64_t seed);
// Element and lex answers pass the initial-domain condition, the plain rect source exhibits a
// failing empty support, and the stable rect source never answers {} below the root.
SuiteReport runStabilitySuite(int cases, std::uint64_t seed);
// Random prune/backtrack events on 4-ary tables with region audits and state audits on.
SuiteReport runLemmaFuzzSuite(int events, std::uint64_t seed);

// Node counts and solution multisets agree across configs; optionally also with bruteForceSolveAll.
SuiteReport runSearchInvarianceSuite(const std::vector<Model>& models, const std::vector<PropagatorConfig>& configs,
                                     bool compareOracle);
// STABLE never stores more than 2z supports per constraint.
SuiteReport runGaugeSuite(const std::vector<Model>& models);
// Region audits over full searches.
SuiteReport runLemmaSearchSuite(const std::vector<Model>& models);

// Names accepted by runNamedSuite.
std::vector<std::string> suiteNames();
std::vector<SuiteReport> runNamedSuite(const std::string& name, std::uint64_t seed);

} // namespace ssgac
