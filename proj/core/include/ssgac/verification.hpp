#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssgac/constraint.hpp"
#include "ssgac/engine.hpp"
#include "ssgac/literal.hpp"

namespace ssgac {

struct Model;

enum class Verdict { Yes, No, Unverifiable };
const char* verdictName(Verdict v);

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// True iff every literal is valid, variables are distinct, and every valid
// full extension satisfies c.
Verdict isShortSupport(const ConstraintDef& c, const ScopeDomains& d, const LiteralSet& s,
                       std::uint64_t cap = kDefaultOracleCap);

// Whether s supports var -> val explicitly or implicitly.
bool supportsLiteral(const LiteralSet& s, int var, int val);

// Every member is a short support and every full-length support contains a member.
Verdict isShortSupportSet(const ConstraintDef& c, const ScopeDomains& d, std::span<const LiteralSet> set,
                          std::uint64_t cap = kDefaultOracleCap);

struct StabilityReport {
  Verdict verdict;
  std::string semantics;
};
// Sufficient condition only: s is a short support under the initial domains.
StabilityReport isBacktrackStable(const ConstraintDef& c, const ScopeDomains& initial, const LiteralSet& s,
                                  std::uint64_t cap = kDefaultOracleCap);

// Removes every literal without a full-length support. Throws OracleCapExceeded.
ScopeDomains bruteForceGAC(const ConstraintDef& c, const ScopeDomains& d, std::uint64_t cap = kDefaultOracleCap);

// All satisfying full-length tuples under d. Throws OracleCapExceeded.
std::vector<std::vector<int>> fullLengthSupports(const ConstraintDef& c, const ScopeDomains& d,
                                                 std::uint64_t cap = kDefaultOracleCap);

// Backtracking enumeration; each constraint is checked once its scope is complete.
// cap bounds the number of enumeration nodes. Solutions come back in lexicographic order.
std::vector<std::vector<int>> bruteForceSolveAll(const std::vector<std::vector<int>>& domains,
                                                 std::span<const ConstraintDef> defs, std::span<const VarId> order,
                                                 std::uint64_t cap = 200'000'000);
std::vector<std::vector<int>> bruteForceSolveAll(const Model& m, std::uint64_t cap = 200'000'000);

// Recomputes the propagator's internal bookkeeping; empty when consistent or not auditable.
std::string auditPropagatorState(const Propagator& p);

// Deletions checked and failures seen by the region audits of every short-support propagator in e.
struct LemmaAuditTotals {
  std::int64_t deletions = 0;
  std::int64_t failures = 0;
  std::string firstFailure;
};
LemmaAuditTotals lemmaAuditTotals(const Engine& e);

} // namespace ssgac
