#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ssgac/constraint.hpp"
#include "ssgac/domain_store.hpp"
#include "ssgac/literal.hpp"

namespace ssgac {

struct SupportSetTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Union of the full-length supports of each disjunct over its own variables.
// Literal sets are sorted by variable; duplicates are dropped.
std::vector<LiteralSet> disjunctionSupportSet(std::span<const Conjunction> disjuncts,
                                              const ScopeDomains& domains,
                                              std::size_t cap = std::size_t{1} << 20);

// Per-literal lists holding every support that contains the literal or omits its variable.
class SupportListTable {
public:
  SupportListTable(const ScopeDomains& initial, std::vector<LiteralSet> supports);

  const LiteralSet& support(int i) const { return supports_[i]; }
  int numSupports() const { return static_cast<int>(supports_.size()); }
  const std::vector<int>& list(int var, int val) const;
  int arity() const { return static_cast<int>(lo_.size()); }

private:
  std::vector<LiteralSet> supports_;
  std::vector<int> lo_;
  std::vector<int> base_;
  std::vector<std::vector<int>> lists_;
  std::vector<int> emptyList_;
};

// One shared list plus NextDifference jumps.
class NDListTable {
public:
  explicit NDListTable(std::vector<LiteralSet> supports);

  int size() const { return static_cast<int>(supports_.size()); }
  const LiteralSet& support(int j) const { return supports_[j]; }
  std::span<const int> next(int j) const { return nd_[j]; }

private:
  std::vector<LiteralSet> supports_;
  std::vector<std::vector<int>> nd_;
};

// Adds var -> min for every scope variable absent from s; forced overrides the minimum.
LiteralSet longify(const LiteralSet& s, const DomainStore& d, std::span<const VarId> scope,
                   std::optional<Literal> forced = std::nullopt);

// Drops literals whose variable is assigned.
LiteralSet stripAssigned(const LiteralSet& s, const DomainStore& d, std::span<const VarId> scope);

} // namespace ssgac
