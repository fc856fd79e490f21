#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssgac/constraint.hpp"
#include "ssgac/engine.hpp"

namespace ssgac {

struct SearchLimits {
  std::int64_t nodeLimit = 1'000'000;
  double timeLimit = 3600.0;
  bool recordSolutions = false;
  // Stops recording (not counting) past this many.
  std::size_t solutionLimit = 100'000;
  // Search ends once this many solutions are found; negative means all.
  std::int64_t stopAfter = -1;
};

enum class SearchStatus { Complete, NodeLimit, TimeLimit, SolutionLimit };
const char* statusName(SearchStatus s);

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t solutions = 0;
  std::int64_t invalidSolutions = 0;
  std::int64_t peakStoredSupports = 0;
  double wallTime = 0.0;
  SearchStatus status = SearchStatus::Complete;
  // Order-independent hash of the solution multiset.
  std::uint64_t solutionDigest = 0;
  std::vector<std::vector<int>> solutionList;

  bool limitHit() const { return status != SearchStatus::Complete; }
};

// Binary branching x = min D(x) / x != min D(x) over a static order; variables
// missing from order are appended. Every child node counts as one node.
SearchStats solveAllSolutions(Engine& engine, std::span<const VarId> order, std::span<const ConstraintDef> defs,
                              const SearchLimits& limits = {});

std::uint64_t solutionHash(std::span<const int> values);

} // namespace ssgac
