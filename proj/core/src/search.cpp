#include "ssgac/search.hpp"

#include <algorithm>
#include <chrono>

namespace ssgac {

const char* statusName(SearchStatus s) {
  switch (s) {
  case SearchStatus::Complete: return "complete";
  case SearchStatus::NodeLimit: return "node-limit";
  case SearchStatus::TimeLimit: return "time-limit";
  case SearchStatus::SolutionLimit: return "solution-limit";
  }
  return "?";
}

std::uint64_t solutionHash(std::span<const int> values) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : values) {
    std::uint64_t z = h + static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return h;
}

namespace {

class Searcher {
public:
  Searcher(Engine& e, std::span<const VarId> order, std::span<const ConstraintDef> defs, const SearchLimits& limits)
      : e_(e), defs_(defs), limits_(limits), start_(std::chrono::steady_clock::now()) {
    std::vector<std::uint8_t> in(e.numVariables(), 0);
    for (VarId x : order)
      if (!in[x]) {
        in[x] = 1;
        order_.push_back(x);
      }
    for (VarId x = 0; x < e.numVariables(); ++x)
      if (!in[x]) order_.push_back(x);
  }

  SearchStats run() {
    if (e_.initialise()) descend();
    notePeak();
    stats_.wallTime = elapsed();
    return std::move(stats_);
  }

private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void notePeak() {
    for (const auto& p : e_.propagators())
      stats_.peakStoredSupports = std::max(stats_.peakStoredSupports, p->peakStoredSupports());
  }

  bool stopped() {
    if (stats_.status != SearchStatus::Complete) return true;
    if (limits_.stopAfter >= 0 && stats_.solutions >= limits_.stopAfter) {
      stats_.status = SearchStatus::SolutionLimit;
      return true;
    }
    if (stats_.nodes >= limits_.nodeLimit) {
      stats_.status = SearchStatus::NodeLimit;
      return true;
    }
    if (elapsed() > limits_.timeLimit) {
      stats_.status = SearchStatus::TimeLimit;
      return true;
    }
    return false;
  }

  void recordSolution() {
    const DomainStore& d = e_.domains();
    std::vector<int> vals(e_.numVariables());
    for (VarId x = 0; x < e_.numVariables(); ++x) vals[x] = d.min(x);
    std::vector<int> tuple;
    for (const ConstraintDef& c : defs_) {
      tuple.clear();
      for (VarId x : c.scope) tuple.push_back(vals[x]);
      if (!c.satisfied(tuple)) {
        ++stats_.invalidSolutions;
        return;
      }
    }
    ++stats_.solutions;
    stats_.solutionDigest += solutionHash(vals);
    if (limits_.recordSolutions && stats_.solutionList.size() < limits_.solutionLimit)
      stats_.solutionList.push_back(std::move(vals));
  }

  void descend() {
    const DomainStore& d = e_.domains();
    while (pos_ < order_.size() && d.assigned(order_[pos_])) ++pos_;
    if (pos_ == order_.size()) {
      recordSolution();
      return;
    }
    const std::size_t saved = pos_;
    const VarId x = order_[pos_];
    const int v = d.min(x);

    for (int branch = 0; branch < 2; ++branch) {
      if (stopped()) return;
      ++stats_.nodes;
      e_.pushNode();
      bool ok = branch == 0 ? e_.assign(x, v) : e_.prune(x, v);
      if (ok) ok = e_.propagate();
      if (ok) descend();
      e_.backtrackNode();
      pos_ = saved;
    }
  }

  Engine& e_;
  std::span<const ConstraintDef> defs_;
  SearchLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<VarId> order_;
  std::size_t pos_ = 0;
  SearchStats stats_;
};

} // namespace

SearchStats solveAllSolutions(Engine& engine, std::span<const VarId> order, std::span<const ConstraintDef> defs,
                              const SearchLimits& limits) {
  return Searcher(engine, order, defs, limits).run();
}

} // namespace ssgac
