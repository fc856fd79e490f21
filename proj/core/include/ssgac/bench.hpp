#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ssgac/model.hpp"
#include "ssgac/propagator_factory.hpp"
#include "ssgac/search.hpp"

namespace ssgac {

struct RunRecord {
  std::string instance;
  std::string config;
  int repeat = 0;
  std::int64_t nodes = 0;
  std::int64_t solutions = 0;
  double wallTime = 0.0;
  double nodesPerSecond = 0.0;
  std::int64_t peakStoredSupports = 0;
  std::int64_t peakMemoryBytes = 0;
  bool limitHit = false;
  std::string status;
  std::uint64_t solutionDigest = 0;
  std::int64_t invalidSolutions = 0;
};

struct SummaryRow {
  std::string instance;
  std::string config;
  int repeats = 0;
  std::int64_t nodes = 0;
  std::int64_t solutions = 0;
  bool nodesIdentical = true;
  bool limitHit = false;
  double medianRate = 0.0;
  double madRate = 0.0;
  double medianMemory = 0.0;
  double madMemory = 0.0;
  double medianWallTime = 0.0;
  std::int64_t peakStoredSupports = 0;
};

struct BenchOptions {
  int repeats = 1;
  int jobs = 1;
  SearchLimits limits;
};

struct BenchResult {
  std::vector<RunRecord> runs;
  std::vector<SummaryRow> summary;
};

double median(std::vector<double> xs);
// Median absolute deviation from the median.
double mad(const std::vector<double>& xs);

// Peak resident set size of this process, or 0 where unavailable.
std::int64_t peakRssBytes();

RunRecord runOnce(const Model& m, const PropagatorConfig& cfg, const SearchLimits& limits, int repeat = 0);
// Each (instance, config, repeat) runs in its own solver; up to opt.jobs at a time.
BenchResult runBenchmark(const std::vector<Model>& suite, const std::vector<PropagatorConfig>& configs,
                         const BenchOptions& opt);
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs);

void writeCsv(std::ostream& out, const std::vector<RunRecord>& runs);
std::vector<RunRecord> readCsv(std::istream& in);
void writeJson(std::ostream& out, const BenchResult& r);
BenchResult readJson(std::istream& in);

} // namespace ssgac
