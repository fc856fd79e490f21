#include "ssgac/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace ssgac {

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double mad(const std::vector<double>& xs) {
  const double m = median(xs);
  std::vector<double> dev;
  dev.reserve(xs.size());
  for (double x : xs) dev.push_back(std::fabs(x - m));
  return median(dev);
}

std::int64_t peakRssBytes() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream ls(line.substr(6));
      std::int64_t kb = 0;
      ls >> kb;
      return kb * 1024;
    }
  }
  return 0;
}

RunRecord runOnce(const Model& m, const PropagatorConfig& cfg, const SearchLimits& limits, int repeat) {
  Instance inst = instantiate(m, cfg);
  SearchStats s = solveAllSolutions(*inst.engine, m.branchOrder, m.constraints, limits);
  RunRecord r;
  r.instance = m.id;
  r.config = cfg.label();
  r.repeat = repeat;
  r.nodes = s.nodes;
  r.solutions = s.solutions;
  r.wallTime = s.wallTime;
  r.nodesPerSecond = s.wallTime > 0 ? static_cast<double>(s.nodes) / s.wallTime : 0.0;
  r.peakStoredSupports = s.peakStoredSupports;
  r.peakMemoryBytes = peakRssBytes();
  r.limitHit = s.limitHit();
  r.status = statusName(s.status);
  r.solutionDigest = s.solutionDigest;
  r.invalidSolutions = s.invalidSolutions;
  return r;
}

BenchResult runBenchmark(const std::vector<Model>& suite, const std::vector<PropagatorConfig>& configs,
                         const BenchOptions& opt) {
  struct Job {
    const Model* model;
    const PropagatorConfig* cfg;
    int repeat;
  };
  std::vector<Job> jobs;
  for (const Model& m : suite)
    for (const PropagatorConfig& c : configs)
      for (int r = 0; r < opt.repeats; ++r) jobs.push_back({&m, &c, r});

  BenchResult out;
  out.runs.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
      out.runs[i] = runOnce(*jobs[i].model, *jobs[i].cfg, opt.limits, jobs[i].repeat);
  };
  const int n = std::max(1, std::min<int>(opt.jobs, static_cast<int>(jobs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  out.summary = summarize(out.runs);
  return out;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs) {
  std::vector<SummaryRow> rows;
  std::map<std::pair<std::string, std::string>, std::size_t> at;
  std::vector<std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : runs) {
    auto key = std::make_pair(r.instance, r.config);
    auto it = at.find(key);
    if (it == at.end()) {
      it = at.emplace(key, groups.size()).first;
      groups.emplace_back();
    }
    groups[it->second].push_back(&r);
  }
  for (const auto& g : groups) {
    SummaryRow s;
    s.instance = g.front()->instance;
    s.config = g.front()->config;
    s.repeats = static_cast<int>(g.size());
    s.nodes = g.front()->nodes;
    s.solutions = g.front()->solutions;
    std::vector<double> rate, mem, wall;
    for (const RunRecord* r : g) {
      if (r->nodes != s.nodes) s.nodesIdentical = false;
      s.limitHit = s.limitHit || r->limitHit;
      s.peakStoredSupports = std::max(s.peakStoredSupports, r->peakStoredSupports);
      rate.push_back(r->nodesPerSecond);
      mem.push_back(static_cast<double>(r->peakMemoryBytes));
      wall.push_back(r->wallTime);
    }
    s.medianRate = median(rate);
    s.madRate = mad(rate);
    s.medianMemory = median(mem);
    s.madMemory = mad(mem);
    s.medianWallTime = median(wall);
    rows.push_back(s);
  }
  return rows;
}

namespace {

const char* kCsvHeader =
    "instance,config,repeat,nodes,solutions,wall_time,nodes_per_second,peak_stored_supports,peak_memory_bytes,"
    "limit_hit,status,solution_digest,invalid_solutions";

std::string fmtDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> splitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

void writeCsv(std::ostream& out, const std::vector<RunRecord>& runs) {
  out << "# node = one branching child; both the assign and the refute child count\n";
  out << kCsvHeader << '\n';
  for (const RunRecord& r : runs) {
    out << r.instance << ',' << r.config << ',' << r.repeat << ',' << r.nodes << ',' << r.solutions << ','
        << fmtDouble(r.wallTime) << ',' << fmtDouble(r.nodesPerSecond) << ',' << r.peakStoredSupports << ','
        << r.peakMemoryBytes << ',' << (r.limitHit ? 1 : 0) << ',' << r.status << ',' << r.solutionDigest << ','
        << r.invalidSolutions << '\n';
  }
}

std::vector<RunRecord> readCsv(std::istream& in) {
  std::vector<RunRecord> runs;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected csv header");
      header = true;
      continue;
    }
    auto f = splitCsv(line);
    if (f.size() != 13) throw std::runtime_error("bad csv row: " + line);
    RunRecord r;
    r.instance = f[0];
    r.config = f[1];
    r.repeat = std::stoi(f[2]);
    r.nodes = std::stoll(f[3]);
    r.solutions = std::stoll(f[4]);
    r.wallTime = std::stod(f[5]);
    r.nodesPerSecond = std::stod(f[6]);
    r.peakStoredSupports = std::stoll(f[7]);
    r.peakMemoryBytes = std::stoll(f[8]);
    r.limitHit = f[9] == "1";
    r.status = f[10];
    r.solutionDigest = std::stoull(f[11]);
    r.invalidSolutions = std::stoll(f[12]);
    runs.push_back(r);
  }
  return runs;
}

void writeJson(std::ostream& out, const BenchResult& r) {
  nlohmann::json j;
  j["node_definition"] = "one branching child; both the assign and the refute child count";
  j["runs"] = nlohmann::json::array();
  for (const RunRecord& x : r.runs)
    j["runs"].push_back({{"instance", x.instance},
                         {"config", x.config},
                         {"repeat", x.repeat},
                         {"nodes", x.nodes},
                         {"solutions", x.solutions},
                         {"wall_time", x.wallTime},
                         {"nodes_per_second", x.nodesPerSecond},
                         {"peak_stored_supports", x.peakStoredSupports},
                         {"peak_memory_bytes", x.peakMemoryBytes},
                         {"limit_hit", x.limitHit},
                         {"status", x.status},
                         {"solution_digest", x.solutionDigest},
                         {"invalid_solutions", x.invalidSolutions}});
  j["summary"] = nlohmann::json::array();
  for (const SummaryRow& s : r.summary)
    j["summary"].push_back({{"instance", s.instance},
                            {"config", s.config},
                            {"repeats", s.repeats},
                            {"nodes", s.nodes},
                            {"solutions", s.solutions},
                            {"nodes_identical", s.nodesIdentical},
                            {"limit_hit", s.limitHit},
                            {"median_nodes_per_second", s.medianRate},
                            {"mad_nodes_per_second", s.madRate},
                            {"median_peak_memory_bytes", s.medianMemory},
                            {"mad_peak_memory_bytes", s.madMemory},
                            {"median_wall_time", s.medianWallTime},
                            {"peak_stored_supports", s.peakStoredSupports}});
  out << j.dump(2) << '\n';
}

BenchResult readJson(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  BenchResult r;
  for (const auto& x : j.at("runs")) {
    RunRecord rr;
    rr.instance = x.at("instance");
    rr.config = x.at("config");
    rr.repeat = x.at("repeat");
    rr.nodes = x.at("nodes");
    rr.solutions = x.at("solutions");
    rr.wallTime = x.at("wall_time");
    rr.nodesPerSecond = x.at("nodes_per_second");
    rr.peakStoredSupports = x.at("peak_stored_supports");
    rr.peakMemoryBytes = x.at("peak_memory_bytes");
    rr.limitHit = x.at("limit_hit");
    rr.status = x.at("status");
    rr.solutionDigest = x.at("solution_digest");
    rr.invalidSolutions = x.at("invalid_solutions");
    r.runs.push_back(rr);
  }
  r.summary = summarize(r.runs);
  return r;
}

} // namespace ssgac
