#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssgac/bench.hpp"
#include "ssgac/model.hpp"
#include "ssgac/propagator_factory.hpp"
#include "ssgac/suites.hpp"
#include "ssgac/support_file.hpp"
#include "ssgac/verification.hpp"

using namespace ssgac;

namespace {

std::map<std::string, int> parseParams(const std::vector<std::string>& kvs) {
  std::map<std::string, int> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected k=v, got " + kv);
    out[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
  }
  return out;
}

std::vector<std::string> splitComma(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// "all", or a comma list of propagator names; inst applies to the short-support ones.
std::vector<PropagatorConfig> parseConfigs(const std::string& props, const std::string& inst, bool audit) {
  std::vector<PropagatorConfig> out;
  if (props == "all") {
    out = allGacConfigs();
  } else {
    for (const auto& p : splitComma(props)) {
      PropagatorConfig c;
      c.prop = parsePropagator(p);
      c.inst = parseInstantiation(inst);
      out.push_back(c);
    }
  }
  for (auto& c : out) c.auditLemmas = audit;
  return out;
}

std::vector<Model> namedSuite(const std::string& name) {
  if (name == "acceptance") return acceptanceModels();
  if (name == "qg3") return {buildQG3(5), buildQG3(6)};
  if (name == "bibd") return {buildBIBD(2), buildBIBD(3)};
  if (name == "rectpack") return {buildRectPack(8, 15, 15), buildRectPack(10, 20, 22)};
  throw std::invalid_argument("unknown benchmark suite " + name);
}

void printSummary(const BenchResult& r) {
  std::printf("# node = one branching child; both the assign and the refute child count\n");
  std::printf("%-22s %-26s %12s %10s %14s %10s %12s %s\n", "instance", "config", "nodes", "solutions", "nodes/s(med)",
              "MAD/med", "peak-supp", "status");
  for (const SummaryRow& s : r.summary) {
    double rel = s.medianRate > 0 ? s.madRate / s.medianRate : 0.0;
    std::printf("%-22s %-26s %12lld %10lld %14.1f %10.3f %12lld %s%s\n", s.instance.c_str(), s.config.c_str(),
                static_cast<long long>(s.nodes), static_cast<long long>(s.solutions), s.medianRate, rel,
                static_cast<long long>(s.peakStoredSupports), s.limitHit ? "limit" : "complete",
                s.nodesIdentical ? "" : " NODE-MISMATCH");
  }
}

void writeOut(const std::string& path, const BenchResult& r) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    writeJson(out, r);
  else
    writeCsv(out, r.runs);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short-support GAC propagators: search, benchmarks and verification"};
  app.require_subcommand(1);

  std::string model = "qg3", prop = "haggisgac", inst = "specific", out, supports, suite, configList = "all";
  std::vector<std::string> params;
  bool allSolutions = false, audit = false;
  std::int64_t nodeLimit = 1'000'000;
  double timeLimit = 3600;
  std::uint64_t seed = 1;
  int jobs = 1, repeats = 1;

  auto* solve = app.add_subcommand("solve", "Search one model");
  solve->add_option("--model", model, "qg3 | bibd | rectpack | table")->check(CLI::IsMember({"qg3", "bibd", "rectpack", "table"}));
  solve->add_option("--param", params, "Model parameter k=v (repeatable)");
  solve->add_option("--prop", prop, "Propagator name, comma list, or all");
  solve->add_option("--instantiation", inst, "specific | list | ndlist | long");
  solve->add_flag("--all-solutions", allSolutions, "Enumerate every solution");
  solve->add_option("--node-limit", nodeLimit);
  solve->add_option("--time-limit", timeLimit, "Seconds");
  solve->add_option("--seed", seed, "Seed for generated table models");
  solve->add_option("--jobs", jobs);
  solve->add_option("--repeats", repeats);
  solve->add_option("--out", out, "results.csv or results.json");
  solve->add_option("--supports", supports, "Support-list file for a table model");
  solve->add_flag("--audit-lemmas", audit, "Check every deletion's lost-implicit region against a recount");

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", suite, "acceptance | qg3 | bibd | rectpack")->required();
  bench->add_option("--prop", configList, "Propagator names (comma list) or all");
  bench->add_option("--instantiation", inst);
  bench->add_option("--repeats", repeats);
  bench->add_option("--jobs", jobs);
  bench->add_option("--node-limit", nodeLimit);
  bench->add_option("--time-limit", timeLimit);
  bench->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Run checker suites");
  verify->add_option("--suite", suite, "gac | support | stability | lemma-fuzz | search | oracle | gauge | lemmas | all")
      ->required();
  verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      Model m = supports.empty() ? buildModel(model, parseParams(params), seed)
                                 : buildSupportFileModel(readSupportFile(supports), parseParams(params)["d"]);
      BenchOptions opt;
      opt.repeats = repeats;
      opt.jobs = jobs;
      opt.limits.nodeLimit = nodeLimit;
      opt.limits.timeLimit = timeLimit;
      if (!allSolutions) opt.limits.stopAfter = 1;
      auto configs = parseConfigs(prop, inst, audit);
      if (audit) {
        int bad = 0;
        for (const auto& cfg : configs) {
          Instance in = instantiate(m, cfg);
          SearchStats s = solveAllSolutions(*in.engine, m.branchOrder, m.constraints, opt.limits);
          LemmaAuditTotals t = lemmaAuditTotals(*in.engine);
          std::printf("%s %s nodes=%lld solutions=%lld audited-deletions=%lld region-mismatches=%lld %s\n",
                      m.id.c_str(), cfg.label().c_str(), static_cast<long long>(s.nodes),
                      static_cast<long long>(s.solutions), static_cast<long long>(t.deletions),
                      static_cast<long long>(t.failures), t.firstFailure.c_str());
          bad += t.failures > 0;
        }
        return bad ? 1 : 0;
      }
      BenchResult r = runBenchmark({m}, configs, opt);
      printSummary(r);
      writeOut(out, r);
      return 0;
    }
    if (*bench) {
      BenchOptions opt;
      opt.repeats = repeats;
      opt.jobs = jobs;
      opt.limits.nodeLimit = nodeLimit;
      opt.limits.timeLimit = timeLimit;
      BenchResult r = runBenchmark(namedSuite(suite), parseConfigs(configList, inst, false), opt);
      printSummary(r);
      writeOut(out, r);
      return 0;
    }
    if (*verify) {
      int failed = 0;
      for (const SuiteReport& r : runNamedSuite(suite, seed)) {
        std::printf("%s %s cases=%lld failures=%lld %s\n", r.passed() ? "PASS" : "FAIL", r.name.c_str(),
                    static_cast<long long>(r.cases), static_cast<long long>(r.failures), r.detail.c_str());
        failed += !r.passed();
      }
      return failed ? 1 : 0;
    }
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 0;
}
