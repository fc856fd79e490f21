#include <gtest/gtest.h>

#include <sstream>

#include "ssgac/bench.hpp"
#include "ssgac/model.hpp"
#include "ssgac/support_file.hpp"

using namespace ssgac;

TEST(Models, QG3Counts) {
  Model m = buildQG3(4);
  int qq = 0, aux = 0;
  for (const auto& v : m.variables) {
    qq += v.name.rfind("qq", 0) == 0;
    aux += v.name.rfind("aux", 0) == 0;
  }
  EXPECT_EQ(qq, 16);
  EXPECT_EQ(aux, 16);
  EXPECT_EQ(m.countKind(ConstraintKind::AllDifferent), 9);
  EXPECT_EQ(m.countKind(ConstraintKind::Element), 16);
  EXPECT_EQ(m.countKind(ConstraintKind::LinearAux), 16);
}

TEST(Models, BIBDCounts) {
  Model m = buildBIBD(1);
  // v = b = 7: lex on 6 adjacent row pairs and 6 column pairs, 14 row/column sums, one sum per row pair.
  EXPECT_EQ(m.countKind(ConstraintKind::LexLeq), 12);
  EXPECT_EQ(m.countKind(ConstraintKind::BoolSumEq), 14 + 21);
  EXPECT_EQ(m.countKind(ConstraintKind::And), 21 * 7);
}

TEST(Models, RectPackPairs) {
  for (int n : {2, 3, 5}) {
    Model m = buildRectPack(n, 8, 8);
    EXPECT_EQ(m.countKind(ConstraintKind::RectNonOverlap), n * (n - 1) / 2);
  }
}

TEST(Models, BuildModelRejectsUnknownKind) {
  EXPECT_THROW(buildModel("nope", {}), std::invalid_argument);
  EXPECT_EQ(buildModel("qg3", {{"n", 3}}).id, buildQG3(3).id);
}

TEST(Stats, MedianAndMad) {
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
  EXPECT_DOUBLE_EQ(mad({1, 2, 3, 4, 100}), 1.0);
  EXPECT_DOUBLE_EQ(mad({5, 5, 5}), 0.0);
}

TEST(Reports, CsvRoundTrip) {
  BenchOptions opt;
  opt.repeats = 2;
  BenchResult r = runBenchmark({buildQG3(3)}, {PropagatorConfig{}}, opt);
  std::stringstream ss;
  writeCsv(ss, r.runs);
  std::vector<RunRecord> back = readCsv(ss);
  ASSERT_EQ(back.size(), r.runs.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].instance, r.runs[i].instance);
    EXPECT_EQ(back[i].config, r.runs[i].config);
    EXPECT_EQ(back[i].nodes, r.runs[i].nodes);
    EXPECT_EQ(back[i].solutionDigest, r.runs[i].solutionDigest);
    EXPECT_DOUBLE_EQ(back[i].wallTime, r.runs[i].wallTime);
    EXPECT_EQ(back[i].status, r.runs[i].status);
  }
}

TEST(Reports, JsonRoundTrip) {
  BenchOptions opt;
  opt.repeats = 3;
  BenchResult r = runBenchmark({buildRectPack(2, 3, 3)}, {PropagatorConfig{}}, opt);
  std::stringstream ss;
  writeJson(ss, r);
  BenchResult back = readJson(ss);
  ASSERT_EQ(back.runs.size(), 3u);
  ASSERT_EQ(back.summary.size(), 1u);
  EXPECT_EQ(back.summary[0].nodes, r.summary[0].nodes);
  EXPECT_DOUBLE_EQ(back.summary[0].medianRate, r.summary[0].medianRate);
  EXPECT_EQ(back.runs[2].nodes, r.runs[2].nodes);
}

TEST(Reports, RepeatsAgreeOnNodes) {
  BenchOptions opt;
  opt.repeats = 4;
  opt.jobs = 2;
  BenchResult r = runBenchmark({buildQG3(4)}, {PropagatorConfig{}}, opt);
  ASSERT_EQ(r.summary.size(), 1u);
  EXPECT_TRUE(r.summary[0].nodesIdentical);
  EXPECT_EQ(r.summary[0].repeats, 4);
  EXPECT_EQ(r.summary[0].solutions, 8);
}

TEST(Reports, PeakRssIsReported) { EXPECT_GT(peakRssBytes(), 0); }

TEST(SupportFile, ParseAndWrite) {
  std::istringstream in("# two-variable table\nscope a b\na=0 b=1\nb=2\n");
  SupportFile f = parseSupportFile(in);
  EXPECT_EQ(f.scope, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(f.supports.size(), 2u);
  EXPECT_EQ(f.supports[1], (LiteralSet{{1, 2}}));
  std::ostringstream out;
  writeSupportFile(out, f);
  std::istringstream again(out.str());
  SupportFile g = parseSupportFile(again);
  EXPECT_EQ(g.supports, f.supports);
  Model m = buildSupportFileModel(f);
  EXPECT_EQ(m.variables.size(), 2u);
  EXPECT_EQ(m.variables[1].domain, (std::vector<int>{0, 1, 2}));
}

TEST(SupportFile, RejectsUnknownVariable) {
  std::istringstream in("scope a b\nc=1\n");
  EXPECT_THROW(parseSupportFile(in), SupportFileError);
}
