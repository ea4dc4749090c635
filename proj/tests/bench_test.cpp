#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "sprecon/bench.hpp"
#include "sprecon/errors.hpp"

namespace sprecon {
namespace {

FamilySpec spec_of(Family f, std::size_t n, std::size_t delta, std::uint64_t seed) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.max_degree = delta;
  s.seed = seed;
  return s;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Bench, CsvHeaderAndRow) {
  RunOptions opt;
  opt.tau = 1;
  auto run = run_experiment(spec_of(Family::RandomTree, 64, 3, 5), opt);
  auto rows = lines(records_csv({run.record}, false));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0],
            "family,n,delta,tau,ell,seed,q_total,q_rootbfs,q_bootstrap,q_anc,q_neighbor,"
            "correct,raw_calls,budget_violations");
  EXPECT_EQ(rows[1].rfind("random_tree,64,3,1,3,5,", 0), 0u);
  EXPECT_NE(rows[1].find(",true,"), std::string::npos);
  auto with_wall = lines(records_csv({run.record}, true));
  EXPECT_NE(with_wall[0].find(",wall_time_ms"), std::string::npos);
}

TEST(Bench, RecordCountsAddUp) {
  RunOptions opt;
  opt.tau = 1;
  auto r = run_experiment(spec_of(Family::KTree, 400, 8, 2), opt).record;
  EXPECT_TRUE(r.correct);
  EXPECT_EQ(r.q_rootbfs, 399u);
  EXPECT_EQ(r.q_total, r.q_rootbfs + r.q_bootstrap + r.q_anc + r.q_neighbor);
  EXPECT_GE(r.raw_calls, r.q_total);
  EXPECT_EQ(r.budget_violations, 0u);
}

TEST(Bench, DeterministicExceptWallTime) {
  RunOptions opt;
  opt.ell_from_truth = true;
  opt.log_queries = true;
  std::vector<ExperimentRecord> a, b;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto ra = run_experiment(spec_of(Family::BoundedDegreeConnected, 150, 3, seed), opt);
    auto rb = run_experiment(spec_of(Family::BoundedDegreeConnected, 150, 3, seed), opt);
    EXPECT_EQ(ra.result.ledger, rb.result.ledger);
    EXPECT_EQ(ra.result.graph, rb.result.graph);
    a.push_back(ra.record);
    b.push_back(rb.record);
  }
  EXPECT_EQ(records_csv(a, false), records_csv(b, false));
  // Emission order does not depend on insertion order.
  std::reverse(b.begin(), b.end());
  EXPECT_EQ(records_csv(a, false), records_csv(b, false));
}

TEST(Bench, JsonMirror) {
  RunOptions opt;
  opt.tau = 1;
  auto r = run_experiment(spec_of(Family::Caterpillar, 50, 3, 1), opt).record;
  auto j = nlohmann::json::parse(records_json({r}));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["family"], "caterpillar");
  EXPECT_EQ(j[0]["q_total"], r.q_total);
  EXPECT_EQ(j[0]["correct"], true);
  EXPECT_EQ(j[0]["tau"], 1);
}

TEST(Bench, ChooseEll) {
  Graph c = generate(spec_of(Family::Cycle, 10, 2, 0)).graph;
  RunOptions opt;
  EXPECT_THROW(choose_ell(c, opt), std::invalid_argument);
  opt.tau = 2;
  EXPECT_EQ(choose_ell(c, opt), 6);
  opt.ell_from_truth = true;
  EXPECT_EQ(choose_ell(c, opt), 4);
  opt.ell = 7;
  EXPECT_EQ(choose_ell(c, opt), 7);
  EXPECT_EQ(measured_length(c), 4);
}

TEST(Bench, FamiliesWithoutBoundNeedALength) {
  EXPECT_THROW(run_experiment(spec_of(Family::Cycle, 16, 2, 0), RunOptions{}),
               std::invalid_argument);
  auto run = run_experiment(spec_of(Family::RandomTree, 16, 3, 0), RunOptions{});
  EXPECT_EQ(run.record.tau, 1);
  EXPECT_TRUE(run.record.correct);
}

TEST(Bench, StrictBudgetPropagates) {
  RunOptions opt;
  opt.tau = 1;
  opt.strict_budget = true;
  auto run = run_experiment(spec_of(Family::RandomTree, 500, 4, 3), opt);
  EXPECT_TRUE(run.record.correct);
  EXPECT_EQ(run.record.budget_violations, 0u);
}

TEST(Bench, Summary) {
  RunOptions opt;
  opt.tau = 1;
  std::vector<ExperimentRecord> recs;
  for (std::size_t n : {64, 128}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      recs.push_back(run_experiment(spec_of(Family::RandomTree, n, 4, seed), opt).record);
    }
  }
  auto rows = summarize(recs);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].n, 64u);
  EXPECT_EQ(rows[0].runs, 3u);
  EXPECT_EQ(rows[0].naive_queries, 64u * 63 / 2);
  EXPECT_TRUE(rows[1].all_correct);
  double mean = 0;
  for (int j = 0; j < 3; ++j) mean += static_cast<double>(recs[static_cast<std::size_t>(j)].q_total);
  EXPECT_DOUBLE_EQ(rows[0].mean_queries, mean / 3);
  auto table = lines(summary_table(rows));
  EXPECT_EQ(table[0],
            "n,runs,mean_q_total,mean_q_over_nlog2n,max_q_over_nlog2n,max_q_total,naive,all_correct");
  EXPECT_EQ(table.size(), 3u);
}

}  // namespace
}  // namespace sprecon
