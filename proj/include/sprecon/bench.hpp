#ifndef SPRECON_BENCH_HPP
#define SPRECON_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sprecon/generators.hpp"
#include "sprecon/graph.hpp"
#include "sprecon/reconstructor.hpp"

namespace sprecon {

struct RunOptions {
  std::optional<int> tau;
  std::optional<int> ell;     // direct length bound
  bool ell_from_truth = false;  // measure the layering-tree length of the hidden graph
  bool strict_budget = false;
  bool log_queries = false;
};

struct ExperimentRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::optional<int> tau;
  int ell = 0;
  std::uint64_t seed = 0;
  std::uint64_t q_total = 0;
  std::uint64_t q_rootbfs = 0;
  std::uint64_t q_bootstrap = 0;
  std::uint64_t q_anc = 0;
  std::uint64_t q_neighbor = 0;
  std::uint64_t raw_calls = 0;
  bool correct = false;
  std::size_t budget_violations = 0;
  double wall_time_ms = 0.0;
};

struct RunOutcome {
  ExperimentRecord record;
  ReconstructionResult result;
};

// Picks the length bound: explicit ell, then measured length, then 3*tau.
// Throws std::invalid_argument when none is available.
int choose_ell(const Graph& hidden, const RunOptions& opt);

// Exact length of the layering tree of g rooted at `root`.
int measured_length(const Graph& g, VertexId root = 0);

// Reconstructs `hidden` through a fresh oracle and checks the result.
// BudgetExceeded propagates when opt.strict_budget is set.
RunOutcome run_on_graph(const Graph& hidden, const std::string& family,
                        std::uint64_t seed, const RunOptions& opt);

// generate(spec) followed by run_on_graph. A family's known treelength bound
// stands in for tau when neither tau, ell nor ell_from_truth is given.
RunOutcome run_experiment(const FamilySpec& spec, RunOptions opt);

// Fixed column order; wall_time_ms is appended last when requested.
std::string records_csv(std::vector<ExperimentRecord> records,
                        bool include_wall_time = true);
std::string records_json(std::vector<ExperimentRecord> records);
void sort_records(std::vector<ExperimentRecord>& records);

struct SizeSummary {
  std::size_t n = 0;
  std::size_t runs = 0;
  double mean_queries = 0.0;
  double mean_ratio = 0.0;  // q_total / (n log2 n)
  double max_ratio = 0.0;
  std::uint64_t max_queries = 0;
  std::uint64_t naive_queries = 0;  // n(n-1)/2
  bool all_correct = true;
};

std::vector<SizeSummary> summarize(const std::vector<ExperimentRecord>& records);
std::string summary_table(const std::vector<SizeSummary>& rows);

}  // namespace sprecon

#endif  // SPRECON_BENCH_HPP
