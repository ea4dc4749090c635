#include "sprecon/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "sprecon/layering.hpp"

namespace sprecon {

int measured_length(const Graph& g, VertexId root) {
  Layering lay = build_layering(g, root);
  return tree_length(g, build_layering_tree(g, lay));
}

int choose_ell(const Graph& hidden, const RunOptions& opt) {
  if (opt.ell) return *opt.ell;
  if (opt.ell_from_truth) return measured_length(hidden, 0);
  if (opt.tau) return 3 * *opt.tau;
  throw std::invalid_argument("no length bound: give tau, ell or ell-from-truth");
}

RunOutcome run_on_graph(const Graph& hidden, const std::string& family,
                        std::uint64_t seed, const RunOptions& opt) {
  RunOutcome out;
  ExperimentRecord& rec = out.record;
  rec.family = family;
  rec.n = hidden.num_vertices();
  rec.delta = max_degree(hidden);
  rec.seed = seed;

  ReconstructionConfig cfg;
  cfg.ell_override = choose_ell(hidden, opt);
  if (opt.tau && !opt.ell && !opt.ell_from_truth) rec.tau = opt.tau;
  cfg.strict_budget = opt.strict_budget;
  cfg.delta_bound = rec.delta;
  rec.ell = *cfg.ell_override;

  auto start = std::chrono::steady_clock::now();
  DistanceOracle oracle(hidden, opt.log_queries);
  out.result = reconstruct(oracle, cfg);
  auto stop = std::chrono::steady_clock::now();
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  const QueryLedger& l = out.result.ledger;
  rec.q_total = l.distinct_queries;
  rec.q_rootbfs = l.phase(QueryPhase::RootBfs);
  rec.q_bootstrap = l.phase(QueryPhase::Bootstrap);
  rec.q_anc = l.phase(QueryPhase::AncestorSearch);
  rec.q_neighbor = l.phase(QueryPhase::NeighborSearch);
  rec.raw_calls = l.raw_calls;
  rec.correct = graphs_equal(out.result.graph, hidden);
  rec.budget_violations = out.result.violations.size();
  return out;
}

RunOutcome run_experiment(const FamilySpec& spec, RunOptions opt) {
  GeneratedGraph gen = generate(spec);
  if (!opt.tau && !opt.ell && !opt.ell_from_truth) {
    if (!gen.treelength_bound) {
      throw std::invalid_argument(std::string(family_name(spec.family)) +
                                  " has no known treelength bound; use ell-from-truth");
    }
    opt.tau = *gen.treelength_bound;
  }
  RunOutcome out = run_on_graph(gen.graph, std::string(family_name(spec.family)),
                                spec.seed, opt);
  out.record.delta = spec.max_degree;
  return out;
}

void sort_records(std::vector<ExperimentRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     return std::tie(a.family, a.n, a.delta, a.ell, a.seed) <
                            std::tie(b.family, b.n, b.delta, b.ell, b.seed);
                   });
}

std::string records_csv(std::vector<ExperimentRecord> records, bool include_wall_time) {
  sort_records(records);
  std::string out =
      "family,n,delta,tau,ell,seed,q_total,q_rootbfs,q_bootstrap,q_anc,q_neighbor,"
      "correct,raw_calls,budget_violations";
  if (include_wall_time) out += ",wall_time_ms";
  out += '\n';
  for (const auto& r : records) {
    out += r.family + "," + std::to_string(r.n) + "," + std::to_string(r.delta) + "," +
           (r.tau ? std::to_string(*r.tau) : std::string()) + "," + std::to_string(r.ell) +
           "," + std::to_string(r.seed) + "," + std::to_string(r.q_total) + "," +
           std::to_string(r.q_rootbfs) + "," + std::to_string(r.q_bootstrap) + "," +
           std::to_string(r.q_anc) + "," + std::to_string(r.q_neighbor) + "," +
           (r.correct ? "true" : "false") + "," + std::to_string(r.raw_calls) + "," +
           std::to_string(r.budget_violations);
    if (include_wall_time) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.wall_time_ms);
      out += ",";
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string records_json(std::vector<ExperimentRecord> records) {
  sort_records(records);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["delta"] = r.delta;
    j["tau"] = r.tau ? nlohmann::json(*r.tau) : nlohmann::json(nullptr);
    j["ell"] = r.ell;
    j["seed"] = r.seed;
    j["q_total"] = r.q_total;
    j["q_rootbfs"] = r.q_rootbfs;
    j["q_bootstrap"] = r.q_bootstrap;
    j["q_anc"] = r.q_anc;
    j["q_neighbor"] = r.q_neighbor;
    j["correct"] = r.correct;
    j["raw_calls"] = r.raw_calls;
    j["budget_violations"] = r.budget_violations;
    j["wall_time_ms"] = r.wall_time_ms;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<SizeSummary> summarize(const std::vector<ExperimentRecord>& records) {
  std::map<std::size_t, SizeSummary> by_n;
  for (const auto& r : records) {
    SizeSummary& s = by_n[r.n];
    s.n = r.n;
    ++s.runs;
    double nlogn = r.n > 1 ? static_cast<double>(r.n) * std::log2(static_cast<double>(r.n)) : 1.0;
    double ratio = static_cast<double>(r.q_total) / nlogn;
    s.mean_queries += static_cast<double>(r.q_total);
    s.mean_ratio += ratio;
    s.max_ratio = std::max(s.max_ratio, ratio);
    s.max_queries = std::max(s.max_queries, r.q_total);
    s.naive_queries = static_cast<std::uint64_t>(r.n) * (r.n - (r.n > 0)) / 2;
    s.all_correct = s.all_correct && r.correct;
  }
  std::vector<SizeSummary> out;
  for (auto& [n, s] : by_n) {
    s.mean_queries /= static_cast<double>(s.runs);
    s.mean_ratio /= static_cast<double>(s.runs);
    out.push_back(s);
  }
  return out;
}

std::string summary_table(const std::vector<SizeSummary>& rows) {
  std::string out = "n,runs,mean_q_total,mean_q_over_nlog2n,max_q_over_nlog2n,max_q_total,naive,all_correct\n";
  for (const auto& s : rows) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.1f,%.4f,%.4f,%llu,%llu,%s\n", s.n, s.runs,
                  s.mean_queries, s.mean_ratio, s.max_ratio,
                  static_cast<unsigned long long>(s.max_queries),
                  static_cast<unsigned long long>(s.naive_queries),
                  s.all_correct ? "true" : "false");
    out += buf;
  }
  return out;
}

}  // namespace sprecon
