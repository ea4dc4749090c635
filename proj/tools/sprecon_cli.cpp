// sprecon: generate graphs, reconstruct them from distance queries, verify,
// and sweep sizes for query-count reports.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sprecon/bench.hpp"
#include "sprecon/edge_list.hpp"
#include "sprecon/errors.hpp"
#include "sprecon/generators.hpp"
#include "sprecon/oracle.hpp"

namespace {

using namespace sprecon;

constexpr int kExitIncorrect = 2;
constexpr int kExitBudget = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct LengthFlags {
  std::optional<int> tau;
  std::optional<int> ell;
  bool ell_from_truth = false;

  void add_to(CLI::App* app) {
    auto* t = app->add_option("--tau", tau, "Promised treelength bound (ell = 3*tau)");
    auto* e = app->add_option("--ell", ell, "Layering-tree length bound used directly");
    auto* f = app->add_flag("--ell-from-truth", ell_from_truth,
                            "Measure the layering-tree length of the hidden graph");
    t->excludes(e)->excludes(f);
    e->excludes(f);
  }
  void apply(RunOptions& o) const {
    o.tau = tau;
    o.ell = ell;
    o.ell_from_truth = ell_from_truth;
  }
};

struct FamilyFlags {
  std::string family = "random_tree";
  std::size_t delta = 3;
  std::size_t k = 2;
  std::size_t clique_size = 3;

  void add_to(CLI::App* app) {
    app->add_option("--family", family,
                    "random_tree|k_tree|ring_of_cliques|cycle|caterpillar|bounded_degree_connected");
    app->add_option("--delta", delta, "Maximum degree");
    app->add_option("--k", k, "Clique order for k_tree");
    app->add_option("--clique-size", clique_size, "Clique size for ring_of_cliques");
  }
  FamilySpec spec(std::size_t n, std::uint64_t seed) const {
    FamilySpec s;
    s.family = parse_family(family);
    s.n = n;
    s.max_degree = delta;
    s.k = k;
    s.clique_size = clique_size;
    s.seed = seed;
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph reconstruction from shortest-path distance queries"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
  FamilyFlags gen_family;
  std::size_t gen_n = 64;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  gen_family.add_to(gen);
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output path ('-' for stdout)");

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "Reconstruct a hidden graph through a distance oracle");
  std::string rec_in;
  std::string rec_out;
  std::string rec_log;
  std::string rec_json;
  bool rec_strict = false;
  LengthFlags rec_len;
  rec->add_option("graph", rec_in, "Hidden graph edge-list file")->required();
  rec_len.add_to(rec);
  rec->add_flag("--strict-budget", rec_strict, "Fail on any query-budget breach");
  rec->add_option("--out", rec_out, "Write the reconstructed edge list here");
  rec->add_option("--log-queries", rec_log, "Write the query log as CSV u,v,distance,phase");
  rec->add_option("--json", rec_json, "Also write the record as JSON");

  // bench
  auto* bench = app.add_subcommand("bench", "Sweep sizes and seeds, report query counts");
  FamilyFlags bench_family;
  std::vector<std::size_t> bench_sizes{256, 512, 1024};
  std::uint64_t bench_seed = 1;
  std::size_t bench_repeats = 5;
  std::string bench_out = "-";
  std::string bench_json;
  std::string bench_summary;
  bool bench_strict = false;
  bool bench_no_wall = false;
  LengthFlags bench_len;
  bench_family.add_to(bench);
  bench_len.add_to(bench);
  bench->add_option("--n", bench_sizes, "One or more vertex counts");
  bench->add_option("--seed", bench_seed, "First seed; repeat r uses seed + r");
  bench->add_option("--repeats", bench_repeats, "Seeds per size");
  bench->add_option("--out", bench_out, "Per-run CSV ('-' for stdout)");
  bench->add_option("--json", bench_json, "Per-run JSON mirror");
  bench->add_option("--summary", bench_summary, "Per-size summary CSV (default: stderr)");
  bench->add_flag("--strict-budget", bench_strict, "Fail on any query-budget breach");
  bench->add_flag("--no-wall-time", bench_no_wall, "Omit the wall_time_ms column");

  // verify
  auto* ver = app.add_subcommand("verify", "Exit 0 iff two edge-list files hold the same graph");
  std::string ver_a, ver_b;
  ver->add_option("graph", ver_a, "Hidden graph")->required();
  ver->add_option("reconstruction", ver_b, "Reconstructed graph")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      auto g = generate(gen_family.spec(gen_n, gen_seed));
      write_text(gen_out, write_edge_list(g.graph));
      return 0;
    }

    if (*rec) {
      Graph hidden = read_edge_list_file(rec_in);
      RunOptions opt;
      rec_len.apply(opt);
      opt.strict_budget = rec_strict;
      opt.log_queries = !rec_log.empty();
      RunOutcome run;
      try {
        run = run_on_graph(hidden, "file", 0, opt);
      } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
      } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "note: tau-violation suspected (length bound below the true layering-tree length?)\n";
        return kExitIncorrect;
      }
      std::cout << records_csv({run.record});
      if (!rec_out.empty()) write_text(rec_out, write_edge_list(run.result.graph));
      if (!rec_log.empty()) write_text(rec_log, query_log_csv(run.result.ledger));
      if (!rec_json.empty()) write_text(rec_json, records_json({run.record}));
      for (const auto& v : run.result.violations) {
        std::cerr << "budget: " << v.check << " layer=" << v.layer << " observed=" << v.observed
                  << " limit=" << v.limit << "\n";
      }
      if (run.result.tau_violation_suspected()) std::cerr << "note: tau-violation suspected\n";
      if (!run.record.correct) {
        std::cerr << "error: reconstruction differs from the hidden graph\n";
        return kExitIncorrect;
      }
      return 0;
    }

    if (*bench) {
      std::vector<ExperimentRecord> records;
      bool any_wrong = false;
      for (std::size_t n : bench_sizes) {
        for (std::size_t r = 0; r < bench_repeats; ++r) {
          RunOptions opt;
          bench_len.apply(opt);
          opt.strict_budget = bench_strict;
          try {
            auto run = run_experiment(bench_family.spec(n, bench_seed + r), opt);
            any_wrong = any_wrong || !run.record.correct;
            records.push_back(run.record);
          } catch (const BudgetExceeded& e) {
            std::cerr << "error: n=" << n << " seed=" << bench_seed + r << ": " << e.what() << "\n";
            return kExitBudget;
          }
        }
      }
      write_text(bench_out, records_csv(records, !bench_no_wall));
      if (!bench_json.empty()) write_text(bench_json, records_json(records));
      std::string summary = summary_table(summarize(records));
      if (bench_summary.empty()) {
        std::cerr << summary;
      } else {
        write_text(bench_summary, summary);
      }
      return any_wrong ? kExitIncorrect : 0;
    }

    if (*ver) {
      Graph a = read_edge_list_file(ver_a);
      Graph b = read_edge_list_file(ver_b);
      if (graphs_equal(a, b)) {
        std::cout << "equal\n";
        return 0;
      }
      std::cout << "different\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
