#ifndef SPRECON_RECONSTRUCTOR_HPP
#define SPRECON_RECONSTRUCTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sprecon/graph.hpp"
#include "sprecon/layering.hpp"
#include "sprecon/oracle.hpp"

namespace sprecon {

struct ReconstructionConfig {
  int tau = 1;                      // promised treelength bound
  std::optional<int> ell_override;  // use this length bound instead of 3*tau
  bool strict_budget = false;       // throw BudgetExceeded on any breach
  // Degree bound used for budget checks. When absent, per-call checks run
  // after the fact against the max degree of the reconstructed graph.
  std::optional<std::size_t> delta_bound;
  VertexId root = 0;

  int effective_ell() const;
};

// G_i: the hidden graph induced on layers 0..i-1, plus the full root layering.
struct KnownPrefix {
  int i = 0;
  Graph graph;
  Layering layering;
};

struct AncestorSearchResult {
  PartId part = kNoPart;
  // Residual subtree size before each pivot, then the final size.
  std::vector<std::size_t> residual_sizes;
  std::uint64_t distinct_queries = 0;
  int pivots() const { return static_cast<int>(residual_sizes.size()) - 1; }
};

// Finds anc(x, k) for x on layer prefix.i, where k = t.cap(), by repeated
// centroid pivots: query x against the open neighbourhood of the pivot part
// and keep the side holding the closest neighbour.
AncestorSearchResult find_ancestor_part(VertexId x, const LayeringTree& t,
                                        const KnownPrefix& prefix,
                                        DistanceOracle& oracle,
                                        SubtreeScratch* scratch = nullptr);

struct LayerTrace {
  int layer = 0;
  int cap = 0;
  std::size_t layer_size = 0;
  std::uint64_t anc_queries = 0;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t max_anc_call = 0;        // worst single ancestor search
  std::uint64_t max_neighbor_vertex = 0;  // worst single vertex's neighbor search
  std::size_t max_candidates = 0;        // largest candidate set C(v)
  std::size_t max_part_size = 0;         // largest part of T_k
  int max_pivots = 0;
  friend bool operator==(const LayerTrace&, const LayerTrace&) = default;
};

struct BudgetViolation {
  std::string check;
  int layer = -1;  // -1 for whole-run checks
  std::uint64_t observed = 0;
  std::uint64_t limit = 0;
  friend bool operator==(const BudgetViolation&, const BudgetViolation&) = default;
};

// Evaluates the per-phase and per-call limits for a given degree bound.
struct BudgetLimits {
  std::uint64_t root_bfs = 0;
  std::uint64_t bootstrap = 0;
  std::uint64_t per_ancestor_search = 0;
  std::uint64_t per_vertex_neighbor = 0;
  std::uint64_t candidate_set = 0;
  std::uint64_t part_size = 0;
  // delta^(4*ell+8): the looser per-vertex neighbor figure, reported only.
  std::uint64_t per_vertex_neighbor_loose = 0;

  static BudgetLimits compute(std::size_t n, std::size_t delta, int ell);
  std::uint64_t total(std::uint64_t loop_vertices) const;
};

struct ExtendResult {
  KnownPrefix prefix;
  LayerTrace trace;
};

// G_{i+1} from G_i and T_k with k = i - ell - 2. Throws InvariantViolation
// when a candidate set outgrows limits.candidate_set (if limits given).
ExtendResult extend_one_layer(const KnownPrefix& prefix, const LayeringTree& t,
                              DistanceOracle& oracle,
                              const BudgetLimits* limits = nullptr);

struct ReconstructionResult {
  Graph graph;
  QueryLedger ledger;
  int ell = 0;
  std::size_t delta_used = 0;  // degree bound the budget checks ran against
  std::vector<LayerTrace> trace;
  std::vector<BudgetViolation> violations;
  std::uint64_t loop_vertices = 0;  // vertices handled by extend_one_layer

  bool tau_violation_suspected() const { return !violations.empty(); }
};

// The full algorithm over oracle.num_vertices() vertices.
ReconstructionResult reconstruct(DistanceOracle& oracle,
                                 const ReconstructionConfig& cfg);

// Queries all n(n-1)/2 pairs.
Graph reconstruct_naive(DistanceOracle& oracle);

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);
unsigned ceil_log2(std::uint64_t n);

}  // namespace sprecon

#endif  // SPRECON_RECONSTRUCTOR_HPP
