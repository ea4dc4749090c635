#include "sprecon/reconstructor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sprecon/errors.hpp"

namespace sprecon {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

unsigned as_exp(int e) { return e < 0 ? 0u : static_cast<unsigned>(e); }

}  // namespace

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kSaturated || r == 0) break;
  }
  return r;
}

unsigned ceil_log2(std::uint64_t n) {
  unsigned r = 0;
  while (r < 64 && (std::uint64_t{1} << r) < n) ++r;
  return r;
}

int ReconstructionConfig::effective_ell() const {
  int ell = ell_override ? *ell_override : 3 * tau;
  if (ell < 0) throw std::invalid_argument("length bound must be >= 0");
  return ell;
}

BudgetLimits BudgetLimits::compute(std::size_t n, std::size_t delta, int ell) {
  BudgetLimits b;
  b.root_bfs = n == 0 ? 0 : n - 1;
  b.bootstrap = saturating_pow(delta, as_exp(2 * (ell + 2)));
  b.per_ancestor_search =
      sat_mul(saturating_pow(delta, as_exp(ell + 2)), ceil_log2(n));
  b.per_vertex_neighbor = saturating_pow(delta, as_exp(2 * ell + 4));
  b.candidate_set = b.per_vertex_neighbor;
  b.part_size = saturating_pow(delta, as_exp(ell + 1));
  b.per_vertex_neighbor_loose = saturating_pow(delta, as_exp(4 * ell + 8));
  return b;
}

std::uint64_t BudgetLimits::total(std::uint64_t loop_vertices) const {
  std::uint64_t per_vertex = sat_add(per_ancestor_search, per_vertex_neighbor);
  return sat_add(sat_add(root_bfs, bootstrap), sat_mul(loop_vertices, per_vertex));
}

AncestorSearchResult find_ancestor_part(VertexId x, const LayeringTree& t,
                                        const KnownPrefix& prefix,
                                        DistanceOracle& oracle,
                                        SubtreeScratch* scratch) {
  const Layering& lay = prefix.layering;
  const int k = t.cap();
  if (lay.depth.at(x) != prefix.i) {
    throw std::invalid_argument("find_ancestor_part: x must lie on layer i");
  }
  if (k > prefix.i - 2) {
    throw std::invalid_argument("find_ancestor_part: cap too deep for prefix");
  }
  SubtreeScratch local(scratch ? 0 : t.num_parts());
  SubtreeScratch& s = scratch ? *scratch : local;

  AncestorSearchResult result;
  const std::uint64_t before = oracle.ledger().distinct_queries;
  std::vector<PartId> members(t.num_parts());
  for (std::size_t p = 0; p < members.size(); ++p) members[p] = static_cast<PartId>(p);

  while (true) {
    result.residual_sizes.push_back(members.size());
    PartId only = kNoPart;
    std::size_t deepest = 0;
    for (PartId p : members) {
      if (t.part(p).layer == k) {
        ++deepest;
        only = p;
      }
    }
    if (deepest == 0) {
      throw InvariantViolation("ancestor search lost every cap-layer part");
    }
    if (deepest == 1) {
      result.part = only;
      break;
    }
    // Two cap-layer leaves force at least one internal part, so the
    // centroid is internal and never on the cap layer.
    PartId pivot = centroid(t, members, s);
    const Part& pp = t.part(pivot);
    if (pp.layer == k) throw InvariantViolation("pivot on the cap layer");

    auto boundary = neighbors_of_set(prefix.graph, pp.vertices);
    VertexId closest = kNoVertex;
    Distance best = std::numeric_limits<Distance>::max();
    for (VertexId w : boundary) {
      Distance d = oracle.query(x, w, QueryPhase::AncestorSearch);
      if (d < best) {  // ascending scan keeps the smallest id on ties
        best = d;
        closest = w;
      }
    }
    if (closest == kNoVertex) throw InvariantViolation("pivot part has no neighbours");
    PartId next = t.part_of(closest);
    auto side = component_without(t, members, pivot, next, s);
    if (side.empty()) {
      throw InvariantViolation("closest neighbour of the pivot left the search tree");
    }
    members = std::move(side);
  }
  result.distinct_queries = oracle.ledger().distinct_queries - before;
  return result;
}

ExtendResult extend_one_layer(const KnownPrefix& prefix, const LayeringTree& t,
                              DistanceOracle& oracle, const BudgetLimits* limits) {
  const Layering& lay = prefix.layering;
  const int i = prefix.i;
  const int k = t.cap();
  auto layer_i = lay.layer(i);
  if (layer_i.empty()) throw std::invalid_argument("extend_one_layer: empty layer");

  ExtendResult out;
  LayerTrace& tr = out.trace;
  tr.layer = i;
  tr.cap = k;
  tr.layer_size = layer_i.size();
  for (const auto& p : t.parts()) tr.max_part_size = std::max(tr.max_part_size, p.vertices.size());

  // Known layers k..i-1 need no queries.
  std::vector<PartId> anc = ancestors_by_connectivity(t, prefix.graph, lay, i);

  SubtreeScratch scratch(t.num_parts());
  const std::uint64_t anc_start = oracle.ledger().distinct_queries;
  for (VertexId x : layer_i) {
    auto r = find_ancestor_part(x, t, prefix, oracle, &scratch);
    anc[x] = r.part;
    tr.max_anc_call = std::max(tr.max_anc_call, r.distinct_queries);
    tr.max_pivots = std::max(tr.max_pivots, r.pivots());
  }
  tr.anc_queries = oracle.ledger().distinct_queries - anc_start;

  // Bucket layers i-1 and i by ancestor part.
  std::vector<std::vector<VertexId>> bucket(t.num_parts());
  for (VertexId u : lay.layer(i - 1)) bucket[static_cast<std::size_t>(anc[u])].push_back(u);
  for (VertexId u : layer_i) bucket[static_cast<std::size_t>(anc[u])].push_back(u);

  GraphBuilder builder(prefix.graph);
  const std::uint64_t nb_start = oracle.ledger().distinct_queries;
  for (VertexId v : layer_i) {
    const auto& cand = bucket[static_cast<std::size_t>(anc[v])];
    std::size_t cand_size = cand.size() - 1;  // excludes v itself
    tr.max_candidates = std::max(tr.max_candidates, cand_size);
    if (limits && cand_size > limits->candidate_set) {
      throw InvariantViolation("candidate set of vertex " + std::to_string(v) +
                               " exceeds the component bound");
    }
    const std::uint64_t before = oracle.ledger().distinct_queries;
    for (VertexId u : cand) {
      if (u == v) continue;
      // Same-layer pairs were already asked from the smaller endpoint.
      if (lay.depth[u] == i && u < v) continue;
      if (oracle.query(v, u, QueryPhase::NeighborSearch) == 1) builder.add_edge(u, v);
    }
    tr.max_neighbor_vertex =
        std::max(tr.max_neighbor_vertex, oracle.ledger().distinct_queries - before);
  }
  tr.neighbor_queries = oracle.ledger().distinct_queries - nb_start;

  out.prefix.i = i + 1;
  out.prefix.graph = builder.build();
  out.prefix.layering = lay;
  return out;
}

namespace {

std::vector<BudgetViolation> evaluate_budgets(const ReconstructionResult& r,
                                              const BudgetLimits& lim) {
  std::vector<BudgetViolation> v;
  auto check = [&](const char* name, int layer, std::uint64_t observed,
                   std::uint64_t limit, bool exact = false) {
    bool bad = exact ? observed != limit : observed > limit;
    if (bad) v.push_back({name, layer, observed, limit});
  };
  check("root_bfs", -1, r.ledger.phase(QueryPhase::RootBfs), lim.root_bfs, true);
  check("bootstrap", -1, r.ledger.phase(QueryPhase::Bootstrap), lim.bootstrap);
  for (const auto& t : r.trace) {
    check("ancestor_search", t.layer, t.max_anc_call, lim.per_ancestor_search);
    check("neighbor_search", t.layer, t.max_neighbor_vertex, lim.per_vertex_neighbor);
    check("candidate_set", t.layer, t.max_candidates, lim.candidate_set);
    check("part_size", t.layer, t.max_part_size, lim.part_size);
  }
  check("total", -1, r.ledger.distinct_queries,
        lim.total(r.loop_vertices));
  return v;
}

std::string describe(const BudgetViolation& b) {
  std::string s = "budget check '" + b.check + "' failed";
  if (b.layer >= 0) s += " at layer " + std::to_string(b.layer);
  return s + ": " + std::to_string(b.observed) + " vs limit " + std::to_string(b.limit);
}

}  // namespace

ReconstructionResult reconstruct(DistanceOracle& oracle,
                                 const ReconstructionConfig& cfg) {
  const std::size_t n = oracle.num_vertices();
  const int ell = cfg.effective_ell();
  if (cfg.root >= n) throw std::invalid_argument("root out of range");

  ReconstructionResult result;
  result.ell = ell;

  std::optional<BudgetLimits> online;
  if (cfg.delta_bound) online = BudgetLimits::compute(n, *cfg.delta_bound, ell);
  auto enforce = [&](const char* name, int layer, std::uint64_t observed,
                     std::uint64_t limit) {
    if (cfg.strict_budget && observed > limit) {
      throw BudgetExceeded(describe({name, layer, observed, limit}));
    }
  };

  // Root distances fix every layer.
  std::vector<VertexId> others;
  others.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (v != cfg.root) others.push_back(v);
  }
  std::vector<Distance> depth(n, 0);
  for (auto [v, d] : oracle.batch_distances_from(cfg.root, others, QueryPhase::RootBfs)) {
    depth[v] = d;
  }
  KnownPrefix prefix;
  prefix.layering = Layering::from_depths(cfg.root, std::move(depth));
  const Layering& lay = prefix.layering;

  // Bootstrap: every pair inside the ball L_<=ell+1.
  const int ball_layers = std::min(ell + 2, lay.num_layers());
  std::vector<VertexId> ball;
  for (int j = 0; j < ball_layers; ++j) {
    auto l = lay.layer(j);
    ball.insert(ball.end(), l.begin(), l.end());
  }
  std::sort(ball.begin(), ball.end());
  GraphBuilder boot(n);
  for (std::size_t a = 0; a < ball.size(); ++a) {
    for (std::size_t b = a + 1; b < ball.size(); ++b) {
      if (oracle.query(ball[a], ball[b], QueryPhase::Bootstrap) == 1) {
        boot.add_edge(ball[a], ball[b]);
      }
    }
  }
  if (online) {
    enforce("bootstrap", -1, oracle.ledger().phase(QueryPhase::Bootstrap), online->bootstrap);
  }
  prefix.i = ball_layers;
  prefix.graph = boot.build();

  const BudgetLimits* candidate_limits =
      (online && cfg.strict_budget) ? &*online : nullptr;
  while (prefix.i < lay.num_layers()) {
    const int i = prefix.i;
    LayeringTree t = extend_partial_tree(prefix.graph, lay, i, i - ell - 2, ell);
    ExtendResult step = extend_one_layer(prefix, t, oracle, candidate_limits);
    if (online) {
      enforce("part_size", i, step.trace.max_part_size, online->part_size);
      enforce("ancestor_search", i, step.trace.max_anc_call, online->per_ancestor_search);
      enforce("neighbor_search", i, step.trace.max_neighbor_vertex,
              online->per_vertex_neighbor);
    }
    result.loop_vertices += step.trace.layer_size;
    result.trace.push_back(step.trace);
    prefix = std::move(step.prefix);
  }

  result.graph = std::move(prefix.graph);
  result.ledger = oracle.ledger();
  result.delta_used = cfg.delta_bound ? *cfg.delta_bound : max_degree(result.graph);
  result.violations =
      evaluate_budgets(result, BudgetLimits::compute(n, result.delta_used, ell));
  if (cfg.strict_budget && !result.violations.empty()) {
    throw BudgetExceeded(describe(result.violations.front()));
  }
  return result;
}

Graph reconstruct_naive(DistanceOracle& oracle) {
  const std::size_t n = oracle.num_vertices();
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (oracle.query(u, v, QueryPhase::Baseline) == 1) b.add_edge(u, v);
    }
  }
  return b.build();
}

}  // namespace sprecon
