#include "sprecon/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace sprecon {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  // Reject the low sliver that would bias the modulo.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::RandomTree: return "random_tree";
    case Family::KTree: return "k_tree";
    case Family::RingOfCliques: return "ring_of_cliques";
    case Family::Cycle: return "cycle";
    case Family::Caterpillar: return "caterpillar";
    case Family::BoundedDegreeConnected: return "bounded_degree_connected";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  struct Alias {
    std::string_view a, b;
    Family f;
  };
  static constexpr Alias kAliases[] = {
      {"random_tree", "RandomTree", Family::RandomTree},
      {"k_tree", "KTree", Family::KTree},
      {"ring_of_cliques", "RingOfCliques", Family::RingOfCliques},
      {"cycle", "Cycle", Family::Cycle},
      {"caterpillar", "Caterpillar", Family::Caterpillar},
      {"bounded_degree_connected", "BoundedDegreeConnected",
       Family::BoundedDegreeConnected},
  };
  for (const auto& al : kAliases) {
    if (name == al.a || name == al.b) return al.f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace {

[[noreturn]] void infeasible(const FamilySpec& s, const std::string& why) {
  throw std::invalid_argument(std::string(family_name(s.family)) + " with n=" +
                              std::to_string(s.n) + ", max_degree=" +
                              std::to_string(s.max_degree) + ": " + why);
}

// Uniform attachment tree with a degree cap; vertex v joins a uniformly
// chosen earlier vertex that still has spare degree.
Graph capped_random_tree(std::size_t n, std::size_t cap, SplitMix64& rng,
                         std::vector<std::size_t>& deg) {
  GraphBuilder b(n);
  deg.assign(n, 0);
  std::vector<VertexId> open;
  if (n > 0) open.push_back(0);
  for (VertexId v = 1; v < n; ++v) {
    if (open.empty()) throw std::invalid_argument("degree cap too small for a tree");
    std::size_t idx = rng.below(open.size());
    VertexId p = open[idx];
    b.add_edge(p, v);
    if (++deg[p] >= cap) {
      open[idx] = open.back();
      open.pop_back();
    }
    ++deg[v];
    if (deg[v] < cap) open.push_back(v);
  }
  return b.build();
}

Graph gen_random_tree(const FamilySpec& s, SplitMix64& rng) {
  if (s.n >= 3 && s.max_degree < 2) infeasible(s, "a tree on >= 3 vertices needs max_degree >= 2");
  if (s.n == 2 && s.max_degree < 1) infeasible(s, "needs max_degree >= 1");
  std::vector<std::size_t> deg;
  return capped_random_tree(s.n, s.max_degree, rng, deg);
}

Graph gen_caterpillar(const FamilySpec& s, SplitMix64& rng) {
  const std::size_t n = s.n, d = s.max_degree;
  if (n >= 3 && d < 2) infeasible(s, "needs max_degree >= 2");
  if (n == 2 && d < 1) infeasible(s, "needs max_degree >= 1");
  auto capacity = [d](std::size_t spine) -> std::size_t {
    if (spine == 1) return d;
    return 2 * (d - 1) + (spine - 2) * (d - 2);
  };
  std::size_t spine = 1;
  while (spine < n && capacity(spine) < n - spine) ++spine;
  GraphBuilder b(n);
  std::vector<std::size_t> slots(spine);
  for (VertexId v = 0; v < spine; ++v) {
    if (v + 1 < spine) b.add_edge(v, v + 1);
    std::size_t used = (v > 0) + (v + 1 < spine);
    slots[v] = d - used;
  }
  std::vector<VertexId> open;
  for (VertexId v = 0; v < spine; ++v) {
    if (slots[v] > 0) open.push_back(v);
  }
  for (auto leg = static_cast<VertexId>(spine); leg < n; ++leg) {
    std::size_t idx = rng.below(open.size());
    VertexId p = open[idx];
    b.add_edge(p, leg);
    if (--slots[p] == 0) {
      open[idx] = open.back();
      open.pop_back();
    }
  }
  return b.build();
}

std::optional<Graph> try_k_tree(const FamilySpec& s, SplitMix64& rng) {
  const std::size_t n = s.n, k = s.k, cap = s.max_degree;
  GraphBuilder b(n);
  std::vector<std::size_t> deg(n, 0);
  for (VertexId u = 0; u <= k; ++u) {
    for (VertexId v = u + 1; v <= k; ++v) b.add_edge(u, v);
    deg[u] = k;
  }
  std::vector<std::vector<VertexId>> cliques;
  for (VertexId skip = 0; skip <= k; ++skip) {
    std::vector<VertexId> c;
    for (VertexId u = 0; u <= k; ++u) {
      if (u != skip) c.push_back(u);
    }
    cliques.push_back(std::move(c));
  }
  auto attachable = [&](const std::vector<VertexId>& c) {
    return std::all_of(c.begin(), c.end(), [&](VertexId u) { return deg[u] < cap; });
  };
  for (auto v = static_cast<VertexId>(k + 1); v < n; ++v) {
    // Saturated cliques stay saturated, so drop them as they are found.
    std::size_t idx = 0;
    while (true) {
      if (cliques.empty()) return std::nullopt;
      idx = rng.below(cliques.size());
      if (attachable(cliques[idx])) break;
      cliques[idx] = std::move(cliques.back());
      cliques.pop_back();
    }
    const std::vector<VertexId> base = cliques[idx];
    for (VertexId u : base) {
      b.add_edge(u, v);
      ++deg[u];
    }
    deg[v] = k;
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<VertexId> c;
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (j != drop) c.push_back(base[j]);
      }
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  return b.build();
}

Graph gen_k_tree(const FamilySpec& s, std::uint64_t seed) {
  if (s.k < 1) infeasible(s, "k must be >= 1");
  if (s.n < s.k + 1) infeasible(s, "k-tree needs n >= k+1");
  if (s.n > s.k + 1 && s.max_degree < s.k + 1) infeasible(s, "k-tree needs max_degree >= k+1");
  if (s.max_degree < s.k) infeasible(s, "k-tree needs max_degree >= k");
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(attempt) * 0xd1b54a32d192ed03ULL);
    if (auto g = try_k_tree(s, rng)) return std::move(*g);
  }
  infeasible(s, "ran out of attachable cliques after retries");
}

Graph gen_ring_of_cliques(const FamilySpec& s) {
  const std::size_t c = s.clique_size;
  if (c < 1) infeasible(s, "clique_size must be >= 1");
  if (s.n % c != 0) infeasible(s, "n must be a multiple of clique_size");
  const std::size_t m = s.n / c;
  if (m < 3) infeasible(s, "needs at least 3 cliques");
  if (s.max_degree < std::max<std::size_t>(c, 2)) infeasible(s, "max_degree too small for the cliques");
  GraphBuilder b(s.n);
  for (std::size_t j = 0; j < m; ++j) {
    auto base = static_cast<VertexId>(j * c);
    for (VertexId u = 0; u < c; ++u) {
      for (VertexId v = u + 1; v < c; ++v) b.add_edge(base + u, base + v);
    }
    auto next = static_cast<VertexId>(((j + 1) % m) * c);
    b.add_edge(base + static_cast<VertexId>(c - 1), next);
  }
  return b.build();
}

Graph gen_cycle(const FamilySpec& s) {
  if (s.n < 3) infeasible(s, "cycle needs n >= 3");
  if (s.max_degree < 2) infeasible(s, "cycle needs max_degree >= 2");
  GraphBuilder b(s.n);
  for (VertexId v = 0; v < s.n; ++v) b.add_edge(v, static_cast<VertexId>((v + 1) % s.n));
  return b.build();
}

Graph gen_bounded_degree(const FamilySpec& s, SplitMix64& rng) {
  if (s.n >= 3 && s.max_degree < 2) infeasible(s, "needs max_degree >= 2");
  if (s.n == 2 && s.max_degree < 1) infeasible(s, "needs max_degree >= 1");
  std::vector<std::size_t> deg;
  Graph tree = capped_random_tree(s.n, s.max_degree, rng, deg);
  GraphBuilder b(tree);
  if (s.n < 3) return b.build();
  for (std::size_t attempt = 0; attempt < s.n; ++attempt) {
    auto u = static_cast<VertexId>(rng.below(s.n));
    auto v = static_cast<VertexId>(rng.below(s.n));
    if (u == v || deg[u] >= s.max_degree || deg[v] >= s.max_degree) continue;
    if (b.add_edge(u, v)) {
      ++deg[u];
      ++deg[v];
    }
  }
  return b.build();
}

}  // namespace

GeneratedGraph generate(const FamilySpec& spec) {
  if (spec.n == 0) infeasible(spec, "n must be >= 1");
  SplitMix64 rng(spec.seed);
  GeneratedGraph out;
  switch (spec.family) {
    case Family::RandomTree:
      out.graph = gen_random_tree(spec, rng);
      out.treelength_bound = 1;
      break;
    case Family::Caterpillar:
      out.graph = gen_caterpillar(spec, rng);
      out.treelength_bound = 1;
      break;
    case Family::KTree:
      out.graph = gen_k_tree(spec, spec.seed);
      out.treelength_bound = 1;
      break;
    case Family::RingOfCliques:
      out.graph = gen_ring_of_cliques(spec);
      break;
    case Family::Cycle:
      out.graph = gen_cycle(spec);
      break;
    case Family::BoundedDegreeConnected:
      out.graph = gen_bounded_degree(spec, rng);
      break;
  }
  return out;
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // Maximum cardinality search: visit[v] = position in the search order.
  std::vector<std::size_t> weight(n, 0), visit(n, n);
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<std::vector<VertexId>> buckets(n + 1);
  for (VertexId v = 0; v < n; ++v) buckets[0].push_back(v);
  std::size_t top = 0;
  while (order.size() < n) {
    while (true) {
      auto& bk = buckets[top];
      while (!bk.empty() && (visit[bk.back()] != n || weight[bk.back()] != top)) bk.pop_back();
      if (!bk.empty() || top == 0) break;
      --top;
    }
    VertexId v = buckets[top].back();
    buckets[top].pop_back();
    visit[v] = order.size();
    order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (visit[w] != n) continue;
      ++weight[w];
      buckets[weight[w]].push_back(w);
      top = std::max(top, weight[w]);
    }
  }
  // Reverse MCS order is a perfect elimination ordering iff g is chordal:
  // earlier neighbours of v, minus the latest one u, must all neighbour u.
  for (VertexId v : order) {
    VertexId latest = kNoVertex;
    for (VertexId w : g.neighbors(v)) {
      if (visit[w] < visit[v] && (latest == kNoVertex || visit[w] > visit[latest])) latest = w;
    }
    if (latest == kNoVertex) continue;
    for (VertexId w : g.neighbors(v)) {
      if (w != latest && visit[w] < visit[v] && !g.has_edge(w, latest)) return false;
    }
  }
  return true;
}

std::vector<std::string> verify_family_invariants(const Graph& g,
                                                  const FamilySpec& spec) {
  std::vector<std::string> bad;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (n != spec.n) bad.push_back("vertex count " + std::to_string(n) + " != " + std::to_string(spec.n));
  if (!is_connected(g)) bad.push_back("not connected");
  if (max_degree(g) > spec.max_degree) {
    bad.push_back("max degree " + std::to_string(max_degree(g)) + " exceeds cap " +
                  std::to_string(spec.max_degree));
  }
  switch (spec.family) {
    case Family::RandomTree:
    case Family::Caterpillar: {
      if (n > 0 && m != n - 1) bad.push_back("edge count is not n-1");
      if (spec.family == Family::Caterpillar && n > 2) {
        std::vector<bool> spine(n, false);
        for (VertexId v = 0; v < n; ++v) spine[v] = g.degree(v) > 1;
        Graph core = induced_on(g, spine);
        std::size_t spine_vertices = 0;
        for (VertexId v = 0; v < n; ++v) {
          if (!spine[v]) continue;
          ++spine_vertices;
          if (core.degree(v) > 2) bad.push_back("spine is not a path");
        }
        if (spine_vertices > 0 && core.num_edges() != spine_vertices - 1) {
          bad.push_back("spine is not a path");
        }
      }
      break;
    }
    case Family::KTree: {
      if (!is_chordal(g)) bad.push_back("not chordal");
      const std::size_t k = spec.k;
      if (n >= k + 1 && m != k * (k + 1) / 2 + (n - k - 1) * k) {
        bad.push_back("edge count does not match a k-tree");
      }
      break;
    }
    case Family::Cycle: {
      if (m != n) bad.push_back("edge count is not n");
      for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) != 2) {
          bad.push_back("vertex " + std::to_string(v) + " does not have degree 2");
          break;
        }
      }
      break;
    }
    case Family::RingOfCliques: {
      const std::size_t c = spec.clique_size;
      if (c == 0 || n % c != 0) {
        bad.push_back("n is not a multiple of clique_size");
        break;
      }
      const std::size_t cliques = n / c;
      if (m != cliques * (c * (c - 1) / 2) + cliques) bad.push_back("edge count does not match");
      for (std::size_t j = 0; j < cliques; ++j) {
        for (std::size_t u = 0; u < c; ++u) {
          for (std::size_t v = u + 1; v < c; ++v) {
            if (!g.has_edge(static_cast<VertexId>(j * c + u), static_cast<VertexId>(j * c + v))) {
              bad.push_back("clique " + std::to_string(j) + " is not complete");
              u = c;
              break;
            }
          }
        }
      }
      break;
    }
    case Family::BoundedDegreeConnected:
      break;
  }
  return bad;
}

}  // namespace sprecon
