#ifndef SPRECON_GRAPH_HPP
#define SPRECON_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sprecon {

using VertexId = std::uint32_t;
using Distance = std::int32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
// Distances are never negative, so -1 only ever means "no path".
inline constexpr Distance kUnreachable = -1;

using Edge = std::pair<VertexId, VertexId>;  // normal form: first < second

// Simple undirected graph over vertices 0..n-1 in canonical form: every
// adjacency list is strictly increasing and u in adj(v) iff v in adj(u).
// Immutable once built; use GraphBuilder to assemble one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  // Sorted edge list in (u < v) normal form.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t num_edges_ = 0;
};

// Accumulates edges and produces a canonical Graph. Single owner.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adj_(n) {}
  explicit GraphBuilder(const Graph& g) : adj_(g.adj_) {}

  std::size_t num_vertices() const { return adj_.size(); }

  // Throws std::invalid_argument on a self-loop or out-of-range endpoint.
  // Returns false (and does nothing) if the edge is already present.
  bool add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;

  Graph build() const;

 private:
  std::vector<std::vector<VertexId>> adj_;
};

// Convenience: build from an explicit edge list (duplicates rejected).
Graph make_graph(std::size_t n, std::span<const Edge> edges);

// BFS depth of every vertex from s; kUnreachable where no path exists.
std::vector<Distance> bfs_distances(const Graph& g, VertexId s);

// Component label per vertex of g[alive]; label = minimum vertex id of the
// component. Dead vertices get kNoVertex. alive.size() must equal n.
std::vector<VertexId> components_masked(const Graph& g,
                                        const std::vector<bool>& alive);

// N(S) = N[S] \ S, sorted ascending.
std::vector<VertexId> neighbors_of_set(const Graph& g,
                                       std::span<const VertexId> set);

std::size_t max_degree(const Graph& g);
bool is_connected(const Graph& g);
bool graphs_equal(const Graph& a, const Graph& b);

// Induced subgraph on `keep` with the original vertex ids (vertices outside
// keep become isolated).
Graph induced_on(const Graph& g, const std::vector<bool>& keep);

}  // namespace sprecon

#endif  // SPRECON_GRAPH_HPP
