#include "sprecon/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sprecon {

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  return true;
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  // Scan the shorter list; lists are unsorted until build().
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

Graph GraphBuilder::build() const {
  Graph g;
  g.adj_ = adj_;
  std::size_t twice = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    twice += list.size();
  }
  g.num_edges_ = twice / 2;
  return g;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (!b.add_edge(u, v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
  }
  return b.build();
}

std::vector<Distance> bfs_distances(const Graph& g, VertexId s) {
  if (s >= g.num_vertices()) {
    throw std::invalid_argument("bfs source out of range: " + std::to_string(s));
  }
  std::vector<Distance> dist(g.num_vertices(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.num_vertices());
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexId> components_masked(const Graph& g,
                                        const std::vector<bool>& alive) {
  const std::size_t n = g.num_vertices();
  if (alive.size() != n) {
    throw std::invalid_argument("mask size does not match vertex count");
  }
  std::vector<VertexId> label(n, kNoVertex);
  std::vector<VertexId> stack;
  // Ascending scan: the first unlabeled vertex of a component is its minimum.
  for (VertexId s = 0; s < n; ++s) {
    if (!alive[s] || label[s] != kNoVertex) continue;
    label[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (alive[w] && label[w] == kNoVertex) {
          label[w] = s;
          stack.push_back(w);
        }
      }
    }
  }
  return label;
}

std::vector<VertexId> neighbors_of_set(const Graph& g,
                                       std::span<const VertexId> set) {
  std::vector<bool> in_set(g.num_vertices(), false);
  for (VertexId v : set) in_set.at(v) = true;
  std::vector<VertexId> out;
  for (VertexId v : set) {
    for (VertexId w : g.neighbors(v)) {
      if (!in_set[w]) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](Distance d) { return d == kUnreachable; });
}

bool graphs_equal(const Graph& a, const Graph& b) { return a == b; }

Graph induced_on(const Graph& g, const std::vector<bool>& keep) {
  GraphBuilder b(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    if (keep.at(u) && keep.at(v)) b.add_edge(u, v);
  }
  return b.build();
}

}  // namespace sprecon
