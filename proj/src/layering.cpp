#include "sprecon/layering.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sprecon/errors.hpp"

namespace sprecon {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }
  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
};

// Vertices with depth in [lo, hi] reachable from `sources` in g.
std::vector<VertexId> reach_within_layers(const Graph& g, const Layering& lay,
                                          std::span<const VertexId> sources,
                                          int lo, int hi) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> out(sources.begin(), sources.end());
  for (VertexId s : sources) seen[s] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (VertexId w : g.neighbors(out[head])) {
      Distance d = lay.depth[w];
      if (!seen[w] && d >= lo && d <= hi) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::span<const VertexId> Layering::layer(int i) const {
  if (i < 0 || i >= num_layers()) return {};
  return layers[static_cast<std::size_t>(i)];
}

Layering Layering::from_depths(VertexId root, std::vector<Distance> depth) {
  if (root >= depth.size() || depth[root] != 0) {
    throw std::invalid_argument("layering root must have depth 0");
  }
  Layering lay;
  lay.root = root;
  Distance max_depth = 0;
  for (VertexId v = 0; v < depth.size(); ++v) {
    if (depth[v] == kUnreachable) {
      throw std::invalid_argument("graph is disconnected");
    }
    if (depth[v] == 0 && v != root) {
      throw std::invalid_argument("only the root may have depth 0");
    }
    max_depth = std::max(max_depth, depth[v]);
  }
  lay.layers.resize(static_cast<std::size_t>(max_depth) + 1);
  for (VertexId v = 0; v < depth.size(); ++v) {
    lay.layers[static_cast<std::size_t>(depth[v])].push_back(v);
  }
  for (const auto& l : lay.layers) {
    if (l.empty()) throw std::invalid_argument("layering has an empty layer");
  }
  lay.depth = std::move(depth);
  return lay;
}

Layering build_layering(const Graph& g, VertexId s) {
  return Layering::from_depths(s, bfs_distances(g, s));
}

std::vector<PartId> LayeringTree::parts_at_layer(int layer) const {
  std::vector<PartId> out;
  for (const auto& p : parts_) {
    if (p.layer == layer) out.push_back(p.id);
  }
  return out;
}

std::vector<std::pair<PartId, PartId>> LayeringTree::tree_edges() const {
  std::vector<std::pair<PartId, PartId>> out;
  for (const auto& p : parts_) {
    PartId par = parent_[static_cast<std::size_t>(p.id)];
    if (par != kNoPart) out.emplace_back(par, p.id);
  }
  return out;
}

std::vector<PartId> LayeringTree::tree_neighbors(PartId p) const {
  std::vector<PartId> out;
  if (parent(p) != kNoPart) out.push_back(parent(p));
  const auto& ch = children(p);
  out.insert(out.end(), ch.begin(), ch.end());
  return out;
}

LayeringTree LayeringTree::truncated(int cap) const {
  if (cap >= cap_) return *this;
  LayeringTree t;
  t.cap_ = cap;
  std::size_t keep = 0;
  while (keep < parts_.size() && parts_[keep].layer <= cap) ++keep;
  auto keep_end = static_cast<std::ptrdiff_t>(keep);
  t.parts_.assign(parts_.begin(), parts_.begin() + keep_end);
  t.parent_.assign(parent_.begin(), parent_.begin() + keep_end);
  t.children_.resize(keep);
  for (std::size_t p = 0; p < keep; ++p) {
    for (PartId c : children_[p]) {
      if (static_cast<std::size_t>(c) < keep) t.children_[p].push_back(c);
    }
  }
  t.vertex_to_part_ = vertex_to_part_;
  for (auto& vp : t.vertex_to_part_) {
    if (vp != kNoPart && static_cast<std::size_t>(vp) >= keep) vp = kNoPart;
  }
  return t;
}

std::string LayeringTree::dump() const {
  std::ostringstream out;
  std::vector<PartId> stack;
  if (!parts_.empty()) stack.push_back(0);
  while (!stack.empty()) {
    PartId p = stack.back();
    stack.pop_back();
    const Part& part = parts_[static_cast<std::size_t>(p)];
    out << std::string(static_cast<std::size_t>(2 * part.layer), ' ') << p
        << " L" << part.layer << ":";
    for (VertexId v : part.vertices) out << ' ' << v;
    out << '\n';
    const auto& ch = children_[static_cast<std::size_t>(p)];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out.str();
}

LayeringTree build_tree_from_sweep(const Graph& g, const Layering& lay,
                                   int top_layer, int cap) {
  top_layer = std::min(top_layer, lay.num_layers() - 1);
  cap = std::min(cap, top_layer);
  const std::size_t n = g.num_vertices();
  DisjointSets dsu(n);
  constexpr std::size_t kNoGroup = static_cast<std::size_t>(-1);
  std::vector<std::size_t> group_of_rep(n, kNoGroup);

  // Two vertices of L_j share a part iff connected in g[L_j..L_top]. Sweeping
  // layers bottom-up leaves the union-find holding exactly that subgraph.
  std::vector<std::vector<std::vector<VertexId>>> groups(
      static_cast<std::size_t>(std::max(cap + 1, 0)));
  for (int j = top_layer; j >= 0; --j) {
    for (VertexId v : lay.layer(j)) {
      for (VertexId w : g.neighbors(v)) {
        Distance d = lay.depth[w];
        if (d >= j && d <= top_layer) dsu.unite(v, w);
      }
    }
    if (j > cap) continue;
    auto& layer_groups = groups[static_cast<std::size_t>(j)];
    for (VertexId v : lay.layer(j)) {
      VertexId r = dsu.find(v);
      if (group_of_rep[r] == kNoGroup) {
        group_of_rep[r] = layer_groups.size();
        layer_groups.push_back({v});
      } else {
        layer_groups[group_of_rep[r]].push_back(v);
      }
    }
    for (VertexId v : lay.layer(j)) group_of_rep[dsu.find(v)] = kNoGroup;
  }

  LayeringTree t;
  t.cap_ = cap;
  t.vertex_to_part_.assign(n, kNoPart);
  for (int j = 0; j <= cap; ++j) {
    // Layer vertices were scanned ascending, so groups are in min-id order.
    for (auto& vs : groups[static_cast<std::size_t>(j)]) {
      auto id = static_cast<PartId>(t.parts_.size());
      for (VertexId v : vs) t.vertex_to_part_[v] = id;
      t.parts_.push_back(Part{id, j, std::move(vs)});
    }
  }
  t.parent_.assign(t.parts_.size(), kNoPart);
  t.children_.assign(t.parts_.size(), {});
  for (const auto& p : t.parts_) {
    if (p.layer == 0) continue;
    PartId par = kNoPart;
    for (VertexId v : p.vertices) {
      for (VertexId w : g.neighbors(v)) {
        if (lay.depth[w] != p.layer - 1) continue;
        PartId q = t.vertex_to_part_[w];
        if (par == kNoPart) {
          par = q;
        } else if (par != q) {
          throw InvariantViolation("part " + std::to_string(p.id) +
                                   " touches two parts on the layer above");
        }
      }
    }
    if (par == kNoPart) {
      throw InvariantViolation("part " + std::to_string(p.id) + " has no parent");
    }
    t.parent_[static_cast<std::size_t>(p.id)] = par;
    t.children_[static_cast<std::size_t>(par)].push_back(p.id);
  }
  return t;
}

LayeringTree build_layering_tree(const Graph& g, const Layering& lay) {
  int top = lay.num_layers() - 1;
  return build_tree_from_sweep(g, lay, top, top);
}

LayeringTree extend_partial_tree(const Graph& prefix, const Layering& lay,
                                 int i, int k, int ell) {
  if (k < 0 || k > i - ell - 2) {
    throw std::invalid_argument("partial tree cap k=" + std::to_string(k) +
                                " needs 0 <= k <= i-ell-2 = " +
                                std::to_string(i - ell - 2));
  }
  return build_tree_from_sweep(prefix, lay, i - 1, k);
}

int tree_length(const Graph& g, const LayeringTree& lt) {
  int best = 0;
  for (const auto& p : lt.parts()) {
    if (p.vertices.size() < 2) continue;
    for (VertexId u : p.vertices) {
      auto dist = bfs_distances(g, u);
      for (VertexId v : p.vertices) {
        if (dist[v] == kUnreachable) {
          throw std::invalid_argument("tree_length: part is not connected in g");
        }
        best = std::max(best, static_cast<int>(dist[v]));
      }
    }
  }
  return best;
}

SubtreeScratch::SubtreeScratch(std::size_t num_parts)
    : member_(num_parts, 0),
      seen_(num_parts, 0),
      dfs_parent_(num_parts, kNoPart),
      size_(num_parts, 0),
      heaviest_(num_parts, 0) {}

std::uint32_t SubtreeScratch::next_stamp() {
  if (++stamp_ == 0) {
    std::fill(member_.begin(), member_.end(), 0);
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  return stamp_;
}

PartId centroid(const LayeringTree& lt, std::span<const PartId> members,
                SubtreeScratch& s) {
  if (members.empty()) throw std::invalid_argument("centroid of empty subset");
  if (s.member_.size() != lt.num_parts()) {
    throw std::invalid_argument("scratch sized for a different tree");
  }
  const std::uint32_t stamp = s.next_stamp();
  PartId root = members.front();
  for (PartId p : members) {
    s.member_.at(static_cast<std::size_t>(p)) = stamp;
    root = std::min(root, p);
  }
  const std::size_t total = members.size();

  // DFS preorder; every part appears after its DFS parent.
  std::vector<PartId> order;
  order.reserve(total);
  std::vector<PartId> stack{root};
  s.seen_[static_cast<std::size_t>(root)] = stamp;
  s.dfs_parent_[static_cast<std::size_t>(root)] = kNoPart;
  while (!stack.empty()) {
    PartId p = stack.back();
    stack.pop_back();
    order.push_back(p);
    auto pi = static_cast<std::size_t>(p);
    s.size_[pi] = 1;
    s.heaviest_[pi] = 0;
    for (PartId q : lt.tree_neighbors(p)) {
      auto qi = static_cast<std::size_t>(q);
      if (s.member_[qi] == stamp && s.seen_[qi] != stamp) {
        s.seen_[qi] = stamp;
        s.dfs_parent_[qi] = p;
        stack.push_back(q);
      }
    }
  }
  if (order.size() != total) {
    throw std::invalid_argument("centroid: subset is not connected");
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto p = static_cast<std::size_t>(*it);
    PartId up = s.dfs_parent_[p];
    if (up != kNoPart) {
      auto ui = static_cast<std::size_t>(up);
      s.size_[ui] += s.size_[p];
      s.heaviest_[ui] = std::max(s.heaviest_[ui], s.size_[p]);
    }
  }
  PartId best = kNoPart;
  for (PartId p : order) {
    auto pi = static_cast<std::size_t>(p);
    std::size_t worst = std::max(s.heaviest_[pi], total - s.size_[pi]);
    if (worst <= total / 2 && (best == kNoPart || p < best)) best = p;
  }
  if (best == kNoPart) throw InvariantViolation("tree without a centroid");
  if (total >= 3) {
    std::size_t deg = 0;
    for (PartId q : lt.tree_neighbors(best)) {
      deg += s.member_[static_cast<std::size_t>(q)] == stamp;
    }
    if (deg < 2) {
      throw InvariantViolation("centroid of a tree with >= 3 parts is a leaf");
    }
  }
  return best;
}

PartId centroid(const LayeringTree& lt, const std::vector<bool>& subset) {
  if (subset.size() != lt.num_parts()) {
    throw std::invalid_argument("subset size mismatch");
  }
  std::vector<PartId> members;
  for (std::size_t p = 0; p < subset.size(); ++p) {
    if (subset[p]) members.push_back(static_cast<PartId>(p));
  }
  SubtreeScratch scratch(lt.num_parts());
  return centroid(lt, members, scratch);
}

std::vector<PartId> component_without(const LayeringTree& lt,
                                      std::span<const PartId> members,
                                      PartId removed, PartId start,
                                      SubtreeScratch& s) {
  const std::uint32_t stamp = s.next_stamp();
  for (PartId p : members) s.member_.at(static_cast<std::size_t>(p)) = stamp;
  auto si = static_cast<std::size_t>(start);
  if (start == removed || s.member_.at(si) != stamp) return {};
  s.member_.at(static_cast<std::size_t>(removed)) = 0;
  std::vector<PartId> out{start};
  s.seen_[si] = stamp;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (PartId q : lt.tree_neighbors(out[head])) {
      auto qi = static_cast<std::size_t>(q);
      if (s.member_[qi] == stamp && s.seen_[qi] != stamp) {
        s.seen_[qi] = stamp;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> comp_vertices(const LayeringTree& lt, PartId p,
                                    const Graph& prefix, const Layering& lay,
                                    int i) {
  const Part& part = lt.part(p);
  if (part.layer != lt.cap()) {
    throw std::invalid_argument("comp_vertices: part is not on the cap layer");
  }
  return reach_within_layers(prefix, lay, part.vertices, lt.cap(), i - 1);
}

PartId anc_by_connectivity(VertexId u, const LayeringTree& lt,
                           const Graph& prefix, const Layering& lay, int i) {
  const int k = lt.cap();
  Distance du = lay.depth.at(u);
  if (du < k || du > i - 1) {
    throw std::invalid_argument("anc_by_connectivity: vertex depth outside [k, i-1]");
  }
  VertexId one[] = {u};
  for (VertexId w : reach_within_layers(prefix, lay, one, k, i - 1)) {
    if (lay.depth[w] == k) return lt.part_of(w);
  }
  throw InvariantViolation("no cap-layer part reachable from vertex " +
                           std::to_string(u));
}

std::vector<PartId> ancestors_by_connectivity(const LayeringTree& lt,
                                              const Graph& prefix,
                                              const Layering& lay, int i) {
  const int k = lt.cap();
  const std::size_t n = prefix.num_vertices();
  std::vector<bool> alive(n, false);
  for (int j = k; j <= i - 1; ++j) {
    for (VertexId v : lay.layer(j)) alive[v] = true;
  }
  auto label = components_masked(prefix, alive);
  std::vector<PartId> label_part(n, kNoPart);
  for (VertexId v : lay.layer(k)) {
    PartId& slot = label_part[label[v]];
    PartId pv = lt.part_of(v);
    if (slot != kNoPart && slot != pv) {
      throw InvariantViolation("two cap-layer parts share a prefix component");
    }
    slot = pv;
  }
  std::vector<PartId> out(n, kNoPart);
  for (VertexId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    out[v] = label_part[label[v]];
    if (out[v] == kNoPart) {
      throw InvariantViolation("no cap-layer part reachable from vertex " +
                               std::to_string(v));
    }
  }
  return out;
}

}  // namespace sprecon
