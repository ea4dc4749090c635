#ifndef SPRECON_LAYERING_HPP
#define SPRECON_LAYERING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sprecon/graph.hpp"

namespace sprecon {

using PartId = std::int32_t;
inline constexpr PartId kNoPart = -1;

// BFS layers from a root. layers[i] is ascending.
struct Layering {
  VertexId root = 0;
  std::vector<Distance> depth;
  std::vector<std::vector<VertexId>> layers;

  int num_layers() const { return static_cast<int>(layers.size()); }
  // Empty span for indices past the last layer.
  std::span<const VertexId> layer(int i) const;

  // Throws std::invalid_argument if any depth is kUnreachable or the depths
  // are not a valid layering (root at 0, no gaps).
  static Layering from_depths(VertexId root, std::vector<Distance> depth);
};

// Throws std::invalid_argument if g is disconnected or s is out of range.
Layering build_layering(const Graph& g, VertexId s);

struct Part {
  PartId id = kNoPart;
  int layer = 0;
  std::vector<VertexId> vertices;  // ascending, nonempty
  friend bool operator==(const Part&, const Part&) = default;
};

// Tree over parts. Part ids follow (layer, min vertex id) order, so the
// root {s} is always part 0. cap() is the deepest layer represented; a tree
// built from the whole graph and one built from a prefix and truncated at
// the same cap compare equal.
class LayeringTree {
 public:
  std::size_t num_parts() const { return parts_.size(); }
  const Part& part(PartId p) const { return parts_.at(static_cast<std::size_t>(p)); }
  const std::vector<Part>& parts() const { return parts_; }
  PartId parent(PartId p) const { return parent_.at(static_cast<std::size_t>(p)); }
  const std::vector<PartId>& children(PartId p) const {
    return children_.at(static_cast<std::size_t>(p));
  }
  // kNoPart for vertices deeper than cap().
  PartId part_of(VertexId v) const { return vertex_to_part_.at(v); }
  int cap() const { return cap_; }

  std::vector<PartId> parts_at_layer(int layer) const;
  // (parent, child) pairs.
  std::vector<std::pair<PartId, PartId>> tree_edges() const;
  // Parent plus children of p.
  std::vector<PartId> tree_neighbors(PartId p) const;

  LayeringTree truncated(int cap) const;

  // Indented text, one part per line: "<id> L<layer>: v v v".
  std::string dump() const;

  friend bool operator==(const LayeringTree&, const LayeringTree&) = default;

 private:
  friend LayeringTree build_tree_from_sweep(const Graph&, const Layering&, int, int);
  std::vector<Part> parts_;
  std::vector<PartId> parent_;
  std::vector<std::vector<PartId>> children_;
  std::vector<PartId> vertex_to_part_;
  int cap_ = -1;
};

// Parts at layers 0..cap, computed from the edges of g among layers
// 0..top_layer only. Exposed for tests; prefer the two wrappers below.
LayeringTree build_tree_from_sweep(const Graph& g, const Layering& lay,
                                   int top_layer, int cap);

// Ground-truth layering tree of the whole graph.
LayeringTree build_layering_tree(const Graph& g, const Layering& lay);

// Partial tree T_k (layers 0..k inclusive) from the known prefix G[L_<=i-1].
// Needs k <= i - ell - 2 so that every part at layer <= k is already
// connected inside layers k..i-1. Uses no oracle queries.
LayeringTree extend_partial_tree(const Graph& prefix, const Layering& lay,
                                 int i, int k, int ell);

// Max over parts of the largest pairwise distance in g between members.
int tree_length(const Graph& g, const LayeringTree& lt);

// Centroid of the subtree of lt induced by `subset` (indexed by part id).
// Ties go to the smallest part id. Throws std::invalid_argument if the
// subset is empty or disconnected.
PartId centroid(const LayeringTree& lt, const std::vector<bool>& subset);

// Stamp-based scratch space for repeated subtree queries on one tree, so a
// query costs O(subtree size) rather than O(num_parts).
class SubtreeScratch {
 public:
  explicit SubtreeScratch(std::size_t num_parts);

 private:
  friend PartId centroid(const LayeringTree&, std::span<const PartId>, SubtreeScratch&);
  friend std::vector<PartId> component_without(const LayeringTree&,
                                               std::span<const PartId>, PartId,
                                               PartId, SubtreeScratch&);
  std::uint32_t next_stamp();
  std::vector<std::uint32_t> member_;
  std::vector<std::uint32_t> seen_;
  std::vector<PartId> dfs_parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> heaviest_;
  std::uint32_t stamp_ = 0;
};

// Same contract as above, over an explicit member list.
PartId centroid(const LayeringTree& lt, std::span<const PartId> members,
                SubtreeScratch& scratch);

// Members of the component of (members minus `removed`) that contains
// `start`, ascending.
std::vector<PartId> component_without(const LayeringTree& lt,
                                      std::span<const PartId> members,
                                      PartId removed, PartId start,
                                      SubtreeScratch& scratch);

// comp(P) restricted to layers cap..i-1 of the prefix, ascending. P must sit at
// layer lt.cap().
std::vector<VertexId> comp_vertices(const LayeringTree& lt, PartId p,
                                    const Graph& prefix, const Layering& lay,
                                    int i);

// The layer-cap part connected to u inside prefix layers cap..i-1.
// depth(u) must lie in [cap, i-1].
PartId anc_by_connectivity(VertexId u, const LayeringTree& lt,
                           const Graph& prefix, const Layering& lay, int i);

// anc_by_connectivity for every vertex of layers cap..i-1 in one sweep;
// kNoPart elsewhere.
std::vector<PartId> ancestors_by_connectivity(const LayeringTree& lt,
                                              const Graph& prefix,
                                              const Layering& lay, int i);

}  // namespace sprecon

#endif  // SPRECON_LAYERING_HPP
