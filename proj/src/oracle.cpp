#include "sprecon/oracle.hpp"

#include <stdexcept>

namespace sprecon {

std::string_view phase_name(QueryPhase p) {
  switch (p) {
    case QueryPhase::RootBfs: return "root_bfs";
    case QueryPhase::Bootstrap: return "bootstrap";
    case QueryPhase::AncestorSearch: return "ancestor_search";
    case QueryPhase::NeighborSearch: return "neighbor_search";
    case QueryPhase::Baseline: return "baseline";
  }
  return "unknown";
}

std::string query_log_csv(const QueryLedger& ledger) {
  std::string out;
  for (const auto& r : ledger.log) {
    out += std::to_string(r.u) + "," + std::to_string(r.v) + "," +
           std::to_string(r.distance) + ",";
    out += phase_name(r.phase);
    out += '\n';
  }
  return out;
}

DistanceOracle::DistanceOracle(Graph hidden, bool log_queries,
                               std::size_t row_capacity)
    : hidden_(std::move(hidden)),
      log_queries_(log_queries),
      row_capacity_(row_capacity == 0 ? 1 : row_capacity) {
  if (!is_connected(hidden_)) {
    throw std::invalid_argument("hidden graph must be connected");
  }
}

const std::vector<Distance>* DistanceOracle::cached_row(VertexId s) {
  auto it = row_index_.find(s);
  if (it == row_index_.end()) return nullptr;
  rows_.splice(rows_.begin(), rows_, it->second);
  return &it->second->second;
}

const std::vector<Distance>& DistanceOracle::row(VertexId s) {
  if (const auto* r = cached_row(s)) return *r;
  if (rows_.size() >= row_capacity_) {
    row_index_.erase(rows_.back().first);
    rows_.pop_back();
  }
  rows_.emplace_front(s, bfs_distances(hidden_, s));
  row_index_[s] = rows_.begin();
  return rows_.front().second;
}

Distance DistanceOracle::query(VertexId u, VertexId v, QueryPhase phase) {
  const std::size_t n = hidden_.num_vertices();
  if (u >= n || v >= n) {
    throw std::invalid_argument("query vertex out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  }
  ++ledger_.raw_calls;
  if (u == v) return 0;
  VertexId a = std::min(u, v), b = std::max(u, v);
  std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  if (auto it = answers_.find(key); it != answers_.end()) return it->second;

  Distance d;
  if (const auto* r = cached_row(v)) {
    d = (*r)[u];
  } else {
    d = row(u)[v];
  }
  answers_.emplace(key, d);
  ++ledger_.distinct_queries;
  ++ledger_.per_phase[static_cast<std::size_t>(phase)];
  if (log_queries_) ledger_.log.push_back({a, b, d, phase});
  return d;
}

std::vector<std::pair<VertexId, Distance>> DistanceOracle::batch_distances_from(
    VertexId s, std::span<const VertexId> targets, QueryPhase phase) {
  std::vector<std::pair<VertexId, Distance>> out;
  out.reserve(targets.size());
  for (VertexId t : targets) out.emplace_back(t, query(s, t, phase));
  return out;
}

bool DistanceOracle::assert_budget(QueryPhase phase,
                                   std::optional<std::uint64_t> limit) const {
  return !limit || ledger_.phase(phase) <= *limit;
}

}  // namespace sprecon
