#ifndef SPRECON_ORACLE_HPP
#define SPRECON_ORACLE_HPP

#include <array>
#include <cstdint>
#include <list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sprecon/graph.hpp"

namespace sprecon {

enum class QueryPhase : std::uint8_t {
  RootBfs,
  Bootstrap,
  AncestorSearch,
  NeighborSearch,
  Baseline,
};
inline constexpr std::size_t kNumPhases = 5;

std::string_view phase_name(QueryPhase p);

struct QueryRecord {
  VertexId u;
  VertexId v;
  Distance distance;
  QueryPhase phase;
  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

// Distinct queries are unordered pairs asked at least once; raw_calls counts
// every call, cached or not. Each distinct query is charged to the phase of
// its first call.
struct QueryLedger {
  std::uint64_t distinct_queries = 0;
  std::uint64_t raw_calls = 0;
  std::array<std::uint64_t, kNumPhases> per_phase{};
  std::vector<QueryRecord> log;  // filled only when logging is enabled

  std::uint64_t phase(QueryPhase p) const {
    return per_phase[static_cast<std::size_t>(p)];
  }
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

// CSV lines "u,v,distance,phase", one per distinct query in query order.
std::string query_log_csv(const QueryLedger& ledger);

// Answers shortest-path queries on a hidden connected graph. Hidden
// distances are computed by BFS per source and kept in a small LRU of
// source rows, so memory stays O(capacity * n) instead of O(n^2).
class DistanceOracle {
 public:
  static constexpr std::size_t kDefaultRowCapacity = 64;

  // Throws std::invalid_argument if hidden is disconnected.
  explicit DistanceOracle(Graph hidden, bool log_queries = false,
                          std::size_t row_capacity = kDefaultRowCapacity);

  std::size_t num_vertices() const { return hidden_.num_vertices(); }

  Distance query(VertexId u, VertexId v, QueryPhase phase);

  // Same accounting as calling query() once per target, in order.
  std::vector<std::pair<VertexId, Distance>> batch_distances_from(
      VertexId s, std::span<const VertexId> targets, QueryPhase phase);

  bool assert_budget(QueryPhase phase, std::optional<std::uint64_t> limit) const;

  const QueryLedger& ledger() const { return ledger_; }

  // Harness access only; the reconstruction algorithm never calls this.
  const Graph& hidden_graph_for_verification() const { return hidden_; }

 private:
  const std::vector<Distance>& row(VertexId s);
  const std::vector<Distance>* cached_row(VertexId s);

  Graph hidden_;
  bool log_queries_;
  std::size_t row_capacity_;
  std::unordered_map<std::uint64_t, Distance> answers_;
  std::list<std::pair<VertexId, std::vector<Distance>>> rows_;  // MRU first
  std::unordered_map<VertexId, decltype(rows_)::iterator> row_index_;
  QueryLedger ledger_;
};

}  // namespace sprecon

#endif  // SPRECON_ORACLE_HPP
