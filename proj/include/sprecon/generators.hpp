#ifndef SPRECON_GENERATORS_HPP
#define SPRECON_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sprecon/graph.hpp"

namespace sprecon {

// SplitMix64 (Steele, Lea, Flood 2014): state advances by the golden-ratio
// increment and each output is a fixed mix of the state, so the stream is a
// pure function of (seed, index) on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

enum class Family {
  RandomTree,
  KTree,
  RingOfCliques,
  Cycle,
  Caterpillar,
  BoundedDegreeConnected,
};

std::string_view family_name(Family f);
// Accepts the names produced by family_name (snake_case) and the CamelCase
// enumerator spellings. Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::RandomTree;
  std::size_t n = 0;
  std::size_t max_degree = 3;
  std::size_t k = 2;            // KTree
  std::size_t clique_size = 3;  // RingOfCliques
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  // 1 for families that are chordal by construction (trees and k-trees);
  // absent otherwise, in which case callers measure the layering-tree length.
  std::optional<int> treelength_bound;
};

// Throws std::invalid_argument for infeasible specs.
GeneratedGraph generate(const FamilySpec& spec);

// Empty when g satisfies everything the family promises.
std::vector<std::string> verify_family_invariants(const Graph& g,
                                                  const FamilySpec& spec);

// Maximum cardinality search order followed by a perfect elimination check.
bool is_chordal(const Graph& g);

}  // namespace sprecon

#endif  // SPRECON_GENERATORS_HPP
