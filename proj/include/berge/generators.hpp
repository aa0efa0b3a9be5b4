#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "berge/hypergraph.hpp"

namespace berge::gen {

/// Seeded stream: std::mt19937_64 (its output sequence is fixed by the C++
/// standard) with bounded draws by rejection, so streams match across
/// platforms and standard libraries. Each `below` call consumes one or more
/// raw 64-bit outputs; nothing else advances the state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; derives independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

enum class Family { kCompleteBlocks, kGluedBlocks, kRandomConnected, kRandomSurplus };

Family family_from_string(const std::string& name);
std::string to_string(Family f);

/// Disjoint complete r-uniform hypergraphs on block_size vertices each.
Hypergraph complete_blocks(std::size_t r, std::size_t block_size, std::size_t blocks);

/// Complete blocks chained so consecutive blocks share one vertex.
Hypergraph glued_blocks(std::size_t r, std::size_t block_size, std::size_t blocks);

/// Simple connected r-uniform hypergraph with exactly m edges: a random
/// spanning chain of edges, each adding up to r-1 new vertices, then
/// uniform rejection sampling of the remaining edges.
Hypergraph random_connected(std::size_t r, std::size_t n, std::size_t m, std::uint64_t seed);

/// Simple r-uniform hypergraph with exactly m uniformly sampled edges and
/// no connectivity requirement.
Hypergraph random_surplus(std::size_t r, std::size_t n, std::size_t m, std::uint64_t seed);

/// All r-subsets of [0, n) in lexicographic order.
std::vector<VertexSet> all_subsets(std::size_t n, std::size_t r);

}  // namespace berge::gen
