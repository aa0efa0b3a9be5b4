#include "berge/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "berge/errors.hpp"
#include "berge/oracle.hpp"

namespace berge::gen {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Family family_from_string(const std::string& name) {
  if (name == "complete_blocks") return Family::kCompleteBlocks;
  if (name == "glued_blocks") return Family::kGluedBlocks;
  if (name == "random_connected") return Family::kRandomConnected;
  if (name == "random_surplus") return Family::kRandomSurplus;
  throw PreconditionError("unknown family", name);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kCompleteBlocks: return "complete_blocks";
    case Family::kGluedBlocks: return "glued_blocks";
    case Family::kRandomConnected: return "random_connected";
    case Family::kRandomSurplus: return "random_surplus";
  }
  return "?";
}

std::vector<VertexSet> all_subsets(std::size_t n, std::size_t r) {
  std::vector<VertexSet> out;
  if (r > n) return out;
  VertexSet cur(r);
  std::iota(cur.begin(), cur.end(), VertexId{0});
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

void check_blocks(std::size_t r, std::size_t block_size, std::size_t blocks) {
  if (r < 2) throw PreconditionError("r < 2");
  if (block_size < r) throw PreconditionError("block_size < r");
  if (blocks < 1) throw PreconditionError("blocks < 1");
}

Hypergraph canonical(std::size_t n, std::vector<VertexSet> edges) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  return Hypergraph::create(n, std::move(edges));
}

// Floyd's algorithm for a uniform r-subset of [0, n).
VertexSet random_subset(Rng& rng, std::size_t n, std::size_t r) {
  std::set<VertexId> chosen;
  for (std::size_t j = n - r; j < n; ++j) {
    auto t = static_cast<VertexId>(rng.below(j + 1));
    if (!chosen.insert(t).second) chosen.insert(static_cast<VertexId>(j));
  }
  return VertexSet(chosen.begin(), chosen.end());
}

void fill_by_rejection(Rng& rng, std::size_t n, std::size_t r, std::size_t m,
                       std::set<VertexSet>& edges) {
  const std::uint64_t max_attempts = 1000ULL * m + 100000ULL;
  std::uint64_t attempts = 0;
  while (edges.size() < m) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("rejection sampling stalled after " + std::to_string(attempts) +
                               " draws");
    }
    edges.insert(random_subset(rng, n, r));
  }
}

void check_edge_count(std::size_t r, std::size_t n, std::size_t m, std::size_t least) {
  if (r < 2) throw PreconditionError("r < 2");
  if (n < r) throw PreconditionError("n < r");
  if (m < least) throw PreconditionError("m too small", std::to_string(m));
  if (m > oracle::binomial(n, r)) throw PreconditionError("m exceeds C(n, r)", std::to_string(m));
}

}  // namespace

Hypergraph complete_blocks(std::size_t r, std::size_t block_size, std::size_t blocks) {
  check_blocks(r, block_size, blocks);
  std::vector<VertexSet> edges;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (auto s : all_subsets(block_size, r)) {
      for (auto& x : s) x += static_cast<VertexId>(b * block_size);
      edges.push_back(std::move(s));
    }
  }
  return canonical(block_size * blocks, std::move(edges));
}

Hypergraph glued_blocks(std::size_t r, std::size_t block_size, std::size_t blocks) {
  check_blocks(r, block_size, blocks);
  if (block_size < 2) throw PreconditionError("block_size < 2");
  std::vector<VertexSet> edges;
  const std::size_t stride = block_size - 1;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (auto s : all_subsets(block_size, r)) {
      for (auto& x : s) x += static_cast<VertexId>(b * stride);
      edges.push_back(std::move(s));
    }
  }
  return canonical(blocks * block_size - (blocks - 1), std::move(edges));
}

Hypergraph random_connected(std::size_t r, std::size_t n, std::size_t m, std::uint64_t seed) {
  if (r < 2) throw PreconditionError("r < 2");
  check_edge_count(r, n, m, (n - 1 + (r - 2)) / (r - 1));
  Rng rng(seed);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::set<VertexSet> edges;
  std::vector<VertexId> covered{order[0]};
  std::size_t next = 1;
  while (next < n) {
    const std::size_t fresh = std::min(r - 1, n - next);
    VertexSet e(order.begin() + static_cast<std::ptrdiff_t>(next),
                order.begin() + static_cast<std::ptrdiff_t>(next + fresh));
    // r - fresh distinct old vertices by partial shuffle of the covered set
    std::vector<VertexId> pool = covered;
    for (std::size_t i = 0; i < r - fresh; ++i) {
      std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
      e.push_back(pool[i]);
    }
    std::sort(e.begin(), e.end());
    edges.insert(std::move(e));
    covered.insert(covered.end(), order.begin() + static_cast<std::ptrdiff_t>(next),
                   order.begin() + static_cast<std::ptrdiff_t>(next + fresh));
    next += fresh;
  }
  fill_by_rejection(rng, n, r, m, edges);
  return canonical(n, std::vector<VertexSet>(edges.begin(), edges.end()));
}

Hypergraph random_surplus(std::size_t r, std::size_t n, std::size_t m, std::uint64_t seed) {
  check_edge_count(r, n, m, 0);
  Rng rng(seed);
  std::set<VertexSet> edges;
  fill_by_rejection(rng, n, r, m, edges);
  return canonical(n, std::vector<VertexSet>(edges.begin(), edges.end()));
}

}  // namespace berge::gen
