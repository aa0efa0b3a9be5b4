#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "berge/certificate.hpp"
#include "berge/hypergraph.hpp"

namespace berge::oracle {

/// Exhaustive backtracking over alternating vertex/edge sequences. Budgets
/// count search-tree nodes; running out throws BudgetExceeded.

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct VertexProfile {
  std::size_t longest_from = 0;
  bool cycle_through = false;
  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

struct OracleReport {
  std::size_t longest_path_length = 0;
  std::optional<BergePath> witness;
  /// Filled by `profile`; empty after `longest_berge_path`.
  std::map<VertexId, VertexProfile> per_vertex;
  std::uint64_t nodes = 0;
};

OracleReport longest_berge_path(const Hypergraph& h, std::uint64_t budget = kDefaultBudget);

/// Longest path length from every vertex, plus whether a Berge cycle of
/// length `cycle_length` passes through it.
OracleReport profile(const Hypergraph& h, std::size_t cycle_length,
                     std::uint64_t budget = kDefaultBudget);

std::optional<BergePath> find_path_from(const Hypergraph& h, VertexId v, std::size_t k,
                                        std::uint64_t budget = kDefaultBudget);
std::optional<BergeCycle> find_cycle_through(const Hypergraph& h, VertexId v, std::size_t k,
                                             std::uint64_t budget = kDefaultBudget);

inline bool exists_path_from(const Hypergraph& h, VertexId v, std::size_t k,
                             std::uint64_t budget = kDefaultBudget) {
  return find_path_from(h, v, k, budget).has_value();
}
inline bool exists_cycle_through(const Hypergraph& h, VertexId v, std::size_t k,
                                 std::uint64_t budget = kDefaultBudget) {
  return find_cycle_through(h, v, k, budget).has_value();
}

// Extremal edge bounds for r-uniform hypergraphs without a Berge
// path of length k.
enum class BoundRegime { kLongPaths, kShortPaths, kPathLengthRPlusOne, kNone };

/// kLongPaths: k > r+1 > 3, e <= (n/k) C(k,r).
/// kShortPaths: r >= k > 2, e <= n(k-1)/(r+1).
/// kPathLengthRPlusOne: k = r+1 > 2, e <= n.
BoundRegime bound_regime(std::size_t k, std::size_t r);

/// Compares e against the bound scaled to integers; returns the sign of
/// (e - bound): negative strictly below, 0 at equality, positive above.
int compare_to_bound(std::size_t e, std::size_t n, std::size_t k, std::size_t r);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct BoundCheck {
  std::size_t instances = 0;
  std::size_t checked = 0;     // instances with longest path < k in a regime
  std::size_t violations = 0;
  std::size_t equalities = 0;
};

/// For every instance whose longest Berge path is shorter than k, checks the
/// applicable bound.
BoundCheck check_theorem1_bounds(const std::vector<Hypergraph>& family, std::size_t k,
                                 std::size_t r, std::uint64_t budget = kDefaultBudget);

}  // namespace berge::oracle
