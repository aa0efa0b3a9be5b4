#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace berge {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sorted ascending, duplicate-free.
using VertexSet = std::vector<VertexId>;

bool set_contains(std::span<const VertexId> sorted, VertexId v);

/// Immutable simple hypergraph over vertices [0, n). Edge ids are the
/// positions in the edge list handed to `create`.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Sorts every edge and validates: no empty edge, no repeated vertex
  /// within an edge, every vertex < n, no two equal edges.
  /// Throws InvalidHypergraph.
  static Hypergraph create(std::size_t n, std::vector<VertexSet> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Common edge size when every edge has the same size r >= 2.
  std::optional<std::size_t> uniformity() const { return r_; }

  std::span<const VertexId> edge(EdgeId id) const { return edges_.at(id); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_.at(v); }

  bool contains(EdgeId id, VertexId v) const { return set_contains(edge(id), v); }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::optional<std::size_t> r_;
};

}  // namespace berge
