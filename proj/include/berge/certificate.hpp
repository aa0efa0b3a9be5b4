#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

/// v_1 e_1 v_2 ... e_k v_{k+1}. Edges are referenced by id so the same
/// certificate can be checked against any hypergraph sharing the ids.
struct BergePath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_ids;

  std::size_t length() const { return edge_ids.size(); }
  VertexId start() const { return vertices.front(); }

  friend bool operator==(const BergePath&, const BergePath&) = default;
};

/// v_1 e_1 ... v_k e_k, with e_k closing back to v_1.
struct BergeCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_ids;

  std::size_t length() const { return edge_ids.size(); }

  friend bool operator==(const BergeCycle&, const BergeCycle&) = default;
};

enum class Clause {
  kNone,
  kLengthMismatch,    // |vertices| inconsistent with |edge_ids|
  kTooShort,          // cycle with fewer than two edges
  kUnknownVertex,
  kDuplicateVertex,
  kUnknownEdge,
  kDuplicateEdge,
  kMissingIncidence,  // consecutive pair not inside its edge
};

std::string_view clause_name(Clause c);

/// Result of a certificate check. On failure, `index` is the position in
/// the vertex or edge sequence where the first violated clause was found.
struct Verdict {
  Clause clause = Clause::kNone;
  std::size_t index = 0;

  bool ok() const { return clause == Clause::kNone; }
  explicit operator bool() const { return ok(); }
  std::string message() const;

  static Verdict pass() { return {}; }
  static Verdict fail(Clause c, std::size_t i) { return {c, i}; }
};

namespace detail {

// Shared by every hypergraph flavour. `has_vertex(v)` answers membership,
// `edge_set(id)` returns the edge's sorted vertex set or nullptr.
template <class HasVertex, class EdgeSet>
Verdict check_sequence(std::span<const VertexId> vertices, std::span<const EdgeId> edges,
                       bool closed, HasVertex&& has_vertex, EdgeSet&& edge_set) {
  if (closed) {
    if (vertices.size() != edges.size()) return Verdict::fail(Clause::kLengthMismatch, 0);
    if (edges.size() < 2) return Verdict::fail(Clause::kTooShort, 0);
  } else if (vertices.size() != edges.size() + 1) {
    return Verdict::fail(Clause::kLengthMismatch, 0);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!has_vertex(vertices[i])) return Verdict::fail(Clause::kUnknownVertex, i);
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[j] == vertices[i]) return Verdict::fail(Clause::kDuplicateVertex, i);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexSet* set = edge_set(edges[i]);
    if (set == nullptr) return Verdict::fail(Clause::kUnknownEdge, i);
    for (std::size_t j = 0; j < i; ++j) {
      if (edges[j] == edges[i]) return Verdict::fail(Clause::kDuplicateEdge, i);
    }
    VertexId a = vertices[i];
    VertexId b = vertices[(i + 1) % vertices.size()];
    if (!set_contains(*set, a) || !set_contains(*set, b)) {
      return Verdict::fail(Clause::kMissingIncidence, i);
    }
  }
  return Verdict::pass();
}

}  // namespace detail

Verdict verify_path(const Hypergraph& h, const BergePath& p);
Verdict verify_cycle(const Hypergraph& h, const BergeCycle& c);

/// Union of the certificate's edges in `h`. Throws PreconditionError if the
/// certificate does not verify.
VertexSet spanned(const Hypergraph& h, const BergePath& p);
VertexSet spanned(const Hypergraph& h, const BergeCycle& c);

/// First k edges of p (and first k+1 vertices).
BergePath trim_path(const BergePath& p, std::size_t k);

/// Rotates c so that v comes first and drops the closing edge.
BergePath cycle_to_rooted_path(const BergeCycle& c, VertexId v);

/// Rotates c so that position `first` becomes position 0.
BergeCycle rotate_cycle(const BergeCycle& c, std::size_t first);

/// Same cycle traversed in the opposite direction, still starting at v_1.
BergeCycle reverse_cycle(const BergeCycle& c);

/// Concatenates two paths where `head` ends at the start of `tail`.
BergePath concat_paths(const BergePath& head, const BergePath& tail);

}  // namespace berge
