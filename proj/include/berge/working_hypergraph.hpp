#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "berge/certificate.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// A root edge as it currently looks after vertex deletions and shrinking.
/// `current` is always a subset of the root edge `origin`.
struct WorkingEdge {
  EdgeId id = 0;
  VertexSet current;
  EdgeId origin = 0;

  std::size_t size() const { return current.size(); }
  friend bool operator==(const WorkingEdge&, const WorkingEdge&) = default;
};

/// Mutable, provenance-tracked view over a root Hypergraph. Vertex and edge
/// ids are those of the root; edges are kept sorted by id. The root must
/// outlive every WorkingHypergraph derived from it.
class WorkingHypergraph {
 public:
  WorkingHypergraph(const Hypergraph& root, VertexSet vertices, std::vector<WorkingEdge> edges,
                    std::optional<VertexId> deleted = std::nullopt);

  static WorkingHypergraph from_root(const Hypergraph& root);

  const Hypergraph& root() const { return *root_; }
  const VertexSet& vertices() const { return vertices_; }
  const std::vector<WorkingEdge>& edges() const { return edges_; }
  std::optional<VertexId> deleted_vertex() const { return deleted_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool has_vertex(VertexId v) const { return set_contains(vertices_, v); }

  /// nullptr when the id is not a working edge here.
  const WorkingEdge* find_edge(EdgeId id) const;
  WorkingEdge* find_edge(EdgeId id);

  /// Common edge size, if all edges agree and there is at least one edge.
  std::optional<std::size_t> uniformity() const;

  /// Throws ProofDefect when a structural invariant is broken: current sets
  /// inside the vertex set, current within origin, pairwise distinct
  /// current sets and origins, every edge of size >= 2.
  void check_invariants() const;

  void set_deleted_vertex(std::optional<VertexId> v) { deleted_ = v; }

 private:
  const Hypergraph* root_;
  VertexSet vertices_;
  std::vector<WorkingEdge> edges_;
  std::optional<VertexId> deleted_;
};

/// Dense local numbering of a working hypergraph's vertices and edges,
/// with incidence lists. Vertex i is vertices()[i]; edge j is edges()[j].
class Incidence {
 public:
  explicit Incidence(const WorkingHypergraph& h);

  std::size_t vertex_count() const { return vertex_edges_.size(); }
  std::size_t edge_count() const { return edge_vertices_.size(); }
  std::size_t local(VertexId v) const;
  const std::vector<std::size_t>& edges_of(std::size_t local_vertex) const {
    return vertex_edges_[local_vertex];
  }
  const std::vector<std::size_t>& vertices_of(std::size_t local_edge) const {
    return edge_vertices_[local_edge];
  }

 private:
  const VertexSet* vertices_;
  std::vector<std::vector<std::size_t>> vertex_edges_;
  std::vector<std::vector<std::size_t>> edge_vertices_;
};

Verdict verify_path(const WorkingHypergraph& h, const BergePath& p);
Verdict verify_cycle(const WorkingHypergraph& h, const BergeCycle& c);
VertexSet spanned(const WorkingHypergraph& h, const BergeCycle& c);

/// Maximal connected pieces, ordered by least vertex id. An isolated vertex
/// is its own piece with no edges.
std::vector<WorkingHypergraph> components(const WorkingHypergraph& h);

bool is_connected(const WorkingHypergraph& h);

/// Drops `removed_edge` and removes v from the vertex set and every other
/// edge. Throws PreconditionError if v or the edge is absent or the edge
/// does not contain v.
WorkingHypergraph delete_vertex(const WorkingHypergraph& h, VertexId v, EdgeId removed_edge);

/// Vertices whose removal (from the vertex set and from every edge)
/// disconnects the rest. Requires a connected input with edges of size >= 2.
VertexSet cut_vertices(const WorkingHypergraph& h);

/// Pieces left after deleting v0, each with v0 put back into its edges
/// and vertex set. Ordered by least vertex id other than v0.
std::vector<WorkingHypergraph> split_at_cut_vertex(const WorkingHypergraph& h, VertexId v0);

/// Shortest Berge path from a to b by breadth-first search, ascending ids.
BergePath connecting_berge_path(const WorkingHypergraph& h, VertexId a, VertexId b);

/// For each edge (by position), the vertices whose incidence with it is a
/// bridge of the vertex-edge incidence graph, i.e. removing that vertex from
/// that edge alone disconnects the hypergraph.
std::vector<VertexSet> incidence_bridges(const WorkingHypergraph& h);

/// Restricts h to the given edges (by id) and the vertices they touch.
WorkingHypergraph sub_hypergraph(const WorkingHypergraph& h, const std::vector<EdgeId>& edge_ids);

}  // namespace berge
