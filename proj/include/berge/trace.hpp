#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

// One record per decision taken by the extractor. Components are named by
// their least vertex id (for cut-vertex pieces: least id other than the cut
// vertex), which is stable across runs.

struct BaseCaseR2 {
  VertexId root;
  friend bool operator==(const BaseCaseR2&, const BaseCaseR2&) = default;
};

struct CutVertex {
  VertexId cut;
  VertexId component;
  friend bool operator==(const CutVertex&, const CutVertex&) = default;
};

/// The removed edge e containing v, and the component of H - v - e that
/// goes on to be shrunk.
struct VertexDeletion {
  VertexId vertex;
  EdgeId edge;
  VertexId component;
  friend bool operator==(const VertexDeletion&, const VertexDeletion&) = default;
};

struct Shrink {
  EdgeId edge;
  VertexId removed;
  friend bool operator==(const Shrink&, const Shrink&) = default;
};

struct AllSubsetsCycle {
  EdgeId edge;
  friend bool operator==(const AllSubsetsCycle&, const AllSubsetsCycle&) = default;
};

struct DisconnectingEdgeDeleted {
  EdgeId edge;
  VertexId component;
  friend bool operator==(const DisconnectingEdgeDeleted&, const DisconnectingEdgeDeleted&) = default;
};

/// which: 1 = outside spanned vertex of e, 2 = outside vertex on a
/// neighbouring cycle edge, 3 = closed into a longer cycle.
struct Lemma1 {
  int which;
  friend bool operator==(const Lemma1&, const Lemma1&) = default;
};

struct RemoteCycleExtension {
  VertexId landing;
  friend bool operator==(const RemoteCycleExtension&, const RemoteCycleExtension&) = default;
};

struct Recurse {
  std::size_t r;
  std::size_t n;
  std::size_t m;
  VertexId root;
  friend bool operator==(const Recurse&, const Recurse&) = default;
};

/// Cycle turned into a path starting at a spanned vertex off the cycle.
struct PromoteViaSpan {
  VertexId start;
  friend bool operator==(const PromoteViaSpan&, const PromoteViaSpan&) = default;
};

/// Complete cycle turned into a path through an edge leaving it.
struct PromoteViaOutsideEdge {
  EdgeId edge;
  friend bool operator==(const PromoteViaOutsideEdge&, const PromoteViaOutsideEdge&) = default;
};

using TraceRecord =
    std::variant<BaseCaseR2, CutVertex, VertexDeletion, Shrink, AllSubsetsCycle,
                 DisconnectingEdgeDeleted, Lemma1, RemoteCycleExtension, Recurse, PromoteViaSpan,
                 PromoteViaOutsideEdge>;

using ProofTrace = std::vector<TraceRecord>;

/// "BaseCaseR2", "CutVertex", ... ; Lemma1 records report as "Lemma1.<case>".
std::string_view record_kind(const TraceRecord& r);

}  // namespace berge
