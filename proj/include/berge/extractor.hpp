#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "berge/certificate.hpp"
#include "berge/hypergraph.hpp"
#include "berge/trace.hpp"
#include "berge/working_hypergraph.hpp"

namespace berge {

using Outcome = std::variant<BergePath, BergeCycle>;

/// A Berge path of length r+1 starting at the requested vertex, or a Berge
/// cycle of length r+1 through it, plus the branch record that produced it.
struct ExtractionResult {
  Outcome outcome;
  ProofTrace trace;

  bool is_path() const { return std::holds_alternative<BergePath>(outcome); }
  const BergePath& path() const { return std::get<BergePath>(outcome); }
  const BergeCycle& cycle() const { return std::get<BergeCycle>(outcome); }
  std::size_t length() const;

  friend bool operator==(const ExtractionResult&, const ExtractionResult&) = default;
};

struct ExtractOptions {
  /// Called with every intermediate working hypergraph the algorithm builds.
  std::function<void(const WorkingHypergraph&)> observer;
};

/// Requires a simple, connected, r-uniform (r >= 2) hypergraph with at least
/// as many edges as vertices. Throws PreconditionError naming the violated
/// clause ("not uniform", "vertex out of range", "not connected", "e < n")
/// and ProofDefect if the construction ever fails to close.
ExtractionResult extract(const Hypergraph& h, VertexId v, const ExtractOptions& options = {});

/// Same, over a connected piece of a larger root hypergraph.
ExtractionResult extract(const WorkingHypergraph& h, VertexId v,
                         const ExtractOptions& options = {});

/// Re-runs the extraction taking every free choice from `trace` instead of
/// the least-id policy; each recorded choice is checked for legality and
/// every recorded branch must match the branch the structure forces.
/// Throws ReplayMismatch on divergence.
ExtractionResult replay(const Hypergraph& h, VertexId v, const ProofTrace& trace);

struct Theorem2Result {
  BergePath path;
  ProofTrace trace;
};

/// A Berge path of length exactly r+1 in an r-uniform hypergraph with more
/// edges than vertices. Connectivity is not required. Throws
/// PreconditionError("e <= n") otherwise.
Theorem2Result extract_theorem2(const Hypergraph& h, const ExtractOptions& options = {});

// Individual proof steps, exposed for testing. All of them take the
// hypergraph at the current level; certificates use root edge ids.

ExtractionResult base_case_r2(const Hypergraph& g, VertexId v);
ExtractionResult base_case_r2(const WorkingHypergraph& g, VertexId v);

ExtractionResult cut_vertex_branch(const Hypergraph& h, VertexId v, VertexId v0);

/// One run of the edge-shrinking loop over a connected component whose
/// edges have size r or r-1.
struct ShrinkOutcome {
  enum class Kind { kShrunk, kAllSubsets, kFragmented };
  Kind kind = Kind::kShrunk;
  /// kShrunk: the (r-1)-uniform result. kFragmented: the chosen piece.
  std::optional<WorkingHypergraph> hypergraph;
  /// kAllSubsets / kFragmented: the r-edge that could not be shrunk.
  std::optional<EdgeId> edge;
  /// kAllSubsets: length-r cycle on the edge's vertices.
  std::optional<BergeCycle> cycle;
  /// kFragmented: every piece of the component after deleting the edge.
  std::vector<WorkingHypergraph> pieces;
  ProofTrace trace;
};

ShrinkOutcome shrink_component(const WorkingHypergraph& c, std::size_t r);

ExtractionResult lemma1_extend(const WorkingHypergraph& h, VertexId v, EdgeId e, const BergeCycle& c);
ExtractionResult lemma1_extend(const Hypergraph& h, VertexId v, EdgeId e, const BergeCycle& c);

ExtractionResult remote_cycle_extend(const WorkingHypergraph& h, VertexId v, EdgeId e,
                                     const BergeCycle& c);
ExtractionResult remote_cycle_extend(const Hypergraph& h, VertexId v, EdgeId e, const BergeCycle& c);

/// Rewrites working edge ids to root ids and re-checks the certificate in
/// the root. Throws ProofDefect if it no longer verifies.
ExtractionResult lift(const ExtractionResult& result, const WorkingHypergraph& provenance);

/// Combines a level r-1 outcome rooted at z (z in e, v removed) into a
/// level r outcome for v: prepend (v, e) to a path, or hand a cycle to
/// lemma1_extend.
ExtractionResult finish_after_recursion(const WorkingHypergraph& h, VertexId v, EdgeId e, VertexId z,
                                        const ExtractionResult& sub);

}  // namespace berge
