#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "berge/certificate.hpp"
#include "berge/extractor.hpp"
#include "berge/hypergraph.hpp"
#include "berge/trace.hpp"

namespace berge::io {

// Hypergraph text format:
//
//   # comment lines start with '#'
//   r n m
//   v v ... v        (m lines, ascending 0-based ids, exactly r per line)
//
// Throws ParseError on malformed input and InvalidHypergraph on structural
// violations (duplicate edges, out-of-range ids).
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_string(const std::string& text);
Hypergraph read_hypergraph(const std::filesystem::path& path);

/// Edges in id order. Requires a uniform hypergraph, or an edgeless one
/// (written with r = 0).
std::string serialize_hypergraph(const Hypergraph& h);

struct Certificate {
  enum class Kind { kPath, kCycle };
  Kind kind = Kind::kPath;
  std::size_t r = 0;
  std::size_t length = 0;
  std::optional<VertexId> start_vertex;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_ids;
  /// Edge vertex sets as written; informational only, never trusted.
  std::vector<VertexSet> edges;
  ProofTrace trace;
};

Certificate make_certificate(const Hypergraph& h, const ExtractionResult& result);
Certificate make_certificate(const Hypergraph& h, const Theorem2Result& result);

/// Pretty-printed JSON with a trailing newline; byte-stable for equal input.
std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

std::string trace_to_json(const ProofTrace& trace);
ProofTrace trace_from_json(const std::string& text);

/// Checks the certificate against h: the Berge definition via the
/// verifier, plus consistency of the claimed length and start vertex.
/// Returns std::nullopt on acceptance, otherwise the violated clause.
std::optional<std::string> check_certificate(const Hypergraph& h, const Certificate& c);

/// Writes to a sibling temporary file and renames it into place.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace berge::io
