#include "berge/certificate.hpp"

#include <algorithm>

#include "berge/errors.hpp"

namespace berge {

std::string_view clause_name(Clause c) {
  switch (c) {
    case Clause::kNone: return "ok";
    case Clause::kLengthMismatch: return "length mismatch";
    case Clause::kTooShort: return "too short";
    case Clause::kUnknownVertex: return "unknown vertex";
    case Clause::kDuplicateVertex: return "duplicate vertex";
    case Clause::kUnknownEdge: return "unknown edge";
    case Clause::kDuplicateEdge: return "duplicate edge";
    case Clause::kMissingIncidence: return "missing incidence";
  }
  return "?";
}

std::string Verdict::message() const {
  if (ok()) return "ok";
  return std::string(clause_name(clause)) + " at index " + std::to_string(index);
}

namespace {

template <class Cert>
Verdict verify_in(const Hypergraph& h, const Cert& c, bool closed) {
  return detail::check_sequence(
      c.vertices, c.edge_ids, closed, [&](VertexId v) { return v < h.num_vertices(); },
      [&](EdgeId id) -> const VertexSet* {
        return id < h.num_edges() ? &h.edges()[id] : nullptr;
      });
}

template <class Cert>
VertexSet union_of(const Hypergraph& h, const Cert& c) {
  VertexSet out;
  for (EdgeId id : c.edge_ids) {
    auto e = h.edge(id);
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Verdict verify_path(const Hypergraph& h, const BergePath& p) { return verify_in(h, p, false); }

Verdict verify_cycle(const Hypergraph& h, const BergeCycle& c) { return verify_in(h, c, true); }

VertexSet spanned(const Hypergraph& h, const BergePath& p) {
  if (auto v = verify_path(h, p); !v) throw PreconditionError("unverified certificate", v.message());
  return union_of(h, p);
}

VertexSet spanned(const Hypergraph& h, const BergeCycle& c) {
  if (auto v = verify_cycle(h, c); !v) throw PreconditionError("unverified certificate", v.message());
  return union_of(h, c);
}

BergePath trim_path(const BergePath& p, std::size_t k) {
  if (k > p.length()) {
    throw PreconditionError("trim longer than path",
                            std::to_string(k) + " > " + std::to_string(p.length()));
  }
  BergePath out;
  out.vertices.assign(p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(k + 1));
  out.edge_ids.assign(p.edge_ids.begin(), p.edge_ids.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

BergeCycle rotate_cycle(const BergeCycle& c, std::size_t first) {
  BergeCycle out = c;
  std::rotate(out.vertices.begin(), out.vertices.begin() + static_cast<std::ptrdiff_t>(first),
              out.vertices.end());
  std::rotate(out.edge_ids.begin(), out.edge_ids.begin() + static_cast<std::ptrdiff_t>(first),
              out.edge_ids.end());
  return out;
}

BergeCycle reverse_cycle(const BergeCycle& c) {
  // v1 e_k v_k e_{k-1} ... v_2 e_1 (back to v1)
  BergeCycle out;
  const std::size_t k = c.vertices.size();
  if (k == 0) return out;
  out.vertices.push_back(c.vertices[0]);
  for (std::size_t i = k - 1; i >= 1; --i) out.vertices.push_back(c.vertices[i]);
  for (std::size_t i = k; i-- > 0;) out.edge_ids.push_back(c.edge_ids[i]);
  return out;
}

BergePath cycle_to_rooted_path(const BergeCycle& c, VertexId v) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
  if (it == c.vertices.end()) {
    throw PreconditionError("vertex not on cycle", std::to_string(v));
  }
  BergeCycle rotated = rotate_cycle(c, static_cast<std::size_t>(it - c.vertices.begin()));
  BergePath p;
  p.vertices = std::move(rotated.vertices);
  p.edge_ids = std::move(rotated.edge_ids);
  p.edge_ids.pop_back();
  return p;
}

BergePath concat_paths(const BergePath& head, const BergePath& tail) {
  if (head.vertices.back() != tail.vertices.front()) {
    throw PreconditionError("paths do not meet");
  }
  BergePath out = head;
  out.vertices.insert(out.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  out.edge_ids.insert(out.edge_ids.end(), tail.edge_ids.begin(), tail.edge_ids.end());
  return out;
}

}  // namespace berge
