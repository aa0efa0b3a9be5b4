#include "berge/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "berge/errors.hpp"

namespace berge {

bool set_contains(std::span<const VertexId> sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

Hypergraph Hypergraph::create(std::size_t n, std::vector<VertexSet> edges) {
  Hypergraph h;
  h.n_ = n;
  h.incidence_.resize(n);
  std::set<VertexSet> seen;
  std::optional<std::size_t> common;
  bool uniform = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    if (e.empty()) {
      throw InvalidHypergraph("edge " + std::to_string(i) + " is empty");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidHypergraph("edge " + std::to_string(i) + " repeats a vertex");
    }
    if (e.back() >= n) {
      throw InvalidHypergraph("edge " + std::to_string(i) + " references vertex " +
                              std::to_string(e.back()) + " >= n");
    }
    if (!seen.insert(e).second) {
      throw InvalidHypergraph("edge " + std::to_string(i) + " duplicates an earlier edge");
    }
    if (!common) {
      common = e.size();
    } else if (*common != e.size()) {
      uniform = false;
    }
    for (VertexId v : e) {
      h.incidence_[v].push_back(static_cast<EdgeId>(i));
    }
  }
  if (uniform && common && *common >= 2) {
    h.r_ = common;
  }
  h.edges_ = std::move(edges);
  return h;
}

}  // namespace berge
