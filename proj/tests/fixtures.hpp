#pragma once

#include <algorithm>
#include <vector>

#include "berge/generators.hpp"
#include "berge/hypergraph.hpp"
#include "berge/working_hypergraph.hpp"

namespace fixtures {

using berge::Hypergraph;
using berge::VertexSet;

inline Hypergraph make(std::size_t n, std::vector<VertexSet> edges) {
  return Hypergraph::create(n, std::move(edges));
}

inline Hypergraph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Hypergraph k4_3() { return make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

inline Hypergraph cycle_graph(std::size_t n) {
  std::vector<VertexSet> edges;
  for (berge::VertexId i = 0; i < n; ++i) {
    berge::VertexId j = static_cast<berge::VertexId>((i + 1) % n);
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return make(n, edges);
}

inline Hypergraph path_graph(std::size_t n) {
  std::vector<VertexSet> edges;
  for (berge::VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return make(n, edges);
}

inline Hypergraph triangle_with_pendant() { return make(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

/// Naive connectivity: repeated relaxation over edges.
inline bool naive_connected(const berge::WorkingHypergraph& h) {
  if (h.vertices().empty()) return true;
  std::vector<berge::VertexId> reached{h.vertices().front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : h.edges()) {
      bool touches = std::any_of(e.current.begin(), e.current.end(), [&](berge::VertexId v) {
        return std::find(reached.begin(), reached.end(), v) != reached.end();
      });
      if (!touches) continue;
      for (berge::VertexId v : e.current) {
        if (std::find(reached.begin(), reached.end(), v) == reached.end()) {
          reached.push_back(v);
          grew = true;
        }
      }
    }
  }
  return reached.size() == h.vertices().size();
}

/// Naive cut vertex test: delete w from everything and recount.
inline VertexSet naive_cut_vertices(const berge::WorkingHypergraph& h) {
  VertexSet out;
  for (berge::VertexId w : h.vertices()) {
    VertexSet rest;
    for (berge::VertexId u : h.vertices()) {
      if (u != w) rest.push_back(u);
    }
    std::vector<berge::WorkingEdge> edges;
    for (auto e : h.edges()) {
      std::erase(e.current, w);
      if (!e.current.empty()) edges.push_back(e);
    }
    berge::WorkingHypergraph g(h.root(), rest, edges);
    if (!naive_connected(g)) out.push_back(w);
  }
  return out;
}

}  // namespace fixtures
