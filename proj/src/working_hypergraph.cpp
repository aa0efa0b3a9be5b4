#include "berge/working_hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "berge/errors.hpp"

namespace berge {

WorkingHypergraph::WorkingHypergraph(const Hypergraph& root, VertexSet vertices,
                                     std::vector<WorkingEdge> edges, std::optional<VertexId> deleted)
    : root_(&root), vertices_(std::move(vertices)), edges_(std::move(edges)), deleted_(deleted) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(edges_.begin(), edges_.end(),
            [](const WorkingEdge& a, const WorkingEdge& b) { return a.id < b.id; });
}

WorkingHypergraph WorkingHypergraph::from_root(const Hypergraph& root) {
  VertexSet vertices(root.num_vertices());
  std::iota(vertices.begin(), vertices.end(), VertexId{0});
  std::vector<WorkingEdge> edges;
  edges.reserve(root.num_edges());
  for (EdgeId id = 0; id < root.num_edges(); ++id) {
    edges.push_back({id, root.edges()[id], id});
  }
  return WorkingHypergraph(root, std::move(vertices), std::move(edges));
}

const WorkingEdge* WorkingHypergraph::find_edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const WorkingEdge& e, EdgeId x) { return e.id < x; });
  return (it != edges_.end() && it->id == id) ? &*it : nullptr;
}

WorkingEdge* WorkingHypergraph::find_edge(EdgeId id) {
  return const_cast<WorkingEdge*>(std::as_const(*this).find_edge(id));
}

std::optional<std::size_t> WorkingHypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const std::size_t r = edges_.front().size();
  for (const auto& e : edges_) {
    if (e.size() != r) return std::nullopt;
  }
  return r;
}

void WorkingHypergraph::check_invariants() const {
  std::set<VertexSet> currents;
  std::set<EdgeId> origins;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) throw ProofDefect("repeated working edge id");
    if (e.current.size() < 2) {
      throw ProofDefect("working edge " + std::to_string(e.id) + " has fewer than two vertices");
    }
    if (!std::is_sorted(e.current.begin(), e.current.end())) {
      throw ProofDefect("working edge " + std::to_string(e.id) + " is not sorted");
    }
    auto origin = root_->edge(e.origin);
    for (VertexId v : e.current) {
      if (!has_vertex(v)) {
        throw ProofDefect("working edge " + std::to_string(e.id) + " leaves the vertex set");
      }
      if (!set_contains(origin, v)) {
        throw ProofDefect("working edge " + std::to_string(e.id) + " is not inside its origin");
      }
    }
    if (!currents.insert(e.current).second) {
      throw ProofDefect("working edge " + std::to_string(e.id) + " duplicates another edge");
    }
    if (!origins.insert(e.origin).second) {
      throw ProofDefect("working edge " + std::to_string(e.id) + " shares its origin");
    }
  }
}

Incidence::Incidence(const WorkingHypergraph& h)
    : vertices_(&h.vertices()),
      vertex_edges_(h.num_vertices()),
      edge_vertices_(h.num_edges()) {
  // id -> local index
  const auto& vs = h.vertices();
  std::vector<std::size_t> index(vs.empty() ? 0 : vs.back() + 1, SIZE_MAX);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
  std::vector<std::size_t> degree(vs.size(), 0);
  for (const auto& e : h.edges()) {
    for (VertexId v : e.current) {
      if (v >= index.size() || index[v] == SIZE_MAX) {
        throw PreconditionError("vertex not present", std::to_string(v));
      }
      ++degree[index[v]];
    }
  }
  for (std::size_t i = 0; i < vs.size(); ++i) vertex_edges_[i].reserve(degree[i]);
  for (std::size_t j = 0; j < h.edges().size(); ++j) {
    const auto& cur = h.edges()[j].current;
    edge_vertices_[j].reserve(cur.size());
    for (VertexId v : cur) {
      std::size_t i = index[v];
      edge_vertices_[j].push_back(i);
      vertex_edges_[i].push_back(j);
    }
  }
}

std::size_t Incidence::local(VertexId v) const {
  auto it = std::lower_bound(vertices_->begin(), vertices_->end(), v);
  if (it == vertices_->end() || *it != v) {
    throw PreconditionError("vertex not present", std::to_string(v));
  }
  return static_cast<std::size_t>(it - vertices_->begin());
}

Verdict verify_path(const WorkingHypergraph& h, const BergePath& p) {
  return detail::check_sequence(
      p.vertices, p.edge_ids, false, [&](VertexId v) { return h.has_vertex(v); },
      [&](EdgeId id) -> const VertexSet* {
        const auto* e = h.find_edge(id);
        return e ? &e->current : nullptr;
      });
}

Verdict verify_cycle(const WorkingHypergraph& h, const BergeCycle& c) {
  return detail::check_sequence(
      c.vertices, c.edge_ids, true, [&](VertexId v) { return h.has_vertex(v); },
      [&](EdgeId id) -> const VertexSet* {
        const auto* e = h.find_edge(id);
        return e ? &e->current : nullptr;
      });
}

VertexSet spanned(const WorkingHypergraph& h, const BergeCycle& c) {
  if (auto v = verify_cycle(h, c); !v) throw PreconditionError("unverified certificate", v.message());
  VertexSet out;
  for (EdgeId id : c.edge_ids) {
    const auto& cur = h.find_edge(id)->current;
    out.insert(out.end(), cur.begin(), cur.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller representative so labels follow ascending ids.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Groups vertices (by local index) under the given edge sets; returns the
// component label of each local vertex, labels dense and ordered by the
// least vertex in each component.
std::vector<std::size_t> label_components(const WorkingHypergraph& h, const Incidence& inc,
                                          std::size_t& count) {
  DisjointSets sets(inc.vertex_count());
  for (std::size_t j = 0; j < inc.edge_count(); ++j) {
    const auto& vs = inc.vertices_of(j);
    for (std::size_t k = 1; k < vs.size(); ++k) sets.unite(vs[0], vs[k]);
  }
  std::vector<std::size_t> label(inc.vertex_count());
  std::vector<std::size_t> dense(inc.vertex_count(), SIZE_MAX);
  count = 0;
  for (std::size_t i = 0; i < inc.vertex_count(); ++i) {
    std::size_t root = sets.find(i);
    if (dense[root] == SIZE_MAX) dense[root] = count++;
    label[i] = dense[root];
  }
  (void)h;
  return label;
}

// Iterative Tarjan over the bipartite incidence graph. Nodes [0, nv) are
// vertices, [nv, nv + ne) are edges.
struct LowLink {
  std::vector<std::size_t> disc;
  std::vector<std::size_t> low;
  std::vector<std::size_t> parent;
  std::vector<bool> articulation;
  std::vector<std::pair<std::size_t, std::size_t>> bridges;  // (vertex node, edge node)
};

LowLink run_lowlink(const Incidence& inc) {
  const std::size_t nv = inc.vertex_count();
  const std::size_t total = nv + inc.edge_count();
  constexpr std::size_t kUnseen = SIZE_MAX;
  LowLink out;
  out.disc.assign(total, kUnseen);
  out.low.assign(total, 0);
  out.parent.assign(total, kUnseen);
  out.articulation.assign(total, false);

  auto neighbours = [&](std::size_t node) -> const std::vector<std::size_t>& {
    return node < nv ? inc.edges_of(node) : inc.vertices_of(node - nv);
  };
  auto to_node = [&](std::size_t node, std::size_t nb) { return node < nv ? nb + nv : nb; };

  std::size_t time = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next neighbour index
  for (std::size_t start = 0; start < total; ++start) {
    if (out.disc[start] != kUnseen) continue;
    std::size_t root_children = 0;
    out.disc[start] = out.low[start] = time++;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [node, idx] = stack.back();
      const auto& nbs = neighbours(node);
      if (idx < nbs.size()) {
        std::size_t next = to_node(node, nbs[idx++]);
        if (out.disc[next] == kUnseen) {
          out.parent[next] = node;
          out.disc[next] = out.low[next] = time++;
          if (node == start) ++root_children;
          stack.emplace_back(next, 0);
        } else if (next != out.parent[node]) {
          out.low[node] = std::min(out.low[node], out.disc[next]);
        }
      } else {
        std::size_t child = node;
        stack.pop_back();
        if (stack.empty()) break;
        std::size_t par = stack.back().first;
        out.low[par] = std::min(out.low[par], out.low[child]);
        if (par != start && out.low[child] >= out.disc[par]) out.articulation[par] = true;
        if (out.low[child] > out.disc[par]) {
          out.bridges.emplace_back(par < nv ? par : child, par < nv ? child : par);
        }
      }
    }
    if (root_children > 1) out.articulation[start] = true;
  }
  return out;
}

WorkingHypergraph restrict_to(const WorkingHypergraph& h, VertexSet vertices,
                              std::vector<WorkingEdge> edges) {
  return WorkingHypergraph(h.root(), std::move(vertices), std::move(edges), h.deleted_vertex());
}

}  // namespace

std::vector<WorkingHypergraph> components(const WorkingHypergraph& h) {
  Incidence inc(h);
  std::size_t count = 0;
  auto label = label_components(h, inc, count);
  std::vector<VertexSet> vertices(count);
  std::vector<std::vector<WorkingEdge>> edges(count);
  for (std::size_t i = 0; i < inc.vertex_count(); ++i) vertices[label[i]].push_back(h.vertices()[i]);
  for (std::size_t j = 0; j < inc.edge_count(); ++j) {
    if (inc.vertices_of(j).empty()) continue;
    edges[label[inc.vertices_of(j).front()]].push_back(h.edges()[j]);
  }
  std::vector<WorkingHypergraph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    out.push_back(restrict_to(h, std::move(vertices[c]), std::move(edges[c])));
  }
  return out;
}

bool is_connected(const WorkingHypergraph& h) {
  if (h.num_vertices() == 0) return true;
  Incidence inc(h);
  std::size_t count = 0;
  label_components(h, inc, count);
  return count == 1;
}

WorkingHypergraph delete_vertex(const WorkingHypergraph& h, VertexId v, EdgeId removed_edge) {
  if (!h.has_vertex(v)) throw PreconditionError("vertex not present", std::to_string(v));
  const auto* removed = h.find_edge(removed_edge);
  if (removed == nullptr) throw PreconditionError("edge not present", std::to_string(removed_edge));
  if (!set_contains(removed->current, v)) {
    throw PreconditionError("edge does not contain vertex", std::to_string(removed_edge));
  }
  VertexSet vertices;
  vertices.reserve(h.num_vertices() - 1);
  for (VertexId u : h.vertices()) {
    if (u != v) vertices.push_back(u);
  }
  std::vector<WorkingEdge> edges;
  edges.reserve(h.num_edges() - 1);
  for (const auto& e : h.edges()) {
    if (e.id == removed_edge) continue;
    WorkingEdge copy = e;
    std::erase(copy.current, v);
    edges.push_back(std::move(copy));
  }
  return WorkingHypergraph(h.root(), std::move(vertices), std::move(edges), v);
}

VertexSet cut_vertices(const WorkingHypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.size() < 2) throw PreconditionError("edge smaller than two", std::to_string(e.id));
  }
  if (!is_connected(h)) throw PreconditionError("not connected");
  Incidence inc(h);
  LowLink ll = run_lowlink(inc);
  VertexSet out;
  for (std::size_t i = 0; i < inc.vertex_count(); ++i) {
    if (ll.articulation[i]) out.push_back(h.vertices()[i]);
  }
  return out;
}

std::vector<WorkingHypergraph> split_at_cut_vertex(const WorkingHypergraph& h, VertexId v0) {
  if (!h.has_vertex(v0)) throw PreconditionError("vertex not present", std::to_string(v0));
  VertexSet rest;
  for (VertexId u : h.vertices()) {
    if (u != v0) rest.push_back(u);
  }
  std::vector<WorkingEdge> stripped;
  for (const auto& e : h.edges()) {
    WorkingEdge copy = e;
    std::erase(copy.current, v0);
    if (!copy.current.empty()) stripped.push_back(std::move(copy));
  }
  WorkingHypergraph without(h.root(), std::move(rest), std::move(stripped), h.deleted_vertex());
  auto parts = components(without);
  if (parts.size() < 2) throw PreconditionError("not a cut vertex", std::to_string(v0));

  std::vector<WorkingHypergraph> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    VertexSet vertices = part.vertices();
    vertices.insert(std::lower_bound(vertices.begin(), vertices.end(), v0), v0);
    std::vector<WorkingEdge> edges;
    for (const auto& e : part.edges()) edges.push_back(*h.find_edge(e.id));
    out.push_back(restrict_to(h, std::move(vertices), std::move(edges)));
  }
  return out;
}

BergePath connecting_berge_path(const WorkingHypergraph& h, VertexId a, VertexId b) {
  if (!h.has_vertex(a)) throw PreconditionError("vertex not present", std::to_string(a));
  if (!h.has_vertex(b)) throw PreconditionError("vertex not present", std::to_string(b));
  Incidence inc(h);
  const std::size_t src = inc.local(a);
  const std::size_t dst = inc.local(b);
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> via_edge(inc.vertex_count(), kNone);
  std::vector<std::size_t> prev(inc.vertex_count(), kNone);
  std::vector<bool> seen(inc.vertex_count(), false);
  std::vector<bool> edge_used(inc.edge_count(), false);
  std::queue<std::size_t> queue;
  seen[src] = true;
  queue.push(src);
  while (!queue.empty() && !seen[dst]) {
    std::size_t x = queue.front();
    queue.pop();
    for (std::size_t j : inc.edges_of(x)) {
      if (edge_used[j]) continue;
      edge_used[j] = true;
      for (std::size_t y : inc.vertices_of(j)) {
        if (seen[y]) continue;
        seen[y] = true;
        via_edge[y] = j;
        prev[y] = x;
        queue.push(y);
      }
    }
  }
  if (!seen[dst]) {
    throw PreconditionError("not connected", std::to_string(a) + " cannot reach " + std::to_string(b));
  }
  BergePath p;
  for (std::size_t x = dst; x != src; x = prev[x]) {
    p.vertices.push_back(h.vertices()[x]);
    p.edge_ids.push_back(h.edges()[via_edge[x]].id);
  }
  p.vertices.push_back(a);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edge_ids.begin(), p.edge_ids.end());
  return p;
}

std::vector<VertexSet> incidence_bridges(const WorkingHypergraph& h) {
  Incidence inc(h);
  LowLink ll = run_lowlink(inc);
  std::vector<VertexSet> out(inc.edge_count());
  const std::size_t nv = inc.vertex_count();
  for (auto [vertex_node, edge_node] : ll.bridges) {
    out[edge_node - nv].push_back(h.vertices()[vertex_node]);
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

WorkingHypergraph sub_hypergraph(const WorkingHypergraph& h, const std::vector<EdgeId>& edge_ids) {
  std::vector<WorkingEdge> edges;
  VertexSet vertices;
  for (EdgeId id : edge_ids) {
    const auto* e = h.find_edge(id);
    if (e == nullptr) throw PreconditionError("edge not present", std::to_string(id));
    edges.push_back(*e);
    vertices.insert(vertices.end(), e->current.begin(), e->current.end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return restrict_to(h, std::move(vertices), std::move(edges));
}

}  // namespace berge
