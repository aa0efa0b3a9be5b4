#include "berge/extractor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <string>

#include "berge/errors.hpp"

namespace berge {

std::size_t ExtractionResult::length() const {
  return std::visit([](const auto& c) { return c.length(); }, outcome);
}

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

VertexSet without(const VertexSet& s, VertexId v) {
  VertexSet out;
  out.reserve(s.size());
  for (VertexId u : s) {
    if (u != v) out.push_back(u);
  }
  return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

const VertexSet& edge_set(const WorkingHypergraph& h, EdgeId id) {
  const auto* e = h.find_edge(id);
  if (e == nullptr) throw ProofDefect("edge " + str(id) + " missing at this level");
  return e->current;
}

bool has_enough_edges(const WorkingHypergraph& h) { return h.num_edges() >= h.num_vertices(); }

Verdict verify_outcome(const WorkingHypergraph& h, const Outcome& o) {
  return std::visit(
      [&](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, BergePath>) {
          return verify_path(h, c);
        } else {
          return verify_cycle(h, c);
        }
      },
      o);
}

Verdict verify_outcome(const Hypergraph& h, const Outcome& o) {
  return std::visit(
      [&](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, BergePath>) {
          return verify_path(h, c);
        } else {
          return verify_cycle(h, c);
        }
      },
      o);
}

std::size_t outcome_length(const Outcome& o) {
  return std::visit([](const auto& c) { return c.length(); }, o);
}

// Length r+1, verified in h, starting at (path) or passing through (cycle) v.
void check_contract(const WorkingHypergraph& h, VertexId v, std::size_t r, const Outcome& o) {
  if (auto verdict = verify_outcome(h, o); !verdict) {
    throw ProofDefect("certificate fails at its own level: " + verdict.message());
  }
  if (outcome_length(o) != r + 1) {
    throw ProofDefect("certificate length " + str(outcome_length(o)) + ", expected " + str(r + 1));
  }
  if (const auto* p = std::get_if<BergePath>(&o)) {
    if (p->start() != v) throw ProofDefect("path does not start at " + str(v));
  } else {
    const auto& c = std::get<BergeCycle>(o);
    if (std::find(c.vertices.begin(), c.vertices.end(), v) == c.vertices.end()) {
      throw ProofDefect("cycle misses " + str(v));
    }
  }
}

// Walks every cycle edge starting from a landing vertex. Landing on the
// cycle vertex v_i yields v_i .. v_{i-1} (k-1 edges); landing on an
// off-cycle vertex u of e_i yields u, e_i, v_{i+1}, .., e_{i-1}, v_i (k edges).
BergePath traverse_from(const WorkingHypergraph& h, const BergeCycle& c, VertexId landing) {
  auto on_cycle = std::find(c.vertices.begin(), c.vertices.end(), landing);
  if (on_cycle != c.vertices.end()) return cycle_to_rooted_path(c, landing);
  for (std::size_t i = 0; i < c.edge_ids.size(); ++i) {
    if (!set_contains(edge_set(h, c.edge_ids[i]), landing)) continue;
    BergeCycle rotated = rotate_cycle(c, i);
    BergePath p;
    p.vertices.push_back(landing);
    p.vertices.insert(p.vertices.end(), rotated.vertices.begin() + 1, rotated.vertices.end());
    p.vertices.push_back(rotated.vertices.front());
    p.edge_ids = rotated.edge_ids;
    return p;
  }
  throw ProofDefect("landing vertex " + str(landing) + " is not spanned by the cycle");
}

BergePath finish_path(BergePath p, std::size_t r) {
  if (p.length() < r + 1) throw ProofDefect("joined path too short: " + str(p.length()));
  return trim_path(p, r + 1);
}

VertexId least_other_than(const VertexSet& vs, VertexId skip) {
  for (VertexId u : vs) {
    if (u != skip) return u;
  }
  throw ProofDefect("piece has no vertex besides " + str(skip));
}

// Incidence graph of a component under repeated single-vertex removals
// from edges. Bridge tests search from both ends of the incidence at once
// and stop when the searches meet or the smaller side runs dry.
class ShrinkIncidence {
 public:
  explicit ShrinkIncidence(const WorkingHypergraph& c)
      : nv_(c.vertices().empty() ? 0 : c.vertices().back() + 1),
        vertex_edges_(nv_),
        edge_vertices_(c.num_edges()),
        stamp_(nv_ + c.num_edges(), 0) {
    for (std::size_t j = 0; j < c.edges().size(); ++j) {
      edge_vertices_[j] = c.edges()[j].current;
      for (VertexId v : c.edges()[j].current) vertex_edges_[v].push_back(j);
    }
  }

  void remove(VertexId u, std::size_t pos) {
    std::erase(vertex_edges_[u], pos);
    std::erase(edge_vertices_[pos], u);
  }

  bool is_bridge(VertexId u, std::size_t pos) {
    round_ += 2;
    const std::uint64_t a = round_;
    const std::uint64_t b = round_ + 1;
    std::vector<std::size_t> qa{u}, qb{nv_ + pos};
    stamp_[u] = a;
    stamp_[nv_ + pos] = b;
    std::size_t ia = 0, ib = 0;
    while (ia < qa.size() && ib < qb.size()) {
      if (expand(qa, ia, a, b, u, pos)) return false;
      if (ib < qb.size() && expand(qb, ib, b, a, u, pos)) return false;
    }
    return true;
  }

 private:
  // Visits the next queued node; true once the other search is reached.
  bool expand(std::vector<std::size_t>& q, std::size_t& head, std::uint64_t mine,
              std::uint64_t other, VertexId u, std::size_t pos) {
    const std::size_t node = q[head++];
    auto step = [&](std::size_t next) {
      if (stamp_[next] == other) return true;
      if (stamp_[next] != mine) {
        stamp_[next] = mine;
        q.push_back(next);
      }
      return false;
    };
    if (node < nv_) {
      for (std::size_t j : vertex_edges_[node]) {
        if (node == u && j == pos) continue;
        if (step(nv_ + j)) return true;
      }
    } else {
      const std::size_t j = node - nv_;
      for (VertexId w : edge_vertices_[j]) {
        if (w == u && j == pos) continue;
        if (step(w)) return true;
      }
    }
    return false;
  }

  std::size_t nv_;
  std::vector<std::vector<std::size_t>> vertex_edges_;
  std::vector<VertexSet> edge_vertices_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t round_ = 0;
};

class Engine {
 public:
  Engine(const ExtractOptions& options, const ProofTrace* script, std::size_t depth_limit)
      : options_(options), script_(script), depth_limit_(depth_limit) {}

  ProofTrace take_trace() { return std::move(trace_); }

  void finish_replay() const {
    if (script_ != nullptr && cursor_ != script_->size()) {
      throw ReplayMismatch("trace has " + str(script_->size() - cursor_) + " unused records");
    }
  }

  Outcome solve(const WorkingHypergraph& h, VertexId v, std::size_t depth) {
    if (depth > depth_limit_) throw ProofDefect("recursion deeper than r + n");
    observe(h);
    auto r = h.uniformity();
    if (!r || *r < 2) throw ProofDefect("level hypergraph is not uniform");
    Outcome out;
    if (*r == 2) {
      out = base_case(h, v);
    } else {
      VertexSet cuts = cut_vertices(h);
      out = cuts.empty() ? main_branch(h, v, depth) : cut_branch(h, v, cuts.front(), cuts, depth);
    }
    check_contract(h, v, *r, out);
    return out;
  }

  Outcome base_case(const WorkingHypergraph& g, VertexId v) {
    note(BaseCaseR2{v});
    Incidence inc(g);
    const std::size_t nv = inc.vertex_count();
    constexpr std::size_t kNone = SIZE_MAX;
    std::vector<std::size_t> level(nv, kNone);
    std::vector<std::size_t> parent(nv, kNone);
    std::vector<std::size_t> parent_edge(nv, kNone);
    std::vector<std::size_t> order;
    const std::size_t src = inc.local(v);
    level[src] = 0;
    order.push_back(src);
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::size_t x = order[head];
      for (std::size_t j : inc.edges_of(x)) {
        for (std::size_t y : inc.vertices_of(j)) {
          if (level[y] != kNone) continue;
          level[y] = level[x] + 1;
          parent[y] = x;
          parent_edge[y] = j;
          order.push_back(y);
        }
      }
    }
    if (order.size() != nv) throw ProofDefect("base case graph is not connected");

    auto vid = [&](std::size_t i) { return g.vertices()[i]; };
    auto eid = [&](std::size_t j) { return g.edges()[j].id; };
    auto other = [&](std::size_t j, std::size_t x) {
      const auto& ends = inc.vertices_of(j);
      return ends[0] == x ? ends[1] : ends[0];
    };

    // Any path of length 3 from v, least edge positions first.
    for (std::size_t ja : inc.edges_of(src)) {
      const std::size_t a = other(ja, src);
      for (std::size_t jb : inc.edges_of(a)) {
        const std::size_t b = other(jb, a);
        if (b == src) continue;
        for (std::size_t jc : inc.edges_of(b)) {
          const std::size_t c = other(jc, b);
          if (c == src || c == a) continue;
          return BergePath{{v, vid(a), vid(b), vid(c)}, {eid(ja), eid(jb), eid(jc)}};
        }
      }
    }

    // None: the tree has two levels and a non-tree edge joins two children of v.
    for (std::size_t j = 0; j < inc.edge_count(); ++j) {
      const std::size_t a = inc.vertices_of(j)[0];
      const std::size_t b = inc.vertices_of(j)[1];
      if (parent_edge[a] == j || parent_edge[b] == j) continue;
      if (level[a] == 1 && level[b] == 1) {
        return BergeCycle{{v, vid(a), vid(b)}, {eid(parent_edge[a]), eid(j), eid(parent_edge[b])}};
      }
      throw ProofDefect("non-tree edge below the first level but no path of length 3");
    }
    throw ProofDefect("graph with e >= n has no non-tree edge");
  }

  Outcome cut_branch(const WorkingHypergraph& h, VertexId v, VertexId proposed_cut,
                     const VertexSet& cuts, std::size_t depth) {
    const std::size_t r = *h.uniformity();
    // pieces away from v first, so the path can cross the cut
    auto eligible_label = [v](const std::vector<WorkingHypergraph>& parts,
                              VertexId cut) -> std::optional<VertexId> {
      std::optional<VertexId> fallback;
      for (const auto& p : parts) {
        if (!has_enough_edges(p)) continue;
        if (v == cut || !p.has_vertex(v)) return least_other_than(p.vertices(), cut);
        if (!fallback) fallback = least_other_than(p.vertices(), cut);
      }
      return fallback;
    };
    auto parts = split_at_cut_vertex(h, proposed_cut);
    auto label = eligible_label(parts, proposed_cut);
    if (!label) throw ProofDefect("no piece at cut vertex " + str(proposed_cut) + " has e >= n");

    CutVertex rec = decide(CutVertex{proposed_cut, *label}, [&](const CutVertex& c) {
      if (!set_contains(cuts, c.cut)) return false;
      for (const auto& p : split_at_cut_vertex(h, c.cut)) {
        if (least_other_than(p.vertices(), c.cut) == c.component) return has_enough_edges(p);
      }
      return false;
    });
    if (rec.cut != proposed_cut) parts = split_at_cut_vertex(h, rec.cut);
    const VertexId v0 = rec.cut;

    const WorkingHypergraph* chosen = nullptr;
    const WorkingHypergraph* home = nullptr;
    for (const auto& p : parts) {
      if (least_other_than(p.vertices(), v0) == rec.component) chosen = &p;
      if (v != v0 && p.has_vertex(v)) home = &p;
    }
    if (chosen->has_vertex(v)) return solve(*chosen, v, depth + 1);

    Outcome sub = solve(*chosen, v0, depth + 1);
    BergePath tail = std::holds_alternative<BergePath>(sub)
                         ? trim_path(std::get<BergePath>(sub), r)
                         : cycle_to_rooted_path(std::get<BergeCycle>(sub), v0);
    BergePath head = connecting_berge_path(*home, v, v0);
    return finish_path(concat_paths(head, tail), r);
  }

  Outcome main_branch(const WorkingHypergraph& h, VertexId v, std::size_t depth) {
    const std::size_t r = *h.uniformity();

    struct Split {
      WorkingHypergraph rest;
      std::vector<WorkingHypergraph> pieces;
    };
    auto split = [&](EdgeId e) {
      WorkingHypergraph rest = delete_vertex(h, v, e);
      auto pieces = components(rest);
      return Split{std::move(rest), std::move(pieces)};
    };
    auto find_piece = [](const Split& s, VertexId label) -> const WorkingHypergraph* {
      for (const auto& p : s.pieces) {
        if (p.vertices().front() == label) return &p;
      }
      return nullptr;
    };

    std::optional<EdgeId> proposed_edge;
    for (const auto& e : h.edges()) {
      if (set_contains(e.current, v)) {
        proposed_edge = e.id;
        break;
      }
    }
    if (!proposed_edge) throw ProofDefect("vertex " + str(v) + " has no edge");
    Split s = split(*proposed_edge);
    std::optional<VertexId> proposed_label;
    for (const auto& p : s.pieces) {
      if (has_enough_edges(p)) {
        proposed_label = p.vertices().front();
        break;
      }
    }
    if (!proposed_label) throw ProofDefect("no component of H - v - e has e >= n");

    VertexDeletion rec =
        decide(VertexDeletion{v, *proposed_edge, *proposed_label}, [&](const VertexDeletion& d) {
          const auto* e = h.find_edge(d.edge);
          if (d.vertex != v || e == nullptr || !set_contains(e->current, v)) return false;
          Split alt = split(d.edge);
          const auto* p = find_piece(alt, d.component);
          return p != nullptr && has_enough_edges(*p);
        });
    if (rec.edge != *proposed_edge) s = split(rec.edge);
    const EdgeId e = rec.edge;
    observe(s.rest);

    WorkingHypergraph piece = *find_piece(s, rec.component);
    const VertexSet& e_set = edge_set(h, e);
    std::optional<VertexId> z;
    for (VertexId u : e_set) {
      if (u != v && piece.has_vertex(u)) {
        z = u;
        break;
      }
    }
    if (!z) throw ProofDefect("chosen component misses e - v");

    // v, e, z, ... : a path from v to the current root z whose edges and
    // vertices (other than z) lie outside the piece being shrunk.
    BergePath approach{{v, *z}, {e}};
    while (true) {
      ShrinkOutcome so = shrink(std::move(piece), r);
      if (so.kind == ShrinkOutcome::Kind::kShrunk) {
        piece = std::move(*so.hypergraph);
        break;
      }
      if (so.kind == ShrinkOutcome::Kind::kAllSubsets) {
        return close_cycle(h, v, e, *so.cycle);
      }
      const WorkingHypergraph& next = *so.hypergraph;
      if (!next.has_vertex(*z)) {
        const VertexSet& f_set = edge_set(h, *so.edge);
        const WorkingHypergraph* from = nullptr;
        for (const auto& p : so.pieces) {
          if (p.has_vertex(*z)) from = &p;
        }
        auto first_in = [&](const WorkingHypergraph& p) {
          for (VertexId u : f_set) {
            if (p.has_vertex(u)) return u;
          }
          throw ProofDefect("piece does not touch the deleted edge");
        };
        VertexId exit = first_in(*from);
        VertexId entry = first_in(next);
        if (exit != *z) approach = concat_paths(approach, connecting_berge_path(*from, *z, exit));
        approach.vertices.push_back(entry);
        approach.edge_ids.push_back(*so.edge);
        z = entry;
      }
      piece = std::move(*so.hypergraph);
    }

    note(Recurse{r - 1, piece.num_vertices(), piece.num_edges(), *z});
    Outcome sub = solve(piece, *z, depth + 1);
    if (auto verdict = verify_outcome(h, sub); !verdict) {
      throw ProofDefect("sub-certificate does not lift: " + verdict.message());
    }
    return finish(h, v, e, approach, sub);
  }

  ShrinkOutcome shrink(WorkingHypergraph c, std::size_t r) {
    std::map<VertexSet, EdgeId> currents;
    for (const auto& e : c.edges()) currents.emplace(e.current, e.id);
    ShrinkIncidence incidence(c);

    while (true) {
      std::size_t pos = 0;
      while (pos < c.edges().size() && c.edges()[pos].size() != r) ++pos;
      if (pos == c.edges().size()) {
        ShrinkOutcome out;
        out.kind = ShrinkOutcome::Kind::kShrunk;
        out.hypergraph = std::move(c);
        return out;
      }
      const WorkingEdge f = c.edges()[pos];

      VertexSet legal;
      bool every_removal_disconnects = true;
      bool every_removal_duplicates = true;
      for (VertexId u : f.current) {
        bool keeps_connected = !incidence.is_bridge(u, pos);
        bool duplicates = currents.count(without(f.current, u)) > 0;
        if (keeps_connected) every_removal_disconnects = false;
        if (!duplicates) every_removal_duplicates = false;
        if (keeps_connected && !duplicates) legal.push_back(u);
      }

      if (!legal.empty()) {
        Shrink rec = decide(Shrink{f.id, legal.front()}, [&](const Shrink& s) {
          return s.edge == f.id && set_contains(legal, s.removed);
        });
        WorkingEdge* target = c.find_edge(f.id);
        currents.erase(target->current);
        std::erase(target->current, rec.removed);
        incidence.remove(rec.removed, pos);
        currents.emplace(target->current, target->id);
        observe(c);
        continue;
      }

      if (every_removal_disconnects) {
        std::vector<WorkingEdge> kept;
        for (const auto& e : c.edges()) {
          if (e.id != f.id) kept.push_back(e);
        }
        WorkingHypergraph rest(c.root(), c.vertices(), std::move(kept), c.deleted_vertex());
        auto pieces = components(rest);
        std::optional<VertexId> label;
        for (const auto& p : pieces) {
          if (has_enough_edges(p)) {
            label = p.vertices().front();
            break;
          }
        }
        if (!label) throw ProofDefect("no piece left by edge " + str(f.id) + " has e >= n");
        auto rec = decide(DisconnectingEdgeDeleted{f.id, *label},
                          [&](const DisconnectingEdgeDeleted& d) {
                            if (d.edge != f.id) return false;
                            for (const auto& p : pieces) {
                              if (p.vertices().front() == d.component) return has_enough_edges(p);
                            }
                            return false;
                          });
        ShrinkOutcome out;
        out.kind = ShrinkOutcome::Kind::kFragmented;
        out.edge = f.id;
        for (const auto& p : pieces) {
          if (p.vertices().front() == rec.component) out.hypergraph = p;
        }
        observe(*out.hypergraph);
        out.pieces = std::move(pieces);
        return out;
      }

      if (every_removal_duplicates) {
        note(AllSubsetsCycle{f.id});
        BergeCycle cycle;
        cycle.vertices = f.current;
        for (std::size_t i = 0; i < r; ++i) {
          cycle.edge_ids.push_back(currents.at(without(f.current, f.current[(i + 2) % r])));
        }
        ShrinkOutcome out;
        out.kind = ShrinkOutcome::Kind::kAllSubsets;
        out.edge = f.id;
        out.cycle = std::move(cycle);
        return out;
      }

      throw ProofDefect("no shrinking case applies to edge " + str(f.id));
    }
  }

  Outcome finish(const WorkingHypergraph& h, VertexId v, EdgeId e, const BergePath& approach,
                 const Outcome& sub) {
    const std::size_t r = *h.uniformity();
    if (const auto* p = std::get_if<BergePath>(&sub)) {
      return finish_path(concat_paths(approach, *p), r);
    }
    return close_cycle(h, v, e, std::get<BergeCycle>(sub));
  }

  Outcome close_cycle(const WorkingHypergraph& h, VertexId v, EdgeId e, const BergeCycle& c) {
    VertexSet span = spanned(h, c);
    if (intersects(span, without(edge_set(h, e), v))) return lemma1(h, v, e, c);
    return remote(h, v, e, c);
  }

  Outcome lemma1(const WorkingHypergraph& h, VertexId v, EdgeId e, const BergeCycle& c) {
    const VertexSet& e_set = edge_set(h, e);
    if (!set_contains(e_set, v)) throw PreconditionError("edge does not contain v");
    if (auto verdict = verify_cycle(h, c); !verdict) {
      throw PreconditionError("unverified certificate", verdict.message());
    }
    auto on_cycle = [&](VertexId u) {
      return std::find(c.vertices.begin(), c.vertices.end(), u) != c.vertices.end();
    };
    if (on_cycle(v)) throw PreconditionError("v is a cycle vertex");
    if (std::find(c.edge_ids.begin(), c.edge_ids.end(), e) != c.edge_ids.end()) {
      throw PreconditionError("e is a cycle edge");
    }
    const VertexSet span = spanned(h, c);
    VertexSet meet;
    for (VertexId u : without(e_set, v)) {
      if (set_contains(span, u)) meet.push_back(u);
    }
    if (meet.empty()) throw PreconditionError("cycle does not span e - v");

    // Off-cycle spanned vertex of e: enter the cycle through it.
    for (VertexId u : meet) {
      if (on_cycle(u)) continue;
      note(Lemma1{1});
      BergePath tail = traverse_from(h, c, u);
      return concat_paths(BergePath{{v, u}, {e}}, tail);
    }

    // Otherwise e meets the cycle only in cycle vertices; start there.
    VertexId first = meet.front();
    std::size_t at = static_cast<std::size_t>(
        std::find(c.vertices.begin(), c.vertices.end(), first) - c.vertices.begin());
    const BergeCycle forward = rotate_cycle(c, at);
    const BergeCycle backward = reverse_cycle(forward);
    const std::size_t k = forward.length();

    auto outside = [&](EdgeId id) -> std::optional<VertexId> {
      for (VertexId u : edge_set(h, id)) {
        if (u != v && !on_cycle(u)) return u;
      }
      return std::nullopt;
    };
    auto run_to = [&](const BergeCycle& orientation, VertexId end) {
      BergePath p{{v}, {e}};
      p.vertices.insert(p.vertices.end(), orientation.vertices.begin(), orientation.vertices.end());
      p.vertices.push_back(end);
      p.edge_ids.insert(p.edge_ids.end(), orientation.edge_ids.begin(), orientation.edge_ids.end());
      return p;
    };
    auto close_at_v = [&](const BergeCycle& orientation) {
      BergeCycle out{{v}, {e}};
      out.vertices.insert(out.vertices.end(), orientation.vertices.begin(),
                          orientation.vertices.end());
      out.edge_ids.insert(out.edge_ids.end(), orientation.edge_ids.begin(),
                          orientation.edge_ids.end());
      return out;
    };

    // The closing edge of `forward` is e_k; of `backward` it is e_1.
    if (auto u = outside(forward.edge_ids[k - 1])) {
      note(Lemma1{2});
      return run_to(forward, *u);
    }
    if (auto u = outside(forward.edge_ids[0])) {
      note(Lemma1{2});
      return run_to(backward, *u);
    }
    if (set_contains(edge_set(h, forward.edge_ids[k - 1]), v)) {
      note(Lemma1{3});
      return close_at_v(forward);
    }
    if (set_contains(edge_set(h, forward.edge_ids[0]), v)) {
      note(Lemma1{3});
      return close_at_v(backward);
    }
    throw ProofDefect("no case of the cycle extension applies");
  }

  Outcome remote(const WorkingHypergraph& h, VertexId v, EdgeId e, const BergeCycle& c) {
    const std::size_t r = *h.uniformity();
    const VertexSet& e_set = edge_set(h, e);
    if (!set_contains(e_set, v)) throw PreconditionError("edge does not contain v");
    const VertexSet span = spanned(h, c);
    const VertexSet rest = without(e_set, v);
    if (intersects(span, rest)) throw PreconditionError("cycle spans e - v");

    // BFS from e - v through H - v - e, never using cycle edges, up to the
    // first spanned vertex other than v.
    Incidence inc(h);
    constexpr std::size_t kNone = SIZE_MAX;
    const std::size_t nv = inc.vertex_count();
    std::vector<bool> blocked_edge(inc.edge_count(), false);
    for (std::size_t j = 0; j < inc.edge_count(); ++j) {
      EdgeId id = h.edges()[j].id;
      if (id == e || std::find(c.edge_ids.begin(), c.edge_ids.end(), id) != c.edge_ids.end()) {
        blocked_edge[j] = true;
      }
    }
    const std::size_t v_local = inc.local(v);
    std::vector<std::size_t> prev(nv, kNone);
    std::vector<std::size_t> via(nv, kNone);
    std::vector<bool> seen(nv, false);
    seen[v_local] = true;
    std::queue<std::size_t> queue;
    for (VertexId w : rest) {
      std::size_t i = inc.local(w);
      seen[i] = true;
      queue.push(i);
    }
    std::optional<std::size_t> landing;
    while (!queue.empty() && !landing) {
      std::size_t x = queue.front();
      queue.pop();
      for (std::size_t j : inc.edges_of(x)) {
        if (blocked_edge[j]) continue;
        for (std::size_t y : inc.vertices_of(j)) {
          if (seen[y]) continue;
          seen[y] = true;
          prev[y] = x;
          via[y] = j;
          if (set_contains(span, h.vertices()[y])) {
            landing = y;
            break;
          }
          queue.push(y);
        }
        if (landing) break;
      }
    }
    if (!landing) throw ProofDefect("cycle unreachable from e - v without reusing its edges");

    BergePath approach;
    std::size_t x = *landing;
    for (; prev[x] != kNone; x = prev[x]) {
      approach.vertices.push_back(h.vertices()[x]);
      approach.edge_ids.push_back(h.edges()[via[x]].id);
    }
    approach.vertices.push_back(h.vertices()[x]);
    approach.vertices.push_back(v);
    approach.edge_ids.push_back(e);
    std::reverse(approach.vertices.begin(), approach.vertices.end());
    std::reverse(approach.edge_ids.begin(), approach.edge_ids.end());

    const VertexId land = h.vertices()[*landing];
    note(RemoteCycleExtension{land});
    return finish_path(concat_paths(approach, traverse_from(h, c, land)), r);
  }

  // Turns an (r+1)-cycle found in a component with e > n into an
  // (r+1)-path of that component.
  BergePath promote(const WorkingHypergraph& comp, const BergeCycle& c, std::size_t r) {
    const VertexSet span = spanned(comp, c);
    VertexSet cycle_vertices = c.vertices;
    std::sort(cycle_vertices.begin(), cycle_vertices.end());
    for (VertexId u : span) {
      if (set_contains(cycle_vertices, u)) continue;
      note(PromoteViaSpan{u});
      return traverse_from(comp, c, u);
    }
    // Every cycle edge lies inside the r+1 cycle vertices: the cycle is the
    // complete r-uniform hypergraph on them. Leave it through another edge.
    for (const auto& g : comp.edges()) {
      VertexId inside = 0;
      std::optional<VertexId> out;
      bool touches = false;
      for (VertexId u : g.current) {
        if (set_contains(cycle_vertices, u)) {
          if (!touches) inside = u;
          touches = true;
        } else if (!out) {
          out = u;
        }
      }
      if (!touches || !out) continue;
      note(PromoteViaOutsideEdge{g.id});
      return finish_path(concat_paths(BergePath{{*out, inside}, {g.id}}, cycle_to_rooted_path(c, inside)),
                         r);
    }
    throw ProofDefect("complete cycle has no edge leaving it");
  }

 private:
  template <class R, class Valid>
  R decide(const R& proposed, Valid&& valid) {
    if (script_ == nullptr) {
      trace_.push_back(proposed);
      return proposed;
    }
    const TraceRecord expected = proposed;
    if (cursor_ >= script_->size()) {
      throw ReplayMismatch("trace ended before " + std::string(record_kind(expected)));
    }
    const TraceRecord& next = (*script_)[cursor_++];
    const R* rec = std::get_if<R>(&next);
    if (rec == nullptr) {
      throw ReplayMismatch("record " + str(cursor_ - 1) + " is " + std::string(record_kind(next)) +
                           ", extraction reached " + std::string(record_kind(expected)));
    }
    if (!valid(*rec)) {
      throw ReplayMismatch("record " + str(cursor_ - 1) + " (" + std::string(record_kind(next)) +
                           ") is not a legal choice here");
    }
    trace_.push_back(*rec);
    return *rec;
  }

  template <class R>
  void note(const R& r) {
    decide(r, [&](const R& rec) { return rec == r; });
  }

  void observe(const WorkingHypergraph& h) {
    if (options_.observer) options_.observer(h);
  }

  const ExtractOptions& options_;
  const ProofTrace* script_;
  std::size_t cursor_ = 0;
  std::size_t depth_limit_;
  ProofTrace trace_;
};

std::size_t require_uniform(const WorkingHypergraph& h) {
  auto r = h.uniformity();
  if (!r || *r < 2) throw PreconditionError("not uniform");
  return *r;
}

void check_extract_preconditions(const WorkingHypergraph& h, VertexId v) {
  if (!h.has_vertex(v)) throw PreconditionError("vertex out of range", str(v));
  require_uniform(h);
  if (!is_connected(h)) throw PreconditionError("not connected");
  if (h.num_edges() < h.num_vertices()) throw PreconditionError("e < n");
}

ExtractionResult run_extraction(const WorkingHypergraph& h, VertexId v, const ExtractOptions& options,
                                const ProofTrace* script) {
  check_extract_preconditions(h, v);
  const std::size_t r = require_uniform(h);
  Engine engine(options, script, r + h.num_vertices() + 1);
  Outcome out = engine.solve(h, v, 0);
  engine.finish_replay();
  ExtractionResult result{std::move(out), engine.take_trace()};
  return lift(result, h);
}

}  // namespace

ExtractionResult extract(const Hypergraph& h, VertexId v, const ExtractOptions& options) {
  if (v >= h.num_vertices()) throw PreconditionError("vertex out of range", str(v));
  return run_extraction(WorkingHypergraph::from_root(h), v, options, nullptr);
}

ExtractionResult extract(const WorkingHypergraph& h, VertexId v, const ExtractOptions& options) {
  return run_extraction(h, v, options, nullptr);
}

ExtractionResult replay(const Hypergraph& h, VertexId v, const ProofTrace& trace) {
  if (v >= h.num_vertices()) throw PreconditionError("vertex out of range", str(v));
  return run_extraction(WorkingHypergraph::from_root(h), v, {}, &trace);
}

Theorem2Result extract_theorem2(const Hypergraph& h, const ExtractOptions& options) {
  if (h.num_edges() <= h.num_vertices()) throw PreconditionError("e <= n");
  auto r = h.uniformity();
  if (!r) throw PreconditionError("not uniform");
  const WorkingHypergraph whole = WorkingHypergraph::from_root(h);
  for (const auto& comp : components(whole)) {
    if (comp.num_edges() <= comp.num_vertices()) continue;
    const VertexId v = comp.vertices().front();
    Engine engine(options, nullptr, *r + comp.num_vertices() + 1);
    Outcome out = engine.solve(comp, v, 0);
    BergePath path = std::holds_alternative<BergePath>(out)
                         ? std::get<BergePath>(out)
                         : engine.promote(comp, std::get<BergeCycle>(out), *r);
    if (auto verdict = verify_path(h, path); !verdict) {
      throw ProofDefect("promoted path fails in the root: " + verdict.message());
    }
    if (path.length() != *r + 1) throw ProofDefect("promoted path has wrong length");
    return {std::move(path), engine.take_trace()};
  }
  throw ProofDefect("no component has more edges than vertices");
}

ExtractionResult base_case_r2(const WorkingHypergraph& g, VertexId v) {
  check_extract_preconditions(g, v);
  if (require_uniform(g) != 2) throw PreconditionError("not a graph");
  ExtractOptions options;
  Engine engine(options, nullptr, 1);
  Outcome out = engine.base_case(g, v);
  check_contract(g, v, 2, out);
  return {std::move(out), engine.take_trace()};
}

ExtractionResult base_case_r2(const Hypergraph& g, VertexId v) {
  if (v >= g.num_vertices()) throw PreconditionError("vertex out of range", str(v));
  return base_case_r2(WorkingHypergraph::from_root(g), v);
}

ExtractionResult cut_vertex_branch(const Hypergraph& h, VertexId v, VertexId v0) {
  if (v >= h.num_vertices()) throw PreconditionError("vertex out of range", str(v));
  const WorkingHypergraph w = WorkingHypergraph::from_root(h);
  check_extract_preconditions(w, v);
  const std::size_t r = require_uniform(w);
  VertexSet cuts = cut_vertices(w);
  if (!set_contains(cuts, v0)) throw PreconditionError("not a cut vertex", str(v0));
  ExtractOptions options;
  Engine engine(options, nullptr, r + w.num_vertices() + 1);
  Outcome out = engine.cut_branch(w, v, v0, cuts, 0);
  check_contract(w, v, r, out);
  return {std::move(out), engine.take_trace()};
}

ShrinkOutcome shrink_component(const WorkingHypergraph& c, std::size_t r) {
  if (!is_connected(c)) throw PreconditionError("not connected");
  if (!has_enough_edges(c)) throw PreconditionError("e < n");
  for (const auto& e : c.edges()) {
    if (e.size() != r && e.size() + 1 != r) throw PreconditionError("edge sizes not r or r-1");
  }
  if (r < 3) throw PreconditionError("r < 3");
  ExtractOptions options;
  Engine engine(options, nullptr, 1);
  ShrinkOutcome out = engine.shrink(c, r);
  out.trace = engine.take_trace();
  return out;
}

ExtractionResult lemma1_extend(const WorkingHypergraph& h, VertexId v, EdgeId e, const BergeCycle& c) {
  const std::size_t r = require_uniform(h);
  if (c.length() != r) throw PreconditionError("cycle length is not r");
  ExtractOptions options;
  Engine engine(options, nullptr, 1);
  Outcome out = engine.lemma1(h, v, e, c);
  check_contract(h, v, r, out);
  return {std::move(out), engine.take_trace()};
}

ExtractionResult lemma1_extend(const Hypergraph& h, VertexId v, EdgeId e, const BergeCycle& c) {
  return lemma1_extend(WorkingHypergraph::from_root(h), v, e, c);
}

ExtractionResult remote_cycle_extend(const WorkingHypergraph& h, VertexId v, EdgeId e,
                                     const BergeCycle& c) {
  const std::size_t r = require_uniform(h);
  if (c.length() != r) throw PreconditionError("cycle length is not r");
  if (auto verdict = verify_cycle(h, c); !verdict) {
    throw PreconditionError("unverified certificate", verdict.message());
  }
  if (std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end()) {
    throw PreconditionError("v is a cycle vertex");
  }
  if (std::find(c.edge_ids.begin(), c.edge_ids.end(), e) != c.edge_ids.end()) {
    throw PreconditionError("e is a cycle edge");
  }
  ExtractOptions options;
  Engine engine(options, nullptr, 1);
  Outcome out = engine.remote(h, v, e, c);
  check_contract(h, v, r, out);
  return {std::move(out), engine.take_trace()};
}

ExtractionResult remote_cycle_extend(const Hypergraph& h, VertexId v, EdgeId e, const BergeCycle& c) {
  return remote_cycle_extend(WorkingHypergraph::from_root(h), v, e, c);
}

ExtractionResult lift(const ExtractionResult& result, const WorkingHypergraph& provenance) {
  ExtractionResult out = result;
  std::visit(
      [&](auto& cert) {
        for (EdgeId& id : cert.edge_ids) {
          const auto* e = provenance.find_edge(id);
          if (e == nullptr) throw ProofDefect("edge " + str(id) + " has no provenance");
          id = e->origin;
        }
      },
      out.outcome);
  if (auto verdict = verify_outcome(provenance.root(), out.outcome); !verdict) {
    throw ProofDefect("lifted certificate fails in the root: " + verdict.message());
  }
  return out;
}

ExtractionResult finish_after_recursion(const WorkingHypergraph& h, VertexId v, EdgeId e, VertexId z,
                                        const ExtractionResult& sub) {
  const std::size_t r = require_uniform(h);
  const VertexSet& e_set = edge_set(h, e);
  if (z == v || !set_contains(e_set, z) || !set_contains(e_set, v)) {
    throw PreconditionError("z must lie in e - v");
  }
  const auto& [vertices, edge_ids] = std::visit(
      [](const auto& c) { return std::pair{c.vertices, c.edge_ids}; }, sub.outcome);
  if (std::find(edge_ids.begin(), edge_ids.end(), e) != edge_ids.end()) {
    throw PreconditionError("sub-certificate uses e");
  }
  if (std::find(vertices.begin(), vertices.end(), v) != vertices.end()) {
    throw PreconditionError("sub-certificate visits v");
  }
  if (sub.is_path() && sub.path().start() != z) throw PreconditionError("path does not start at z");
  ExtractOptions options;
  Engine engine(options, nullptr, 1);
  Outcome out = engine.finish(h, v, e, BergePath{{v, z}, {e}}, sub.outcome);
  check_contract(h, v, r, out);
  ExtractionResult result{std::move(out), sub.trace};
  for (auto& rec : engine.take_trace()) result.trace.push_back(rec);
  return result;
}

}  // namespace berge
