#include "berge/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "berge/errors.hpp"

namespace berge::oracle {

namespace {

class Search {
 public:
  Search(const Hypergraph& h, std::uint64_t budget)
      : h_(h),
        budget_(budget),
        used_vertex_(h.num_vertices(), false),
        used_edge_(h.num_edges(), false),
        mark_(h.num_vertices(), 0) {
    if (budget == 0) throw PreconditionError("budget must be positive");
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Longest path starting at v; keeps `best_` and its witness.
  void longest_from(VertexId v, std::size_t floor) {
    best_len_ = floor;
    best_.reset();
    target_ = std::numeric_limits<std::size_t>::max();
    start(v);
    descend_longest();
    finish(v);
  }

  std::optional<BergePath> path_of_length(VertexId v, std::size_t k) {
    target_ = k;
    found_.reset();
    start(v);
    descend_exact();
    finish(v);
    return found_;
  }

  std::optional<BergeCycle> cycle_of_length(VertexId v, std::size_t k) {
    if (k < 2) return std::nullopt;
    target_ = k;
    cycle_.reset();
    start(v);
    descend_cycle();
    finish(v);
    return cycle_;
  }

  std::size_t best_length() const { return best_len_; }
  const std::optional<BergePath>& best() const { return best_; }

 private:
  void start(VertexId v) {
    vertices_.assign(1, v);
    edges_.clear();
    used_vertex_[v] = true;
  }
  void finish(VertexId v) { used_vertex_[v] = false; }

  void tick() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("oracle budget of " + std::to_string(budget_) + " nodes exhausted");
    }
  }

  // Vertices reachable from the path's end through unused edges and unused
  // vertices: an upper bound on how many more vertices the path can take.
  std::size_t reachable_extra() {
    ++stamp_;
    std::size_t count = 0;
    stack_.assign(1, vertices_.back());
    mark_[vertices_.back()] = stamp_;
    while (!stack_.empty()) {
      VertexId x = stack_.back();
      stack_.pop_back();
      for (EdgeId id : h_.incident_edges(x)) {
        if (used_edge_[id]) continue;
        for (VertexId y : h_.edge(id)) {
          if (used_vertex_[y] || mark_[y] == stamp_) continue;
          mark_[y] = stamp_;
          ++count;
          stack_.push_back(y);
        }
      }
    }
    return count;
  }

  template <class Visit>
  bool for_each_step(Visit&& visit) {
    const VertexId cur = vertices_.back();
    for (EdgeId id : h_.incident_edges(cur)) {
      if (used_edge_[id]) continue;
      for (VertexId y : h_.edge(id)) {
        if (used_vertex_[y]) continue;
        used_edge_[id] = true;
        used_vertex_[y] = true;
        vertices_.push_back(y);
        edges_.push_back(id);
        bool stop = visit();
        vertices_.pop_back();
        edges_.pop_back();
        used_vertex_[y] = false;
        used_edge_[id] = false;
        if (stop) return true;
      }
    }
    return false;
  }

  void descend_longest() {
    tick();
    if (edges_.size() > best_len_) {
      best_len_ = edges_.size();
      best_ = BergePath{vertices_, edges_};
    }
    if (edges_.size() + remaining_vertices() <= best_len_) return;
    if (edges_.size() + reachable_extra() <= best_len_) return;
    for_each_step([&] {
      descend_longest();
      return false;
    });
  }

  bool descend_exact() {
    tick();
    if (edges_.size() == target_) {
      found_ = BergePath{vertices_, edges_};
      return true;
    }
    if (edges_.size() + reachable_extra() < target_) return false;
    return for_each_step([&] { return descend_exact(); });
  }

  bool descend_cycle() {
    tick();
    if (vertices_.size() == target_) {
      // Close v_k back to v_1 through one more unused edge.
      for (EdgeId id : h_.incident_edges(vertices_.back())) {
        if (used_edge_[id] || !h_.contains(id, vertices_.front())) continue;
        BergeCycle c{vertices_, edges_};
        c.edge_ids.push_back(id);
        cycle_ = std::move(c);
        return true;
      }
      return false;
    }
    if (vertices_.size() + reachable_extra() < target_) return false;
    return for_each_step([&] { return descend_cycle(); });
  }

  std::size_t remaining_vertices() const { return h_.num_vertices() - vertices_.size(); }

  const Hypergraph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> used_vertex_;
  std::vector<bool> used_edge_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<VertexId> stack_;
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::size_t target_ = 0;
  std::size_t best_len_ = 0;
  std::optional<BergePath> best_;
  std::optional<BergePath> found_;
  std::optional<BergeCycle> cycle_;
};

void check_vertex(const Hypergraph& h, VertexId v) {
  if (v >= h.num_vertices()) throw PreconditionError("vertex out of range", std::to_string(v));
}

}  // namespace

OracleReport longest_berge_path(const Hypergraph& h, std::uint64_t budget) {
  Search search(h, budget);
  OracleReport report;
  if (h.num_vertices() > 0) report.witness = BergePath{{0}, {}};
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    search.longest_from(v, report.longest_path_length);
    if (search.best()) {
      report.longest_path_length = search.best_length();
      report.witness = search.best();
    }
  }
  report.nodes = search.nodes();
  return report;
}

OracleReport profile(const Hypergraph& h, std::size_t cycle_length, std::uint64_t budget) {
  Search search(h, budget);
  OracleReport report;
  if (h.num_vertices() > 0) report.witness = BergePath{{0}, {}};
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    search.longest_from(v, 0);
    VertexProfile p;
    p.longest_from = search.best_length();
    if (search.best() && p.longest_from > report.longest_path_length) {
      report.longest_path_length = p.longest_from;
      report.witness = search.best();
    }
    p.cycle_through = search.cycle_of_length(v, cycle_length).has_value();
    report.per_vertex[v] = p;
  }
  report.nodes = search.nodes();
  return report;
}

std::optional<BergePath> find_path_from(const Hypergraph& h, VertexId v, std::size_t k,
                                        std::uint64_t budget) {
  check_vertex(h, v);
  Search search(h, budget);
  return search.path_of_length(v, k);
}

std::optional<BergeCycle> find_cycle_through(const Hypergraph& h, VertexId v, std::size_t k,
                                             std::uint64_t budget) {
  check_vertex(h, v);
  Search search(h, budget);
  return search.cycle_of_length(v, k);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) / i stays exact; saturate on overflow
    std::uint64_t num = n - k + i;
    if (out > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out = out * num / i;
  }
  return out;
}

BoundRegime bound_regime(std::size_t k, std::size_t r) {
  if (k > r + 1 && r + 1 > 3) return BoundRegime::kLongPaths;
  if (r >= k && k > 2) return BoundRegime::kShortPaths;
  if (k == r + 1 && k > 2) return BoundRegime::kPathLengthRPlusOne;
  return BoundRegime::kNone;
}

int compare_to_bound(std::size_t e, std::size_t n, std::size_t k, std::size_t r) {
  auto sign = [](std::uint64_t lhs, std::uint64_t rhs) { return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1); };
  switch (bound_regime(k, r)) {
    case BoundRegime::kLongPaths:
      return sign(std::uint64_t{e} * k, std::uint64_t{n} * binomial(k, r));
    case BoundRegime::kShortPaths:
      return sign(std::uint64_t{e} * (r + 1), std::uint64_t{n} * (k - 1));
    case BoundRegime::kPathLengthRPlusOne:
      return sign(e, n);
    case BoundRegime::kNone:
      break;
  }
  throw PreconditionError("no bound for this (k, r)");
}

BoundCheck check_theorem1_bounds(const std::vector<Hypergraph>& family, std::size_t k,
                                 std::size_t r, std::uint64_t budget) {
  if (bound_regime(k, r) == BoundRegime::kNone) throw PreconditionError("no bound for this (k, r)");
  BoundCheck out;
  for (const auto& h : family) {
    ++out.instances;
    if (h.num_edges() > 0 && h.uniformity() != r) throw PreconditionError("not uniform");
    if (longest_berge_path(h, budget).longest_path_length >= k) continue;
    ++out.checked;
    int cmp = compare_to_bound(h.num_edges(), h.num_vertices(), k, r);
    if (cmp > 0) ++out.violations;
    if (cmp == 0) ++out.equalities;
  }
  return out;
}

}  // namespace berge::oracle
