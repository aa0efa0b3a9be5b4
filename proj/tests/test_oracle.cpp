#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>

#include "berge/certificate.hpp"
#include "berge/errors.hpp"
#include "berge/generators.hpp"
#include "berge/oracle.hpp"
#include "fixtures.hpp"

using namespace berge;
using fixtures::make;

namespace {

// Second enumerator: breadth-first over (last vertex, used vertices, used
// edges) bitmask states. Shares no code with the backtracking oracle.
struct BitmaskOracle {
  const Hypergraph& h;

  using State = std::tuple<VertexId, std::uint32_t, std::uint32_t>;

  std::vector<std::set<State>> layers(std::optional<VertexId> start) const {
    std::vector<std::set<State>> out(1);
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      if (!start || *start == v) out[0].insert({v, 1U << v, 0U});
    }
    while (true) {
      std::set<State> next;
      for (auto [last, vmask, emask] : out.back()) {
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
          if (emask >> e & 1U) continue;
          if (!h.contains(e, last)) continue;
          for (VertexId w : h.edge(e)) {
            if (vmask >> w & 1U) continue;
            next.insert({w, vmask | 1U << w, emask | 1U << e});
          }
        }
      }
      if (next.empty()) return out;
      out.push_back(std::move(next));
    }
  }

  std::size_t longest() const { return layers(std::nullopt).size() - 1; }
  std::size_t longest_from(VertexId v) const { return layers(v).size() - 1; }

  bool cycle_through(VertexId v, std::size_t k) const {
    auto ls = layers(v);
    if (ls.size() < k) return false;
    // paths of length k-1 from v that can close with an unused edge
    for (auto [last, vmask, emask] : ls[k - 1]) {
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (emask >> e & 1U) continue;
        if (h.contains(e, last) && h.contains(e, v)) return true;
      }
    }
    return false;
  }
};

Hypergraph random_small(std::uint64_t seed) {
  std::size_t r = 2 + seed % 2;
  std::size_t n = 4 + seed % 2;
  std::size_t cap = static_cast<std::size_t>(oracle::binomial(n, r));
  std::size_t m = 1 + (seed / 2) % cap;
  return gen::random_surplus(r, n, m, seed);
}

}  // namespace

TEST_SUITE("longest_berge_path") {
  TEST_CASE("complete blocks on r+1 vertices have longest path r") {
    for (std::size_t r = 2; r <= 5; ++r) {
      auto h = gen::complete_blocks(r, r + 1, 1);
      auto rep = oracle::longest_berge_path(h);
      CHECK(rep.longest_path_length == r);
      REQUIRE(rep.witness);
      CHECK(verify_path(h, *rep.witness));
      CHECK(rep.witness->length() == r);
    }
  }

  TEST_CASE("single edge") {
    auto h = make(3, {{0, 1, 2}});
    CHECK(oracle::longest_berge_path(h).longest_path_length == 1);
  }

  TEST_CASE("path graph") {
    CHECK(oracle::longest_berge_path(fixtures::path_graph(4)).longest_path_length == 3);
  }

  TEST_CASE("edgeless") {
    auto rep = oracle::longest_berge_path(make(2, {}));
    CHECK(rep.longest_path_length == 0);
  }

  TEST_CASE("budget exhaustion is explicit") {
    auto h = gen::complete_blocks(3, 7, 1);
    CHECK_THROWS_AS(oracle::longest_berge_path(h, 10), BudgetExceeded);
    CHECK_THROWS_AS(oracle::longest_berge_path(h, 0), PreconditionError);
  }
}

TEST_SUITE("exists") {
  TEST_CASE("triangle with pendant") {
    auto h = fixtures::triangle_with_pendant();
    CHECK_FALSE(oracle::exists_path_from(h, 0, 3));
    CHECK(oracle::exists_path_from(h, 3, 3));
    auto w = oracle::find_path_from(h, 3, 3);
    REQUIRE(w);
    CHECK(verify_path(h, *w));
    CHECK(w->start() == 3);
  }

  TEST_CASE("complete 3-uniform on four vertices") {
    auto h = fixtures::k4_3();
    for (VertexId v = 0; v < 4; ++v) {
      CHECK_FALSE(oracle::exists_path_from(h, v, 4));
      auto c = oracle::find_cycle_through(h, v, 4);
      REQUIRE(c);
      CHECK(verify_cycle(h, *c));
      CHECK(std::find(c->vertices.begin(), c->vertices.end(), v) != c->vertices.end());
    }
  }

  TEST_CASE("trees have no cycles") {
    auto h = fixtures::path_graph(6);
    for (VertexId v = 0; v < 6; ++v) {
      for (std::size_t k = 3; k <= 6; ++k) CHECK_FALSE(oracle::exists_cycle_through(h, v, k));
    }
  }

  TEST_CASE("five-cycle") {
    CHECK(oracle::exists_cycle_through(fixtures::cycle_graph(5), 0, 5));
  }
}

TEST_SUITE("double entry") {
  TEST_CASE("agrees with a bitmask enumerator for n <= 5") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      auto h = random_small(seed);
      BitmaskOracle second{h};
      CHECK(oracle::longest_berge_path(h).longest_path_length == second.longest());
      std::size_t r = *h.uniformity();
      auto prof = oracle::profile(h, r + 1);
      for (VertexId v = 0; v < h.num_vertices(); ++v) {
        CHECK(prof.per_vertex.at(v).longest_from == second.longest_from(v));
        CHECK(prof.per_vertex.at(v).cycle_through == second.cycle_through(v, r + 1));
        for (std::size_t k = 2; k <= h.num_vertices(); ++k) {
          CHECK(oracle::exists_cycle_through(h, v, k) == second.cycle_through(v, k));
        }
      }
    }
  }
}

TEST_SUITE("properties") {
  TEST_CASE("adding an edge never shortens the longest path") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      auto h = random_small(seed);
      std::size_t before = oracle::longest_berge_path(h).longest_path_length;
      auto all = gen::all_subsets(h.num_vertices(), *h.uniformity());
      for (const auto& extra : all) {
        if (std::find(h.edges().begin(), h.edges().end(), extra) != h.edges().end()) continue;
        auto edges = h.edges();
        edges.push_back(extra);
        auto g = make(h.num_vertices(), edges);
        CHECK(oracle::longest_berge_path(g).longest_path_length >= before);
        break;
      }
    }
  }

  TEST_CASE("prefix closure") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      auto h = random_small(seed);
      for (VertexId v = 0; v < h.num_vertices(); ++v) {
        for (std::size_t k = 2; k <= h.num_vertices(); ++k) {
          if (oracle::exists_path_from(h, v, k)) CHECK(oracle::exists_path_from(h, v, k - 1));
        }
      }
    }
  }
}

TEST_SUITE("bounds") {
  TEST_CASE("regimes") {
    CHECK(oracle::bound_regime(5, 3) == oracle::BoundRegime::kLongPaths);
    CHECK(oracle::bound_regime(4, 2) == oracle::BoundRegime::kNone);  // needs r+1 > 3
    CHECK(oracle::bound_regime(3, 4) == oracle::BoundRegime::kShortPaths);
    CHECK(oracle::bound_regime(4, 3) == oracle::BoundRegime::kPathLengthRPlusOne);
    CHECK(oracle::bound_regime(2, 3) == oracle::BoundRegime::kNone);
  }

  TEST_CASE("compare_to_bound is exact in integers") {
    CHECK(oracle::compare_to_bound(20, 10, 5, 3) == 0);
    CHECK(oracle::compare_to_bound(21, 10, 5, 3) > 0);
    CHECK(oracle::compare_to_bound(19, 10, 5, 3) < 0);
    CHECK(oracle::compare_to_bound(4, 4, 4, 3) == 0);
    // n(k-1)/(r+1) with n=10, k=3, r=4: 4
    CHECK(oracle::compare_to_bound(4, 10, 3, 4) == 0);
    CHECK(oracle::compare_to_bound(5, 10, 3, 4) > 0);
  }

  TEST_CASE("binomial") {
    CHECK(oracle::binomial(5, 3) == 10);
    CHECK(oracle::binomial(7, 0) == 1);
    CHECK(oracle::binomial(3, 5) == 0);
  }

  TEST_CASE("disjoint complete blocks on five vertices meet the long-path bound") {
    auto h = gen::complete_blocks(3, 5, 2);
    CHECK(h.num_vertices() == 10);
    CHECK(h.num_edges() == 20);
    CHECK(oracle::longest_berge_path(h).longest_path_length == 4);
    auto check = oracle::check_theorem1_bounds({h}, 5, 3);
    CHECK(check.checked == 1);
    CHECK(check.equalities == 1);
    CHECK(check.violations == 0);
  }

  TEST_CASE("complete block on r+1 vertices meets e <= n") {
    auto check = oracle::check_theorem1_bounds({fixtures::k4_3()}, 4, 3);
    CHECK(check.equalities == 1);
  }

  TEST_CASE("random sub-bound instances never violate") {
    std::vector<Hypergraph> family;
    for (std::uint64_t seed = 0; seed < 80; ++seed) family.push_back(gen::random_surplus(3, 7, 1 + seed % 12, seed));
    for (std::size_t k : {4, 5, 6}) {
      auto check = oracle::check_theorem1_bounds(family, k, 3);
      CHECK(check.violations == 0);
    }
  }

  TEST_CASE("no regime") {
    CHECK_THROWS_AS(oracle::check_theorem1_bounds({fixtures::triangle()}, 2, 2), PreconditionError);
  }
}
