#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berge/errors.hpp"
#include "berge/extractor.hpp"
#include "berge/generators.hpp"
#include "berge/oracle.hpp"
#include "berge/working_hypergraph.hpp"
#include "fixtures.hpp"

using namespace berge;

TEST_SUITE("rng") {
  TEST_CASE("stream is the standard 64-bit Mersenne Twister") {
    gen::Rng rng(5489);
    CHECK(rng.next() == 14514284786278117030ULL);
    for (int i = 1; i < 9999; ++i) rng.next();
    CHECK(rng.next() == 9981545732273789042ULL);
  }

  TEST_CASE("below stays in range and is seed-determined") {
    gen::Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
      auto x = a.below(7);
      CHECK(x < 7);
      CHECK(x == b.below(7));
    }
    CHECK_THROWS_AS(a.below(0), PreconditionError);
  }

  TEST_CASE("mix_seed separates salts") {
    CHECK(gen::mix_seed(1, 0) != gen::mix_seed(1, 1));
    CHECK(gen::mix_seed(1, 0) != gen::mix_seed(2, 0));
    CHECK(gen::mix_seed(9, 9) == gen::mix_seed(9, 9));
  }

  TEST_CASE("family names round-trip") {
    for (auto f : {gen::Family::kCompleteBlocks, gen::Family::kGluedBlocks, gen::Family::kRandomConnected,
                   gen::Family::kRandomSurplus}) {
      CHECK(gen::family_from_string(gen::to_string(f)) == f);
    }
    CHECK_THROWS_AS(gen::family_from_string("nope"), PreconditionError);
  }
}

TEST_SUITE("complete_blocks") {
  TEST_CASE("two blocks of K_4^(3)") {
    auto h = gen::complete_blocks(3, 4, 2);
    CHECK(h.num_vertices() == 8);
    CHECK(h.num_edges() == 8);
    CHECK(oracle::longest_berge_path(h).longest_path_length == 3);
  }

  TEST_CASE("triangle") {
    CHECK(gen::complete_blocks(2, 3, 1) == fixtures::make(3, {{0, 1}, {0, 2}, {1, 2}}));
  }

  TEST_CASE("binomial edge count") {
    auto h = gen::complete_blocks(3, 5, 1);
    CHECK(h.num_vertices() == 5);
    CHECK(h.num_edges() == 10);
  }

  TEST_CASE("e = n and longest path r") {
    for (std::size_t r = 2; r <= 5; ++r) {
      for (std::size_t b = 1; b <= 2; ++b) {
        auto h = gen::complete_blocks(r, r + 1, b);
        CHECK(h.num_edges() == h.num_vertices());
        CHECK(h.num_vertices() == b * (r + 1));
        CHECK(oracle::longest_berge_path(h).longest_path_length == r);
      }
    }
  }

  TEST_CASE("parameter violations") {
    CHECK_THROWS_AS(gen::complete_blocks(3, 2, 1), PreconditionError);
    CHECK_THROWS_AS(gen::complete_blocks(3, 4, 0), PreconditionError);
    CHECK_THROWS_AS(gen::complete_blocks(1, 4, 1), PreconditionError);
  }
}

TEST_SUITE("glued_blocks") {
  TEST_CASE("two K_4^(3) glued") {
    auto h = gen::glued_blocks(3, 4, 2);
    CHECK(h.num_vertices() == 7);
    CHECK(h.num_edges() == 8);
    CHECK(cut_vertices(WorkingHypergraph::from_root(h)) == VertexSet{3});
  }

  TEST_CASE("one block is a complete block") {
    CHECK(gen::glued_blocks(3, 5, 1) == gen::complete_blocks(3, 5, 1));
  }

  TEST_CASE("counts and cut vertices") {
    for (std::size_t r = 2; r <= 4; ++r) {
      for (std::size_t bs = r + 1; bs <= r + 2; ++bs) {
        for (std::size_t b = 1; b <= 4; ++b) {
          auto h = gen::glued_blocks(r, bs, b);
          CHECK(h.num_edges() == b * oracle::binomial(bs, r));
          CHECK(h.num_vertices() == b * bs - (b - 1));
          CHECK(cut_vertices(WorkingHypergraph::from_root(h)).size() == b - 1);
        }
      }
    }
  }
}

TEST_SUITE("random_connected") {
  TEST_CASE("e = n instance extracts from every vertex") {
    auto h = gen::random_connected(3, 6, 6, 1);
    CHECK(h.num_edges() == 6);
    CHECK(is_connected(WorkingHypergraph::from_root(h)));
    for (VertexId v = 0; v < 6; ++v) {
      auto res = extract(h, v);
      CHECK(res.length() == 4);
    }
  }

  TEST_CASE("all subsets regardless of seed") {
    for (std::uint64_t seed : {0, 1, 99}) {
      auto h = gen::random_connected(3, 6, 20, seed);
      CHECK(h == gen::complete_blocks(3, 6, 1));
    }
  }

  TEST_CASE("deterministic per seed") {
    CHECK(gen::random_connected(4, 9, 14, 3) == gen::random_connected(4, 9, 14, 3));
    CHECK_FALSE(gen::random_connected(4, 9, 14, 3) == gen::random_connected(4, 9, 14, 4));
  }

  TEST_CASE("simple, uniform, connected, canonical order") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      std::size_t r = 2 + seed % 4;
      std::size_t n = r + 1 + seed % 6;
      std::size_t lo = (n - 1 + r - 2) / (r - 1);
      std::size_t hi = std::min<std::uint64_t>(oracle::binomial(n, r), lo + 8);
      std::size_t m = lo + seed % (hi - lo + 1);
      auto h = gen::random_connected(r, n, m, seed);
      CHECK(h.num_edges() == m);
      CHECK(h.uniformity() == r);
      CHECK(is_connected(WorkingHypergraph::from_root(h)));
      CHECK(std::is_sorted(h.edges().begin(), h.edges().end()));
    }
  }

  TEST_CASE("infeasible parameters") {
    CHECK_THROWS_AS(gen::random_connected(3, 7, 2, 0), PreconditionError);
    CHECK_THROWS_AS(gen::random_connected(3, 5, 11, 0), PreconditionError);
    CHECK_THROWS_AS(gen::random_connected(3, 2, 1, 0), PreconditionError);
  }
}

TEST_SUITE("random_surplus") {
  TEST_CASE("exact edge count, uniform, deterministic") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto h = gen::random_surplus(3, 7, 1 + seed % 35, seed);
      CHECK(h.num_edges() == 1 + seed % 35);
      CHECK(h.uniformity() == 3);
      CHECK(h == gen::random_surplus(3, 7, 1 + seed % 35, seed));
    }
  }
}

TEST_SUITE("all_subsets") {
  TEST_CASE("lexicographic") {
    auto s = gen::all_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == VertexSet{0, 1});
    CHECK(s[1] == VertexSet{0, 2});
    CHECK(s.back() == VertexSet{2, 3});
    CHECK(std::is_sorted(s.begin(), s.end()));
  }
}
