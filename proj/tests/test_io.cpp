#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "berge/errors.hpp"
#include "berge/experiment.hpp"
#include "berge/extractor.hpp"
#include "berge/generators.hpp"
#include "berge/io.hpp"
#include "fixtures.hpp"

using namespace berge;

TEST_SUITE("hypergraph text") {
  TEST_CASE("parse with comments and blank lines") {
    auto h = io::parse_hypergraph_string("# K4(3)\n3 4 4\n0 1 2\n\n0 1 3\n# mid\n0 2 3\n1 2 3\n");
    CHECK(h == fixtures::k4_3());
  }

  TEST_CASE("serialize then parse is identity") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto h = gen::random_connected(3 + seed % 3, 9, 12, seed);
      auto text = io::serialize_hypergraph(h);
      CHECK(io::parse_hypergraph_string(text) == h);
      CHECK(io::serialize_hypergraph(io::parse_hypergraph_string(text)) == text);
    }
  }

  TEST_CASE("serialized form") {
    CHECK(io::serialize_hypergraph(fixtures::triangle()) == "2 3 3\n0 1\n1 2\n0 2\n");
    CHECK(io::serialize_hypergraph(fixtures::make(2, {})) == "0 2 0\n");
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(io::parse_hypergraph_string(""), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("3 4\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("3 4 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("3 4 1\n0 2 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("3 4 1\n0 1 9\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("3 4 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("3 4 1\n0 1 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("3 4 1\n0 x 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("1 4 1\n0\n"), ParseError);
    CHECK_THROWS_AS(io::parse_hypergraph_string("2 3 2\n0 1\n0 1\n"), InvalidHypergraph);
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("cycle certificate round-trips and verifies") {
    auto h = fixtures::k4_3();
    auto res = extract(h, 0);
    auto cert = io::make_certificate(h, res);
    CHECK(cert.kind == io::Certificate::Kind::kCycle);
    CHECK(cert.r == 3);
    CHECK(cert.length == 4);
    CHECK_FALSE(cert.start_vertex.has_value());
    CHECK(cert.edges.size() == 4);
    auto text = io::serialize_certificate(cert);
    auto back = io::parse_certificate(text);
    CHECK(io::serialize_certificate(back) == text);
    CHECK(back.trace == res.trace);
    CHECK_FALSE(io::check_certificate(h, back).has_value());
  }

  TEST_CASE("path certificate records its start") {
    auto h = fixtures::triangle_with_pendant();
    auto cert = io::make_certificate(h, extract(h, 3));
    CHECK(cert.kind == io::Certificate::Kind::kPath);
    CHECK(cert.start_vertex == 3);
    CHECK_FALSE(io::check_certificate(h, cert).has_value());
  }

  TEST_CASE("surplus extraction certificate") {
    auto h = gen::complete_blocks(2, 5, 1);
    auto cert = io::make_certificate(h, extract_theorem2(h));
    CHECK(cert.kind == io::Certificate::Kind::kPath);
    CHECK(cert.length == 3);
    CHECK_FALSE(io::check_certificate(h, cert).has_value());
  }

  TEST_CASE("tampering is rejected") {
    auto h = fixtures::triangle_with_pendant();
    auto good = io::make_certificate(h, extract(h, 3));

    auto bad_edge = good;
    bad_edge.edge_ids[1] = bad_edge.edge_ids[0];
    CHECK(io::check_certificate(h, bad_edge).has_value());

    auto missing = good;
    missing.edge_ids[2] = 17;
    CHECK(io::check_certificate(h, missing).has_value());

    auto long_claim = good;
    long_claim.length = 4;
    CHECK(io::check_certificate(h, long_claim).has_value());

    auto wrong_start = good;
    wrong_start.start_vertex = 0;
    CHECK(io::check_certificate(h, wrong_start).has_value());

    auto wrong_r = good;
    wrong_r.r = 3;
    CHECK(io::check_certificate(h, wrong_r).has_value());
  }

  TEST_CASE("malformed certificate text") {
    CHECK_THROWS_AS(io::parse_certificate("{"), ParseError);
    CHECK_THROWS_AS(io::parse_certificate(R"({"kind":"loop"})"), ParseError);
    CHECK_THROWS_AS(io::parse_certificate(R"({"kind":"path"})"), ParseError);
  }

  TEST_CASE("trace json round-trip covers every record type") {
    ProofTrace t = {BaseCaseR2{1},
                    CutVertex{2, 3},
                    VertexDeletion{0, 4, 5},
                    Shrink{6, 7},
                    AllSubsetsCycle{8},
                    DisconnectingEdgeDeleted{9, 10},
                    Lemma1{2},
                    RemoteCycleExtension{11},
                    Recurse{3, 7, 8, 12},
                    PromoteViaSpan{13},
                    PromoteViaOutsideEdge{14}};
    CHECK(io::trace_from_json(io::trace_to_json(t)) == t);
    CHECK_THROWS_AS(io::trace_from_json(R"([{"type":"Nope"}])"), ParseError);
  }

  TEST_CASE("serialization is byte-stable") {
    auto h = gen::random_connected(4, 9, 12, 5);
    auto a = io::serialize_certificate(io::make_certificate(h, extract(h, 2)));
    auto b = io::serialize_certificate(io::make_certificate(h, extract(h, 2)));
    CHECK(a == b);
    CHECK(a.back() == '\n');
  }
}

TEST_SUITE("files") {
  TEST_CASE("atomic write then read") {
    auto dir = std::filesystem::temp_directory_path() / "berge_io_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "h.txt";
    io::write_atomically(path, io::serialize_hypergraph(fixtures::k4_3()));
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    CHECK(io::read_hypergraph(path) == fixtures::k4_3());
    io::write_atomically(path, "2 2 1\n0 1\n");
    CHECK(io::read_file(path) == "2 2 1\n0 1\n");
    std::filesystem::remove_all(dir);
    CHECK_THROWS(io::read_hypergraph(dir / "missing.txt"));
  }
}

TEST_SUITE("experiment harness") {
  TEST_CASE("labeled graph enumeration") {
    CHECK(experiment::labeled_graphs(3).size() == 8);
    CHECK(experiment::labeled_graphs(4).size() == 64);
  }

  TEST_CASE("isomorphism cover reaches every class") {
    // 11 unlabeled graphs on 4 vertices; the cover at n=4 must hit each.
    auto cover = experiment::isomorphism_cover(4);
    std::set<std::vector<VertexSet>> canon;
    for (const auto& g : cover) {
      std::vector<VertexId> perm{0, 1, 2, 3};
      std::vector<VertexSet> best;
      bool first = true;
      do {
        std::vector<VertexSet> img;
        for (const auto& e : g) {
          VertexSet x{perm[e[0]], perm[e[1]]};
          std::sort(x.begin(), x.end());
          img.push_back(x);
        }
        std::sort(img.begin(), img.end());
        if (first || img < best) best = img;
        first = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      canon.insert(best);
    }
    CHECK(canon.size() == 11);
  }

  TEST_CASE("fnv1a reference value") {
    CHECK(experiment::fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(experiment::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  }

  TEST_CASE("suite names") {
    for (auto s : {experiment::Suite::kExhaustiveR2, experiment::Suite::kExhaustiveR3N5,
                   experiment::Suite::kRandom, experiment::Suite::kBounds}) {
      CHECK(experiment::suite_from_string(experiment::to_string(s)) == s);
    }
    CHECK_THROWS_AS(experiment::suite_from_string("x"), PreconditionError);
  }

  TEST_CASE("small random sweep is clean and thread-count independent") {
    experiment::Config c;
    c.suite = experiment::Suite::kRandom;
    c.instances_per_config = 5;
    auto seq = experiment::run(c);
    c.threads = 3;
    auto par = experiment::run(c);
    CHECK(seq.ok());
    CHECK(seq.instances == 90);
    CHECK(seq.digest == par.digest);
    CHECK(seq.branches == par.branches);
    CHECK(experiment::format(seq).find("counterexamples: 0") != std::string::npos);
  }
}
