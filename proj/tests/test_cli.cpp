#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "berge/generators.hpp"
#include "berge/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout and stderr merged
Run run(const std::string& args) {
  std::string cmd = std::string(BERGE_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("berge_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }

  std::string put(const std::string& name, const std::string& text) const {
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kK4 = "3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";

}  // namespace

TEST_CASE("extract writes a verified cycle for K4(3)") {
  TempDir t;
  auto h = t.put("k4.txt", kK4);
  auto out = t.path("c.json");
  auto r = run("extract -i " + h + " -v 0 -o " + out);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("kind") == "cycle");
  CHECK(j.at("length") == 4);

  auto v = run("verify " + h + " " + out);
  CHECK(v.code == 0);
  CHECK(v.out.find("ok") != std::string::npos);
}

TEST_CASE("extract to stdout from a pendant vertex gives a path") {
  TempDir t;
  auto h = t.put("h.txt", "2 4 4\n0 1\n1 2\n0 2\n0 3\n");
  auto r = run("extract -i " + h + " -v 3");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind") == "path");
  CHECK(j.at("start_vertex") == 3);
  CHECK(j.at("length") == 3);
}

TEST_CASE("surplus mode") {
  TempDir t;
  auto h = t.put("h.txt", berge::io::serialize_hypergraph(berge::gen::complete_blocks(3, 5, 1)));
  auto r = run("extract --mode theorem2 -i " + h);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind") == "path");
  CHECK(j.at("length") == 4);
  // K4(3) has e = n, not e > n
  CHECK(run("extract --mode theorem2 -i " + t.put("k4.txt", kK4)).code == 2);
}

TEST_CASE("precondition failures exit 2 and name the clause") {
  TempDir t;
  auto disc = run("extract -i " + t.put("d.txt", "2 6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n") + " -v 0");
  CHECK(disc.code == 2);
  CHECK(disc.out.find("not connected") != std::string::npos);

  auto tree = run("extract -i " + t.put("t.txt", "3 5 2\n0 1 2\n2 3 4\n") + " -v 0");
  CHECK(tree.code == 2);
  CHECK(tree.out.find("e < n") != std::string::npos);

  auto mixed = run("extract -i " + t.put("m.txt", "4 3 3\n0 1\n1 2 3\n0 3\n") + " -v 0");
  // the header fixes r, so a short edge never gets past the parser
  CHECK(mixed.code == 1);

  CHECK(run("extract -i " + t.put("k4.txt", kK4) + " -v 9").code == 2);
}

TEST_CASE("tampered certificates are rejected with exit 4") {
  TempDir t;
  auto h = t.put("k4.txt", kK4);
  auto good = t.path("c.json");
  REQUIRE(run("extract -i " + h + " -v 1 -o " + good).code == 0);
  auto j = nlohmann::json::parse(slurp(good));

  auto swapped = j;
  swapped["edge_ids"][0] = j["edge_ids"][1];
  auto a = run("verify " + h + " " + t.put("a.json", swapped.dump()));
  CHECK(a.code == 4);
  CHECK(a.out.find("rejected") != std::string::npos);

  auto longer = j;
  longer["length"] = 5;
  CHECK(run("verify " + h + " " + t.put("b.json", longer.dump())).code == 4);

  auto unknown = j;
  unknown["edge_ids"][2] = 42;
  CHECK(run("verify " + h + " " + t.put("c2.json", unknown.dump())).code == 4);
}

TEST_CASE("unreadable or malformed input exits 1") {
  TempDir t;
  CHECK(run("extract -i " + t.put("g.txt", "garbage") + " -v 0").code == 1);
  CHECK(run("extract -i " + t.path("missing.txt") + " -v 0").code == 1);
  CHECK(run("verify " + t.put("k4.txt", kK4) + " " + t.put("bad.json", "{")).code == 1);
  CHECK(run("extract --mode sideways -i " + t.path("k4.txt")).code == 1);
  CHECK(run("no-such-command").code == 1);
}

TEST_CASE("gen is deterministic and matches the library") {
  TempDir t;
  auto a = run("gen --family random_connected --r 3 --n 9 --m 12 --seed 7");
  auto b = run("gen --family random_connected --r 3 --n 9 --m 12 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == berge::io::serialize_hypergraph(berge::gen::random_connected(3, 9, 12, 7)));
  auto c = run("gen --family random_connected --r 3 --n 9 --m 12 --seed 8");
  CHECK(c.out != a.out);

  auto file = t.path("g.txt");
  CHECK(run("gen --family glued_blocks --r 3 --blocks 2 -o " + file).code == 0);
  CHECK(berge::io::read_hypergraph(file) == berge::gen::glued_blocks(3, 4, 2));
  CHECK(run("gen --family complete_blocks --r 3 --block-size 2 --blocks 1").code == 2);
}

TEST_CASE("oracle queries print json") {
  TempDir t;
  auto h = t.put("k4.txt", kK4);
  auto longest = run("oracle -i " + h + " --longest");
  CHECK(longest.code == 0);
  CHECK(nlohmann::json::parse(longest.out).at("longest_path_length") == 3);

  auto from = nlohmann::json::parse(run("oracle -i " + h + " --from 2 --k 4").out);
  CHECK(from.at("exists") == false);
  auto cyc = nlohmann::json::parse(run("oracle -i " + h + " --cycle-through 2 --k 4").out);
  CHECK(cyc.at("exists") == true);
}

TEST_CASE("oracle budget exhaustion exits 5") {
  TempDir t;
  auto h = t.put("k4.txt", kK4);
  auto r = run("oracle -i " + h + " --longest --budget 1");
  CHECK(r.code == 5);
  CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("experiment runs a small sweep") {
  auto r = run("experiment --suite random --instances 2 --no-oracle");
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexamples: 0") != std::string::npos);
  auto again = run("experiment --suite random --instances 2 --no-oracle --threads 2");
  auto digest = [](const std::string& s) { return s.substr(s.find("digest:"), 25); };
  CHECK(digest(r.out) == digest(again.out));
  CHECK(run("experiment --suite nope").code != 0);
}
