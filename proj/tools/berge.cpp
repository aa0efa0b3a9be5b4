#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <thread>

#include "berge/errors.hpp"
#include "berge/experiment.hpp"
#include "berge/extractor.hpp"
#include "berge/generators.hpp"
#include "berge/io.hpp"
#include "berge/oracle.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kPrecondition = 2;
constexpr int kDefect = 3;
constexpr int kRejected = 4;
constexpr int kBudget = 5;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BERGE_ORACLE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed BERGE_ORACLE_BUDGET=" << env << '\n';
    }
  }
  return berge::oracle::kDefaultBudget;
}

void emit(const std::string& output, const std::string& text) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    berge::io::write_atomically(output, text);
  }
}

nlohmann::json path_json(const berge::BergePath& p) {
  return {{"vertices", p.vertices}, {"edge_ids", p.edge_ids}, {"length", p.length()}};
}

nlohmann::json cycle_json(const berge::BergeCycle& c) {
  return {{"vertices", c.vertices}, {"edge_ids", c.edge_ids}, {"length", c.length()}};
}

struct ExtractArgs {
  std::string input;
  std::string output;
  std::uint32_t vertex = 0;
  std::string mode = "theorem3";
};

int cmd_extract(const ExtractArgs& a) {
  berge::Hypergraph h = berge::io::read_hypergraph(a.input);
  berge::io::Certificate cert;
  if (a.mode == "theorem3") {
    cert = berge::io::make_certificate(h, berge::extract(h, a.vertex));
  } else {
    cert = berge::io::make_certificate(h, berge::extract_theorem2(h));
  }
  if (auto why = berge::io::check_certificate(h, cert)) {
    throw berge::ProofDefect("emitted certificate does not verify: " + *why);
  }
  emit(a.output, berge::io::serialize_certificate(cert));
  return kOk;
}

int cmd_verify(const std::string& hypergraph_file, const std::string& certificate_file) {
  berge::Hypergraph h = berge::io::read_hypergraph(hypergraph_file);
  berge::io::Certificate cert = berge::io::parse_certificate(berge::io::read_file(certificate_file));
  if (auto why = berge::io::check_certificate(h, cert)) {
    std::cout << "rejected: " << *why << '\n';
    return kRejected;
  }
  std::cout << "ok: " << (cert.kind == berge::io::Certificate::Kind::kPath ? "path" : "cycle")
            << " of length " << cert.length << '\n';
  return kOk;
}

struct OracleArgs {
  std::string input;
  bool longest = false;
  std::optional<std::uint32_t> from;
  std::optional<std::uint32_t> cycle_through;
  std::optional<std::size_t> k;
  std::uint64_t budget = 0;
};

int cmd_oracle(const OracleArgs& a) {
  berge::Hypergraph h = berge::io::read_hypergraph(a.input);
  nlohmann::json out;
  int modes = int(a.longest) + int(a.from.has_value()) + int(a.cycle_through.has_value());
  if (modes != 1) throw CLI::ValidationError("oracle", "pick exactly one of --longest, --from, --cycle-through");
  if ((a.from || a.cycle_through) && !a.k) throw CLI::ValidationError("oracle", "--k is required");
  if (a.longest) {
    auto report = berge::oracle::longest_berge_path(h, a.budget);
    out = {{"query", "longest"}, {"longest_path_length", report.longest_path_length},
           {"nodes", report.nodes}};
    if (report.witness) out["witness"] = path_json(*report.witness);
  } else if (a.from) {
    auto path = berge::oracle::find_path_from(h, *a.from, *a.k, a.budget);
    out = {{"query", "from"}, {"vertex", *a.from}, {"k", *a.k}, {"exists", path.has_value()}};
    if (path) out["witness"] = path_json(*path);
  } else {
    auto cycle = berge::oracle::find_cycle_through(h, *a.cycle_through, *a.k, a.budget);
    out = {{"query", "cycle-through"}, {"vertex", *a.cycle_through}, {"k", *a.k},
           {"exists", cycle.has_value()}};
    if (cycle) out["witness"] = cycle_json(*cycle);
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

struct GenArgs {
  std::string family;
  std::size_t r = 3;
  std::size_t block_size = 0;
  std::size_t blocks = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  using berge::gen::Family;
  Family f = berge::gen::family_from_string(a.family);
  std::optional<berge::Hypergraph> h;
  switch (f) {
    case Family::kCompleteBlocks:
      h = berge::gen::complete_blocks(a.r, a.block_size ? a.block_size : a.r + 1, a.blocks);
      break;
    case Family::kGluedBlocks:
      h = berge::gen::glued_blocks(a.r, a.block_size ? a.block_size : a.r + 1, a.blocks);
      break;
    case Family::kRandomConnected:
      h = berge::gen::random_connected(a.r, a.n, a.m, a.seed);
      break;
    case Family::kRandomSurplus:
      h = berge::gen::random_surplus(a.r, a.n, a.m, a.seed);
      break;
  }
  emit(a.output, berge::io::serialize_hypergraph(*h));
  return kOk;
}

struct ExperimentArgs {
  std::string suite;
  berge::experiment::Config config;
  bool no_oracle = false;
  bool no_replay = false;
};

int cmd_experiment(ExperimentArgs a) {
  a.config.suite = berge::experiment::suite_from_string(a.suite);
  a.config.oracle_check = !a.no_oracle;
  a.config.replay_check = !a.no_replay;
  if (a.config.threads == 0) a.config.threads = std::max(1U, std::thread::hardware_concurrency());
  auto report = berge::experiment::run(a.config);
  std::cout << berge::experiment::format(report);
  return report.ok() ? kOk : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge path and cycle extraction in uniform hypergraphs"};
  app.require_subcommand(1);

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "extract a certificate from a hypergraph file");
  extract->add_option("--input,-i", ex.input, "hypergraph file")->required();
  extract->add_option("--vertex,-v", ex.vertex, "start vertex (theorem3 mode)");
  extract->add_option("--mode", ex.mode, "theorem3: path from v or cycle through v; theorem2: path only")
      ->check(CLI::IsMember({"theorem3", "theorem2"}));
  extract->add_option("--output,-o", ex.output, "certificate file (default stdout)");

  std::string verify_graph, verify_cert;
  auto* verify = app.add_subcommand("verify", "check a certificate against a hypergraph file");
  verify->add_option("hypergraph", verify_graph)->required();
  verify->add_option("certificate", verify_cert)->required();

  OracleArgs orc;
  orc.budget = default_budget();
  auto* oracle = app.add_subcommand("oracle", "exhaustive search");
  oracle->add_option("--input,-i", orc.input, "hypergraph file")->required();
  oracle->add_flag("--longest", orc.longest, "longest Berge path");
  oracle->add_option("--from", orc.from, "Berge path of length k from this vertex");
  oracle->add_option("--cycle-through", orc.cycle_through, "Berge cycle of length k through this vertex");
  oracle->add_option("--k", orc.k, "length");
  oracle->add_option("--budget", orc.budget, "search node budget (env BERGE_ORACLE_BUDGET)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a hypergraph");
  gen_cmd->add_option("--family", gen.family, "complete_blocks | glued_blocks | random_connected | random_surplus")
      ->required();
  gen_cmd->add_option("--r", gen.r, "uniformity");
  gen_cmd->add_option("--block-size", gen.block_size, "block size (default r+1)");
  gen_cmd->add_option("--blocks", gen.blocks, "number of blocks");
  gen_cmd->add_option("--n", gen.n, "vertices");
  gen_cmd->add_option("--m", gen.m, "edges");
  gen_cmd->add_option("--seed", gen.seed, "seed");
  gen_cmd->add_option("--output,-o", gen.output, "output file (default stdout)");

  ExperimentArgs exp;
  exp.config.oracle_budget = default_budget();
  auto* experiment = app.add_subcommand("experiment", "run a verification sweep");
  experiment->add_option("--suite", exp.suite, "exhaustive-r2 | exhaustive-r3-n5 | random | bounds")
      ->required();
  experiment->add_option("--seed", exp.config.seed, "seed");
  experiment->add_option("--threads", exp.config.threads, "worker threads (0 = all cores)");
  experiment->add_option("--max-n", exp.config.max_n, "exhaustive-r2: largest n");
  experiment->add_option("--instances", exp.config.instances_per_config, "random: instances per (r, n, m)");
  experiment->add_option("--budget", exp.config.oracle_budget, "oracle node budget");
  experiment->add_flag("--no-oracle", exp.no_oracle, "skip the oracle cross-check");
  experiment->add_flag("--no-replay", exp.no_replay, "skip trace replay");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  try {
    if (*extract) return cmd_extract(ex);
    if (*verify) return cmd_verify(verify_graph, verify_cert);
    if (*oracle) return cmd_oracle(orc);
    if (*gen_cmd) return cmd_gen(gen);
    if (*experiment) return cmd_experiment(exp);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kIoError;
  } catch (const berge::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const berge::ProofDefect& e) {
    std::cerr << "defect: " << e.what() << '\n';
    return kDefect;
  } catch (const berge::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const berge::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const berge::InvalidHypergraph& e) {
    std::cerr << "invalid hypergraph: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kIoError;
}
