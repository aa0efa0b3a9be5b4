#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "berge/oracle.hpp"

namespace berge::experiment {

enum class Suite { kExhaustiveR2, kExhaustiveR3N5, kRandom, kBounds };

Suite suite_from_string(const std::string& name);
std::string to_string(Suite s);

struct Config {
  Suite suite = Suite::kExhaustiveR2;
  std::uint64_t seed = 1;
  /// exhaustive-r2: graphs on up to this many vertices (labeled up to 6,
  /// one representative per isomorphism class of the 6-vertex part at 7).
  std::size_t max_n = 7;
  /// random: instances per (r, n, m).
  std::size_t instances_per_config = 10000;
  std::vector<std::pair<std::size_t, std::size_t>> shapes = {{3, 6}, {3, 7}, {3, 8},
                                                             {4, 6}, {4, 7}, {5, 7}};
  /// random: m = n + surplus.
  std::vector<std::size_t> surpluses = {0, 1, 3};
  unsigned threads = 1;
  std::uint64_t oracle_budget = oracle::kDefaultBudget;
  /// Cross-check every extraction against the exhaustive oracle.
  bool oracle_check = true;
  /// Replay every trace and compare outcomes.
  bool replay_check = true;
};

struct Report {
  std::string suite;
  std::size_t instances = 0;
  std::size_t extractions = 0;
  std::size_t theorem2_runs = 0;
  std::size_t oracle_checks = 0;
  std::size_t replays = 0;
  std::size_t counterexamples = 0;
  std::size_t theorem2_failures = 0;
  std::vector<std::string> failures;  // first few, for diagnosis
  std::map<std::string, std::size_t> branches;

  // bounds suite
  std::size_t tightness_checked = 0;
  std::size_t bound_checked = 0;
  std::size_t bound_equalities = 0;
  std::size_t bound_violations = 0;

  /// FNV-1a over every certificate and trace in instance order.
  std::uint64_t digest = 0;
  double wall_seconds = 0;
  double mean_instance_ms = 0;
  double max_instance_ms = 0;

  bool ok() const { return counterexamples == 0; }
};

Report run(const Config& config);

std::string format(const Report& report);

/// Every labeled simple graph on n vertices, as edge lists.
std::vector<std::vector<VertexSet>> labeled_graphs(std::size_t n);

/// Graphs on n vertices covering every isomorphism class: representatives
/// of (n-1)-vertex classes extended by every neighbourhood of vertex n-1.
std::vector<std::vector<VertexSet>> isomorphism_cover(std::size_t n);

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace berge::experiment
