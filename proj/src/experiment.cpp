#include "berge/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "berge/errors.hpp"
#include "berge/extractor.hpp"
#include "berge/generators.hpp"
#include "berge/io.hpp"
#include "berge/working_hypergraph.hpp"

namespace berge::experiment {

Suite suite_from_string(const std::string& name) {
  if (name == "exhaustive-r2") return Suite::kExhaustiveR2;
  if (name == "exhaustive-r3-n5") return Suite::kExhaustiveR3N5;
  if (name == "random") return Suite::kRandom;
  if (name == "bounds") return Suite::kBounds;
  throw PreconditionError("unknown suite", name);
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::kExhaustiveR2: return "exhaustive-r2";
    case Suite::kExhaustiveR3N5: return "exhaustive-r3-n5";
    case Suite::kRandom: return "random";
    case Suite::kBounds: return "bounds";
  }
  return "?";
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

using EdgeList = std::vector<VertexSet>;

std::vector<std::pair<VertexId, VertexId>> pairs_of(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

EdgeList edges_of_mask(const std::vector<VertexSet>& universe, std::uint64_t mask) {
  EdgeList out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1U) out.push_back(universe[i]);
  }
  return out;
}

// Smallest mask over all vertex relabelings.
std::uint64_t canonical_mask(std::uint64_t mask, const std::vector<std::vector<std::size_t>>& perm_maps) {
  std::uint64_t best = mask;
  for (const auto& map : perm_maps) {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (mask >> i & 1U) image |= std::uint64_t{1} << map[i];
    }
    best = std::min(best, image);
  }
  return best;
}

}  // namespace

std::vector<std::vector<VertexSet>> labeled_graphs(std::size_t n) {
  std::vector<VertexSet> universe;
  for (auto [a, b] : pairs_of(n)) universe.push_back({a, b});
  std::vector<EdgeList> out;
  const std::uint64_t total = std::uint64_t{1} << universe.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(edges_of_mask(universe, mask));
  return out;
}

std::vector<std::vector<VertexSet>> isomorphism_cover(std::size_t n) {
  if (n < 2 || n > 8) throw PreconditionError("isomorphism cover supports 2 <= n <= 8");
  const std::size_t base = n - 1;
  auto pairs = pairs_of(base);
  std::vector<std::vector<std::size_t>> perm_maps;
  std::vector<VertexId> perm(base);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  do {
    std::vector<std::size_t> map;
    for (auto [a, b] : pairs) {
      VertexId x = std::min(perm[a], perm[b]);
      VertexId y = std::max(perm[a], perm[b]);
      map.push_back(static_cast<std::size_t>(
          std::find(pairs.begin(), pairs.end(), std::pair{x, y}) - pairs.begin()));
    }
    perm_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> reps;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) reps.insert(canonical_mask(mask, perm_maps));

  std::vector<VertexSet> universe;
  for (auto [a, b] : pairs) universe.push_back({a, b});
  std::vector<EdgeList> out;
  const auto last = static_cast<VertexId>(base);
  for (std::uint64_t rep : reps) {
    EdgeList core = edges_of_mask(universe, rep);
    for (std::uint64_t hood = 0; hood < (std::uint64_t{1} << base); ++hood) {
      EdgeList g = core;
      for (VertexId u = 0; u < base; ++u) {
        if (hood >> u & 1U) g.push_back({u, last});
      }
      std::sort(g.begin(), g.end());
      out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

struct InstanceResult {
  std::size_t extractions = 0;
  std::size_t theorem2_runs = 0;
  std::size_t oracle_checks = 0;
  std::size_t replays = 0;
  std::size_t counterexamples = 0;
  std::size_t theorem2_failures = 0;
  std::vector<std::string> failures;
  std::map<std::string, std::size_t> branches;
  std::uint64_t digest = 0;
  double millis = 0;
};

using Maker = std::function<Hypergraph()>;

void count_branches(const ProofTrace& trace, std::map<std::string, std::size_t>& out) {
  for (const auto& rec : trace) ++out[std::string(record_kind(rec))];
}

std::string describe(const Hypergraph& h) {
  std::string s = "n=" + std::to_string(h.num_vertices()) + " edges=";
  for (const auto& e : h.edges()) {
    s += "{";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    s += "}";
  }
  return s;
}

// Runs the extractor (and oracle, replay, surplus-path checks) on one
// connected instance with e >= n.
InstanceResult check_instance(const Hypergraph& h, const Config& config) {
  InstanceResult out;
  const std::size_t r = *h.uniformity();
  std::string digest_text;
  auto fail = [&](const std::string& what) {
    ++out.counterexamples;
    out.failures.push_back(what + " on " + describe(h));
  };

  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    ++out.extractions;
    try {
      ExtractionResult res = extract(h, v);
      count_branches(res.trace, out.branches);
      io::Certificate cert = io::make_certificate(h, res);
      if (auto why = io::check_certificate(h, cert)) {
        fail("v=" + std::to_string(v) + ": certificate rejected: " + *why);
        continue;
      }
      if (res.length() != r + 1) {
        fail("v=" + std::to_string(v) + ": wrong length");
        continue;
      }
      digest_text += io::serialize_certificate(cert);
      if (config.replay_check) {
        ++out.replays;
        if (!(replay(h, v, res.trace) == res)) fail("v=" + std::to_string(v) + ": replay differs");
      }
      if (config.oracle_check) {
        ++out.oracle_checks;
        bool path = oracle::exists_path_from(h, v, r + 1, config.oracle_budget);
        bool cycle = oracle::exists_cycle_through(h, v, r + 1, config.oracle_budget);
        if (!path && !cycle) fail("v=" + std::to_string(v) + ": oracle finds neither object");
        if (res.is_path() && !path) fail("v=" + std::to_string(v) + ": oracle misses a path");
        if (!res.is_path() && !cycle) fail("v=" + std::to_string(v) + ": oracle misses a cycle");
      }
    } catch (const std::exception& e) {
      fail("v=" + std::to_string(v) + ": " + e.what());
    }
  }

  if (h.num_edges() > h.num_vertices()) {
    ++out.theorem2_runs;
    try {
      Theorem2Result t2 = extract_theorem2(h);
      count_branches(t2.trace, out.branches);
      io::Certificate cert = io::make_certificate(h, t2);
      if (auto why = io::check_certificate(h, cert)) {
        ++out.theorem2_failures;
        fail("theorem2: " + *why);
      } else if (t2.path.length() != r + 1) {
        ++out.theorem2_failures;
        fail("theorem2: wrong length");
      }
      digest_text += io::serialize_certificate(cert);
    } catch (const std::exception& e) {
      ++out.theorem2_failures;
      fail(std::string("theorem2: ") + e.what());
    }
  }
  out.digest = fnv1a(digest_text);
  return out;
}

bool eligible(const Hypergraph& h) {
  if (!h.uniformity() || h.num_edges() < h.num_vertices()) return false;
  return is_connected(WorkingHypergraph::from_root(h));
}

std::vector<Maker> exhaustive_r2(const Config& config) {
  std::vector<Maker> out;
  for (std::size_t n = 3; n <= config.max_n; ++n) {
    auto graphs = n <= 6 ? labeled_graphs(n) : isomorphism_cover(n);
    for (auto& g : graphs) {
      if (g.size() < n) continue;
      out.push_back([n, g = std::move(g)] { return Hypergraph::create(n, g); });
    }
  }
  return out;
}

std::vector<Maker> exhaustive_r3(const Config&) {
  std::vector<Maker> out;
  for (std::size_t n = 4; n <= 5; ++n) {
    auto triples = gen::all_subsets(n, 3);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << triples.size()); ++mask) {
      auto edges = edges_of_mask(triples, mask);
      if (edges.size() < n) continue;
      out.push_back([n, edges = std::move(edges)] { return Hypergraph::create(n, edges); });
    }
  }
  return out;
}

std::vector<Maker> random_instances(const Config& config) {
  std::vector<Maker> out;
  for (auto [r, n] : config.shapes) {
    for (std::size_t surplus : config.surpluses) {
      const std::size_t m = n + surplus;
      for (std::size_t i = 0; i < config.instances_per_config; ++i) {
        std::uint64_t seed = gen::mix_seed(config.seed, (r * 1000 + n) * 1000000 + m * 100000 + i);
        out.push_back([r, n, m, seed] { return gen::random_connected(r, n, m, seed); });
      }
    }
  }
  return out;
}

template <class Work>
void parallel_for(std::size_t count, unsigned threads, Work&& work) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
  for (auto& th : pool) th.join();
}

Report run_instances(const std::vector<Maker>& makers, const Config& config) {
  std::vector<InstanceResult> results(makers.size());
  std::vector<bool> used(makers.size(), false);
  parallel_for(makers.size(), config.threads, [&](std::size_t i) {
    auto start = std::chrono::steady_clock::now();
    InstanceResult res;
    try {
      Hypergraph h = makers[i]();
      if (!eligible(h)) return;
      res = check_instance(h, config);
    } catch (const std::exception& e) {
      res.counterexamples = 1;
      res.failures.push_back(std::string("instance setup: ") + e.what());
    }
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
    results[i] = std::move(res);
    used[i] = true;
  });

  Report report;
  std::string digest_bytes;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!used[i]) continue;
    const auto& res = results[i];
    ++report.instances;
    report.extractions += res.extractions;
    report.theorem2_runs += res.theorem2_runs;
    report.oracle_checks += res.oracle_checks;
    report.replays += res.replays;
    report.counterexamples += res.counterexamples;
    report.theorem2_failures += res.theorem2_failures;
    for (const auto& f : res.failures) {
      if (report.failures.size() < 20) report.failures.push_back(f);
    }
    for (const auto& [k, c] : res.branches) report.branches[k] += c;
    digest_bytes += std::to_string(res.digest) + ";";
    report.mean_instance_ms += res.millis;
    report.max_instance_ms = std::max(report.max_instance_ms, res.millis);
  }
  if (report.instances > 0) report.mean_instance_ms /= static_cast<double>(report.instances);
  report.digest = fnv1a(digest_bytes);
  return report;
}

Report run_bounds(const Config& config) {
  Report report;
  std::string digest_bytes;
  auto fail = [&](const std::string& what) {
    ++report.counterexamples;
    if (report.failures.size() < 20) report.failures.push_back(what);
  };

  // Disjoint K_{r+1}^(r): e = n and no Berge path of length r+1.
  for (std::size_t r = 2; r <= 5; ++r) {
    for (std::size_t b = 1; b <= 3; ++b) {
      Hypergraph h = gen::complete_blocks(r, r + 1, b);
      ++report.instances;
      ++report.tightness_checked;
      auto longest = oracle::longest_berge_path(h, config.oracle_budget).longest_path_length;
      digest_bytes += std::to_string(longest) + ";";
      if (h.num_edges() != h.num_vertices() || longest != r) {
        fail("complete_blocks(" + std::to_string(r) + ", " + std::to_string(r + 1) + ", " +
             std::to_string(b) + "): e=" + std::to_string(h.num_edges()) +
             " n=" + std::to_string(h.num_vertices()) + " longest=" + std::to_string(longest));
      }
      oracle::BoundCheck check = oracle::check_theorem1_bounds({h}, r + 1, r, config.oracle_budget);
      report.bound_checked += check.checked;
      report.bound_equalities += check.equalities;
      report.bound_violations += check.violations;
      if (check.equalities != 1) fail("complete_blocks does not meet e <= n with equality");
    }
  }

  // Disjoint K_k^(r) with k > r+1 > 3 meet (n/k) C(k, r) exactly.
  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> blocks = {
      {3, 5, 1}, {3, 5, 2}, {3, 6, 1}, {4, 6, 1}, {4, 6, 2}, {3, 7, 1}};
  for (auto [r, k, b] : blocks) {
    Hypergraph h = gen::complete_blocks(r, k, b);
    ++report.instances;
    auto longest = oracle::longest_berge_path(h, config.oracle_budget).longest_path_length;
    digest_bytes += std::to_string(longest) + ";";
    if (longest != k - 1) {
      fail("complete_blocks(" + std::to_string(r) + ", " + std::to_string(k) + ", " +
           std::to_string(b) + ") longest=" + std::to_string(longest));
    }
    oracle::BoundCheck check = oracle::check_theorem1_bounds({h}, k, r, config.oracle_budget);
    report.bound_checked += check.checked;
    report.bound_equalities += check.equalities;
    report.bound_violations += check.violations;
    if (check.checked != 1 || check.equalities != 1) {
      fail("K_" + std::to_string(k) + "^(" + std::to_string(r) + ") blocks miss the bound equality");
    }
  }

  // Random small instances: every applicable k with longest < k.
  gen::Rng pick(config.seed);
  for (std::size_t r = 2; r <= 4; ++r) {
    for (std::size_t n = r + 1; n <= 8; ++n) {
      const std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(oracle::binomial(n, r), 14));
      for (std::size_t trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + pick.below(cap);
        Hypergraph h = gen::random_surplus(r, n, m, gen::mix_seed(config.seed, trial * 100 + n * 10 + r));
        ++report.instances;
        auto longest = oracle::longest_berge_path(h, config.oracle_budget).longest_path_length;
        digest_bytes += std::to_string(longest) + ";";
        for (std::size_t k = 3; k <= n + 1; ++k) {
          if (oracle::bound_regime(k, r) == oracle::BoundRegime::kNone || longest >= k) continue;
          ++report.bound_checked;
          int cmp = oracle::compare_to_bound(h.num_edges(), h.num_vertices(), k, r);
          if (cmp == 0) ++report.bound_equalities;
          if (cmp > 0) {
            ++report.bound_violations;
            fail("bound violated for k=" + std::to_string(k) + " on " + describe(h));
          }
        }
      }
    }
  }
  report.digest = fnv1a(digest_bytes);
  return report;
}

}  // namespace

Report run(const Config& config) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  switch (config.suite) {
    case Suite::kExhaustiveR2:
      report = run_instances(exhaustive_r2(config), config);
      break;
    case Suite::kExhaustiveR3N5:
      report = run_instances(exhaustive_r3(config), config);
      break;
    case Suite::kRandom:
      report = run_instances(random_instances(config), config);
      break;
    case Suite::kBounds:
      report = run_bounds(config);
      break;
  }
  report.suite = to_string(config.suite);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format(const Report& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << '\n'
      << "instances: " << report.instances << '\n'
      << "extractions: " << report.extractions << '\n'
      << "theorem2 runs: " << report.theorem2_runs << '\n'
      << "oracle checks: " << report.oracle_checks << '\n'
      << "replays: " << report.replays << '\n'
      << "counterexamples: " << report.counterexamples << '\n';
  if (report.suite == "bounds") {
    out << "tightness checks: " << report.tightness_checked << '\n'
        << "bound checks: " << report.bound_checked << '\n'
        << "bound equalities: " << report.bound_equalities << '\n'
        << "bound violations: " << report.bound_violations << '\n';
  }
  if (!report.branches.empty()) {
    out << "branches:\n";
    for (const auto& [k, c] : report.branches) out << "  " << k << ": " << c << '\n';
  }
  out << "digest: " << std::hex << report.digest << std::dec << '\n'
      << "wall seconds: " << report.wall_seconds << '\n'
      << "mean instance ms: " << report.mean_instance_ms << '\n'
      << "max instance ms: " << report.max_instance_ms << '\n';
  for (const auto& f : report.failures) out << "FAIL " << f << '\n';
  return out.str();
}

}  // namespace berge::experiment
