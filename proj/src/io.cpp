#include "berge/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "berge/errors.hpp"

namespace berge::io {

using nlohmann::json;

namespace {

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::uint64_t> numbers(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<std::uint64_t> out;
  std::string token;
  while (ss >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18) {
      throw ParseError("line " + std::to_string(line_no) + ": bad token '" + token + "'");
    }
    out.push_back(std::stoull(token));
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::vector<std::uint64_t>> header;
  std::vector<VertexSet> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    auto nums = numbers(line, line_no);
    if (!header) {
      if (nums.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": header needs r n m");
      header = nums;
      continue;
    }
    const std::uint64_t r = (*header)[0];
    const std::uint64_t n = (*header)[1];
    if (edges.size() == (*header)[2]) {
      throw ParseError("line " + std::to_string(line_no) + ": more edges than declared");
    }
    if (nums.size() != r) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(r) +
                       " vertices");
    }
    VertexSet e;
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (nums[i] >= n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex " + std::to_string(nums[i]) +
                         " >= n");
      }
      if (i > 0 && nums[i] <= nums[i - 1]) {
        throw ParseError("line " + std::to_string(line_no) + ": vertices not strictly ascending");
      }
      e.push_back(static_cast<VertexId>(nums[i]));
    }
    edges.push_back(std::move(e));
  }
  if (!header) throw ParseError("missing header");
  if (edges.size() != (*header)[2]) {
    throw ParseError("declared " + std::to_string((*header)[2]) + " edges, found " +
                     std::to_string(edges.size()));
  }
  if ((*header)[0] < 2 && !edges.empty()) throw ParseError("r must be at least 2");
  return Hypergraph::create((*header)[1], std::move(edges));
}

Hypergraph parse_hypergraph_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_hypergraph(ss);
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::size_t r = 0;
  if (h.num_edges() > 0) {
    if (!h.uniformity()) throw PreconditionError("not uniform");
    r = *h.uniformity();
  }
  std::ostringstream out;
  out << r << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

namespace {

json record_to_json(const TraceRecord& rec) {
  json j;
  j["type"] = std::string(record_kind(rec));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BaseCaseR2>) {
          j["root"] = x.root;
        } else if constexpr (std::is_same_v<T, CutVertex>) {
          j["cut"] = x.cut;
          j["component"] = x.component;
        } else if constexpr (std::is_same_v<T, VertexDeletion>) {
          j["vertex"] = x.vertex;
          j["edge"] = x.edge;
          j["component"] = x.component;
        } else if constexpr (std::is_same_v<T, Shrink>) {
          j["edge"] = x.edge;
          j["removed"] = x.removed;
        } else if constexpr (std::is_same_v<T, AllSubsetsCycle>) {
          j["edge"] = x.edge;
        } else if constexpr (std::is_same_v<T, DisconnectingEdgeDeleted>) {
          j["edge"] = x.edge;
          j["component"] = x.component;
        } else if constexpr (std::is_same_v<T, Lemma1>) {
          j["type"] = "Lemma1";
          j["case"] = x.which;
        } else if constexpr (std::is_same_v<T, RemoteCycleExtension>) {
          j["landing"] = x.landing;
        } else if constexpr (std::is_same_v<T, Recurse>) {
          j["r"] = x.r;
          j["n"] = x.n;
          j["m"] = x.m;
          j["root"] = x.root;
        } else if constexpr (std::is_same_v<T, PromoteViaSpan>) {
          j["start"] = x.start;
        } else if constexpr (std::is_same_v<T, PromoteViaOutsideEdge>) {
          j["edge"] = x.edge;
        }
      },
      rec);
  return j;
}

TraceRecord record_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  auto u = [&](const char* key) { return j.at(key).get<std::uint32_t>(); };
  auto z = [&](const char* key) { return j.at(key).get<std::size_t>(); };
  if (type == "BaseCaseR2") return BaseCaseR2{u("root")};
  if (type == "CutVertex") return CutVertex{u("cut"), u("component")};
  if (type == "VertexDeletion") return VertexDeletion{u("vertex"), u("edge"), u("component")};
  if (type == "Shrink") return Shrink{u("edge"), u("removed")};
  if (type == "AllSubsetsCycle") return AllSubsetsCycle{u("edge")};
  if (type == "DisconnectingEdgeDeleted") return DisconnectingEdgeDeleted{u("edge"), u("component")};
  if (type == "Lemma1") return Lemma1{j.at("case").get<int>()};
  if (type == "RemoteCycleExtension") return RemoteCycleExtension{u("landing")};
  if (type == "Recurse") return Recurse{z("r"), z("n"), z("m"), u("root")};
  if (type == "PromoteViaSpan") return PromoteViaSpan{u("start")};
  if (type == "PromoteViaOutsideEdge") return PromoteViaOutsideEdge{u("edge")};
  throw ParseError("unknown trace record type '" + type + "'");
}

json trace_json(const ProofTrace& trace) {
  json arr = json::array();
  for (const auto& rec : trace) arr.push_back(record_to_json(rec));
  return arr;
}

ProofTrace trace_from(const json& arr) {
  ProofTrace out;
  for (const auto& j : arr) out.push_back(record_from_json(j));
  return out;
}

template <class Cert>
void fill(Certificate& c, const Hypergraph& h, const Cert& cert) {
  c.r = h.uniformity().value_or(0);
  c.length = cert.length();
  c.vertices = cert.vertices;
  c.edge_ids = cert.edge_ids;
  for (EdgeId id : cert.edge_ids) c.edges.push_back(h.edges().at(id));
}

}  // namespace

Certificate make_certificate(const Hypergraph& h, const ExtractionResult& result) {
  Certificate c;
  if (result.is_path()) {
    c.kind = Certificate::Kind::kPath;
    fill(c, h, result.path());
    c.start_vertex = result.path().start();
  } else {
    c.kind = Certificate::Kind::kCycle;
    fill(c, h, result.cycle());
  }
  c.trace = result.trace;
  return c;
}

Certificate make_certificate(const Hypergraph& h, const Theorem2Result& result) {
  Certificate c;
  c.kind = Certificate::Kind::kPath;
  fill(c, h, result.path);
  c.start_vertex = result.path.start();
  c.trace = result.trace;
  return c;
}

std::string serialize_certificate(const Certificate& c) {
  json j;
  j["kind"] = c.kind == Certificate::Kind::kPath ? "path" : "cycle";
  j["r"] = c.r;
  j["length"] = c.length;
  if (c.start_vertex) j["start_vertex"] = *c.start_vertex;
  j["vertices"] = c.vertices;
  j["edge_ids"] = c.edge_ids;
  j["edges"] = c.edges;
  j["trace"] = trace_json(c.trace);
  return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  try {
    json j = json::parse(text);
    Certificate c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "path") {
      c.kind = Certificate::Kind::kPath;
    } else if (kind == "cycle") {
      c.kind = Certificate::Kind::kCycle;
    } else {
      throw ParseError("unknown certificate kind '" + kind + "'");
    }
    c.r = j.at("r").get<std::size_t>();
    c.length = j.at("length").get<std::size_t>();
    if (j.contains("start_vertex")) c.start_vertex = j.at("start_vertex").get<VertexId>();
    c.vertices = j.at("vertices").get<std::vector<VertexId>>();
    c.edge_ids = j.at("edge_ids").get<std::vector<EdgeId>>();
    if (j.contains("edges")) c.edges = j.at("edges").get<std::vector<VertexSet>>();
    if (j.contains("trace")) c.trace = trace_from(j.at("trace"));
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

std::string trace_to_json(const ProofTrace& trace) { return trace_json(trace).dump(); }

ProofTrace trace_from_json(const std::string& text) {
  try {
    return trace_from(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("trace: ") + e.what());
  }
}

std::optional<std::string> check_certificate(const Hypergraph& h, const Certificate& c) {
  if (h.uniformity() && c.r != *h.uniformity()) {
    return "r claim " + std::to_string(c.r) + " but hypergraph is " +
           std::to_string(*h.uniformity()) + "-uniform";
  }
  if (c.length != c.edge_ids.size()) {
    return "length claim " + std::to_string(c.length) + " but " + std::to_string(c.edge_ids.size()) +
           " edges";
  }
  Verdict verdict;
  if (c.kind == Certificate::Kind::kPath) {
    verdict = verify_path(h, BergePath{c.vertices, c.edge_ids});
    if (verdict && c.start_vertex && *c.start_vertex != c.vertices.front()) {
      return std::string("start vertex claim does not match");
    }
  } else {
    verdict = verify_cycle(h, BergeCycle{c.vertices, c.edge_ids});
  }
  if (!verdict) return verdict.message();
  return std::nullopt;
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace berge::io
