#include "hspec/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hspec/comb.hpp"
#include "hspec/util.hpp"

namespace hspec {

namespace {

bool canonical_less(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void check_types(int n, const std::vector<int>& types) {
  for (int r : types) {
    if (r < 1 || r > n) {
      throw Error(errc::type_exceeds_n,
                  "edge type " + std::to_string(r) +
                      " outside 1.." + std::to_string(n));
    }
  }
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::size_t Hypergraph::EdgeHash::operator()(const Edge& e) const noexcept {
  std::size_t h = 1469598103934665603ull;  // FNV-1a over the vertex ids
  for (int v : e) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Hypergraph::Hypergraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count) {
  if (n_ < 1) {
    throw Error(errc::vertex_out_of_range, "vertex count must be at least 1");
  }
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    Edge& e = edges[idx];
    if (e.empty()) {
      throw Error(errc::empty_edge,
                  "edge " + std::to_string(idx) + " is empty",
                  static_cast<long>(idx));
    }
    std::sort(e.begin(), e.end());
    if (e.front() < 1 || e.back() > n_) {
      throw Error(errc::vertex_out_of_range,
                  "edge " + std::to_string(idx) + " has a vertex outside 1.." +
                      std::to_string(n_),
                  static_cast<long>(idx));
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(errc::duplicate_vertex_in_edge,
                  "edge " + std::to_string(idx) + " repeats a vertex",
                  static_cast<long>(idx));
    }
  }
  edge_set_.reserve(edges.size());
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    if (!edge_set_.insert(edges[idx]).second) {
      throw Error(errc::duplicate_edge,
                  "edge " + std::to_string(idx) + " duplicates an earlier edge",
                  static_cast<long>(idx));
    }
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  edges_ = std::move(edges);
  rank_ = edges_.empty() ? 0 : static_cast<int>(edges_.back().size());
}

std::vector<int> edge_types(const Hypergraph& h) {
  std::vector<int> types;
  for (const Edge& e : h.edges()) types.push_back(static_cast<int>(e.size()));
  return sorted_unique(std::move(types));
}

long VertexTypeProfile::total() const {
  long t = 0;
  for (const auto& [card, count] : type_counts) t += count;
  return t;
}

VertexTypeProfile vertex_profile(const Hypergraph& h, int vertex) {
  if (vertex < 1 || vertex > h.vertex_count()) {
    throw Error(errc::vertex_out_of_range,
                "vertex " + std::to_string(vertex) + " outside 1.." +
                    std::to_string(h.vertex_count()));
  }
  VertexTypeProfile profile;
  profile.vertex = vertex;
  for (const Edge& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), vertex)) {
      ++profile.type_counts[static_cast<int>(e.size())];
    }
  }
  return profile;
}

namespace {

// Calls fn(subset) for every r-subset of 1..n in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int r, Fn&& fn) {
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pick[i] = i + 1;
  while (true) {
    fn(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - (r - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Hypergraph complete_r_graph(int n, const std::vector<int>& types) {
  if (n < 1) {
    throw Error(errc::vertex_out_of_range, "vertex count must be at least 1");
  }
  check_types(n, types);
  std::vector<Edge> edges;
  for (int r : sorted_unique(types)) {
    for_each_subset(n, r, [&](const std::vector<int>& s) { edges.push_back(s); });
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_r_graph(int n, const std::vector<int>& types, double p,
                          std::uint64_t seed) {
  if (n < 1) {
    throw Error(errc::vertex_out_of_range, "vertex count must be at least 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(errc::invalid_arity, "probability must lie in [0, 1]");
  }
  check_types(n, types);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int r : sorted_unique(types)) {
    for_each_subset(n, r, [&](const std::vector<int>& s) {
      if (detail::canonical_u01(rng) < p) edges.push_back(s);
    });
  }
  return Hypergraph(n, std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Hypergraph& h) {
  const int n = h.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      int a = find(e[0]), b = find(e[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> buckets;
  for (int v = 1; v <= n; ++v) buckets[find(v)].push_back(v);
  std::vector<std::vector<int>> components;
  components.reserve(buckets.size());
  for (auto& [root, verts] : buckets) components.push_back(std::move(verts));
  return components;
}

bool is_connected(const Hypergraph& h) {
  return connected_components(h).size() == 1;
}

bool is_complete_r_graph(const Hypergraph& h) {
  if (h.edge_count() == 0) return false;
  std::map<int, long> counts;
  for (const Edge& e : h.edges()) ++counts[static_cast<int>(e.size())];
  for (const auto& [card, count] : counts) {
    if (BigInt(count) != binom(h.vertex_count(), card)) return false;
  }
  return true;
}

Hypergraph induced_subhypergraph(const Hypergraph& h,
                                 const std::vector<int>& vertices) {
  std::vector<int> verts = sorted_unique(vertices);
  if (verts.empty() || verts.front() < 1 || verts.back() > h.vertex_count()) {
    throw Error(errc::vertex_out_of_range,
                "induced vertex set outside 1..n or empty");
  }
  std::vector<int> relabel(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    relabel[verts[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) {
      if (relabel[v] == 0) {
        mapped.clear();
        break;
      }
      mapped.push_back(relabel[v]);
    }
    if (!mapped.empty()) edges.push_back(std::move(mapped));
  }
  return Hypergraph(static_cast<int>(verts.size()), std::move(edges));
}

// --- serialization --------------------------------------------------------

Hypergraph parse_hypergraph_text(std::istream& in) {
  std::string line;
  long line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    if (!have_n) {
      if (!(tokens >> n)) {
        if (tokens.eof()) continue;  // blank or comment before the n line
        throw Error(errc::parse_error,
                    "line " + std::to_string(line_no) +
                        ": expected the vertex count");
      }
      std::string rest;
      if (tokens >> rest) {
        throw Error(errc::parse_error,
                    "line " + std::to_string(line_no) +
                        ": trailing tokens after the vertex count");
      }
      have_n = true;
      continue;
    }
    Edge e;
    int v;
    while (tokens >> v) e.push_back(v);
    if (!tokens.eof()) {
      throw Error(errc::parse_error,
                  "line " + std::to_string(line_no) + ": non-integer token");
    }
    if (!e.empty()) edges.push_back(std::move(e));
  }
  if (!have_n) {
    throw Error(errc::parse_error, "empty input: missing the vertex count");
  }
  return Hypergraph(n, std::move(edges));
}

namespace {

Hypergraph parse_hypergraph_json(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(errc::parse_error, std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw Error(errc::parse_error,
                R"(JSON hypergraph must be {"n": <int>, "edges": [[...]]})");
  }
  std::vector<Edge> edges;
  for (const auto& je : j["edges"]) {
    if (!je.is_array()) {
      throw Error(errc::parse_error, "JSON edge must be an array of integers");
    }
    Edge e;
    for (const auto& jv : je) {
      if (!jv.is_number_integer()) {
        throw Error(errc::parse_error, "JSON edge must be an array of integers");
      }
      e.push_back(jv.get<int>());
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(j["n"].get<int>(), std::move(edges));
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_hypergraph_json(content);
    break;
  }
  std::istringstream in(content);
  return parse_hypergraph_text(in);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::file_not_found, "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.vertex_count() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ' ';
      os << e[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json_string(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.vertex_count();
  j["edges"] = h.edges();
  return j.dump();
}

}  // namespace hspec
