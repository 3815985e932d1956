#include "hspec/clique.hpp"

#include <algorithm>

namespace hspec {

namespace {

// Shared search context: edge membership plus the present edge types.
struct CliqueSearch {
  const Hypergraph& h;
  std::vector<int> types;

  explicit CliqueSearch(const Hypergraph& hg) : h(hg), types(edge_types(hg)) {}

  // True iff S + v is still a clique, given S already is. Only subsets
  // containing v need checking: an s-subset avoiding v was either already
  // verified (|S| >= s) or is the whole new set (|S|+1 == s, contains v).
  bool extends(const std::vector<int>& sorted_s, int v) const {
    const int new_size = static_cast<int>(sorted_s.size()) + 1;
    for (int t : types) {
      if (t > new_size) break;
      if (!subsets_with_v_are_edges(sorted_s, v, t)) return false;
    }
    return true;
  }

 private:
  bool subsets_with_v_are_edges(const std::vector<int>& sorted_s, int v,
                                int t) const {
    // Choose t-1 vertices from S, add v, test membership.
    const int k = t - 1;
    const int n_avail = static_cast<int>(sorted_s.size());
    if (k > n_avail) return true;  // cannot form such a subset
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    Edge candidate(static_cast<std::size_t>(t));
    while (true) {
      for (int i = 0; i < k; ++i) candidate[i] = sorted_s[idx[i]];
      candidate[k] = v;
      std::sort(candidate.begin(), candidate.end());
      if (!h.has_edge(candidate)) return false;
      int i = k - 1;
      while (i >= 0 && idx[i] == n_avail - (k - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
  }
};

}  // namespace

bool is_clique(const Hypergraph& h, std::span<const int> vertices) {
  std::vector<int> s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 1 || v > h.vertex_count()) {
      throw Error(errc::vertex_out_of_range,
                  "clique candidate vertex outside 1..n");
    }
  }
  CliqueSearch ctx(h);
  std::vector<int> grown;
  grown.reserve(s.size());
  for (int v : s) {
    if (!ctx.extends(grown, v)) return false;
    grown.push_back(v);
  }
  return true;
}

CliqueResult clique_number(const Hypergraph& h) {
  CliqueResult result;
  if (h.edge_count() == 0) {
    result.omega = 1;
    result.witness = {1};
    return result;
  }
  CliqueSearch ctx(h);
  std::vector<int> best;
  std::vector<int> current;
  long nodes = 0;

  auto dfs = [&](auto&& self, const std::vector<int>& candidates) -> void {
    ++nodes;
    if (current.size() > best.size()) best = current;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best.size()) break;
      const int v = candidates[i];
      if (!ctx.extends(current, v)) continue;
      current.push_back(v);
      std::vector<int> next;
      next.reserve(candidates.size() - i - 1);
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (ctx.extends(current, candidates[j])) next.push_back(candidates[j]);
      }
      self(self, next);
      current.pop_back();
    }
  };

  std::vector<int> all(static_cast<std::size_t>(h.vertex_count()));
  for (int v = 1; v <= h.vertex_count(); ++v) all[v - 1] = v;
  dfs(dfs, all);

  result.nodes_explored = nodes;
  if (best.empty()) {
    result.omega = 1;
    result.witness = {1};
  } else {
    result.omega = static_cast<int>(best.size());
    result.witness = best;
  }
  return result;
}

std::vector<std::vector<int>> maximal_clique_supports(const Hypergraph& h,
                                                      int cap) {
  std::vector<std::vector<int>> out;
  if (cap <= 0) return out;
  const int n = h.vertex_count();
  if (h.edge_count() == 0) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) all[v - 1] = v;
    out.push_back(std::move(all));
    return out;
  }
  CliqueSearch ctx(h);
  std::vector<int> current;

  auto dfs = [&](auto&& self, int min_next) -> void {
    if (static_cast<int>(out.size()) >= cap) return;
    bool extended = false;
    for (int v = min_next; v <= n; ++v) {
      if (ctx.extends(current, v)) {
        extended = true;
        current.push_back(v);
        self(self, v + 1);
        current.pop_back();
        if (static_cast<int>(out.size()) >= cap) return;
      }
    }
    if (extended || current.empty()) return;
    // Not extendable upward; maximal iff no earlier vertex extends either.
    for (int v = 1; v < current.front(); ++v) {
      if (std::binary_search(current.begin(), current.end(), v)) continue;
      if (ctx.extends(current, v)) return;
    }
    for (int v = current.front() + 1; v < min_next; ++v) {
      if (std::binary_search(current.begin(), current.end(), v)) continue;
      if (ctx.extends(current, v)) return;
    }
    out.push_back(current);
  };

  dfs(dfs, 1);
  return out;
}

std::optional<std::pair<int, int>> find_nonadjacent_twins(const Hypergraph& h) {
  const int n = h.vertex_count();
  std::vector<std::vector<bool>> adjacent(
      static_cast<std::size_t>(n) + 1,
      std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (const Edge& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        adjacent[e[a]][e[b]] = adjacent[e[b]][e[a]] = true;
      }
    }
  }
  std::vector<VertexTypeProfile> profiles;
  profiles.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) profiles.push_back(vertex_profile(h, v));

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!adjacent[i][j] && profiles[i - 1] == profiles[j - 1]) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

bool ms_hypothesis_holds(const Hypergraph& h) {
  const int m = h.rank();
  if (m < 2) return false;
  const std::vector<int> types = edge_types(h);
  for (int t : types) {
    if (t != m && t != m - 1) return false;
  }
  const bool complete_mm1 =
      types.size() == 2 && is_complete_r_graph(h);
  return complete_mm1 || find_nonadjacent_twins(h).has_value();
}

}  // namespace hspec
