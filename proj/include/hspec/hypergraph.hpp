#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "hspec/errors.hpp"

namespace hspec {

/// An edge is a sorted, duplicate-free set of 1-based vertex indices.
using Edge = std::vector<int>;

/// Immutable general hypergraph on vertices 1..n. Edges may have differing
/// cardinalities. Construction validates and normalizes: vertices sorted
/// within each edge, edges ordered by (cardinality, lexicographic), duplicate
/// edges rejected. Values are safe to share between threads.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Maximum edge cardinality; 0 for an edgeless hypergraph.
  int rank() const noexcept { return rank_; }

  /// Membership test for an already-sorted edge.
  bool has_edge(const Edge& sorted_edge) const {
    return edge_set_.contains(sorted_edge);
  }

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  int rank_;

  struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept;
  };
  std::unordered_set<Edge, EdgeHash> edge_set_;
};

/// Sorted set of distinct edge cardinalities present in H.
std::vector<int> edge_types(const Hypergraph& h);

/// Multiset of edge cardinalities over the edges containing one vertex.
struct VertexTypeProfile {
  int vertex = 0;
  std::map<int, long> type_counts;  // cardinality -> count

  long total() const;
  bool operator==(const VertexTypeProfile& o) const {
    return type_counts == o.type_counts;
  }
};

VertexTypeProfile vertex_profile(const Hypergraph& h, int vertex);

/// Hypergraph with every possible edge of every cardinality in `types`.
Hypergraph complete_r_graph(int n, const std::vector<int>& types);

/// Each candidate r-subset (r in `types`) kept independently with
/// probability p. Identical (n, types, p, seed) give identical output.
Hypergraph random_r_graph(int n, const std::vector<int>& types, double p,
                          std::uint64_t seed);

/// Components of the relation "i ~ j iff some edge contains both". Singleton
/// edges create no adjacency; isolated vertices come back as singletons.
/// Components are sorted internally and ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

/// True iff H contains every possible edge of every type it has, i.e. H is
/// the complete R-graph on its vertex set for R = edge_types(H).
bool is_complete_r_graph(const Hypergraph& h);

/// Sub-hypergraph induced on `vertices` (1-based, duplicate-free): keeps the
/// edges lying fully inside and relabels vertices to 1..k following the
/// sorted order of `vertices`.
Hypergraph induced_subhypergraph(const Hypergraph& h,
                                 const std::vector<int>& vertices);

// --- serialization -------------------------------------------------------
//
// Text: line 1 holds n; every further non-empty, non-comment line is one
// edge as whitespace-separated 1-based vertices; '#' starts a comment.
// JSON: {"n": <int>, "edges": [[...], ...]}. Both emit canonical order.

Hypergraph parse_hypergraph_text(std::istream& in);
Hypergraph parse_hypergraph(const std::string& content);  // sniffs JSON vs text
Hypergraph load_hypergraph(const std::string& path);

std::string to_text(const Hypergraph& h);
std::string to_json_string(const Hypergraph& h);

}  // namespace hspec
