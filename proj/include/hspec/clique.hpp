#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hspec/hypergraph.hpp"

namespace hspec {

struct CliqueResult {
  int omega = 1;
  std::vector<int> witness;  // sorted, size omega
  long nodes_explored = 0;
};

/// A vertex set S is a clique when, for every edge type s present with
/// s <= |S|, every s-subset of S is an edge. Types larger than |S| are
/// vacuously satisfied, which makes any (m-1)-set of an {m}-graph a clique.
bool is_clique(const Hypergraph& h, std::span<const int> vertices);

/// Exact clique number by depth-first extension in vertex order with a
/// remaining-candidate prune. Edgeless hypergraphs get omega = 1 with the
/// lowest vertex as witness. The witness is the lexicographically least
/// maximum clique.
CliqueResult clique_number(const Hypergraph& h);

/// Maximal cliques (not extendable by any vertex) in lexicographic DFS
/// order, at most `cap` of them. Used to seed simplex-optimizer starts.
std::vector<std::vector<int>> maximal_clique_supports(const Hypergraph& h,
                                                      int cap = 64);

/// Lexicographically least pair (i, j) with i, j sharing no edge and equal
/// edge-type multisets R(i) = R(j); nullopt when no such pair exists.
std::optional<std::pair<int, int>> find_nonadjacent_twins(const Hypergraph& h);

/// True iff edge_types(H) is contained in {m, m-1} (m = rank, m >= 2) and H
/// is either the complete {m,m-1}-graph on its vertex set or has a
/// nonadjacent twin pair.
bool ms_hypothesis_holds(const Hypergraph& h);

}  // namespace hspec
