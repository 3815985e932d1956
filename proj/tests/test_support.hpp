#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "hspec/hypergraph.hpp"
#include "hspec/util.hpp"

namespace hspec::testing {

// Random point with entries in [lo, hi).
inline std::vector<double> random_point(std::mt19937_64& rng, int n,
                                        double lo = 0.0, double hi = 1.0) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = lo + (hi - lo) * detail::canonical_u01(rng);
  return x;
}

// Nonempty random hypergraph; bumps the seed until edges appear.
inline Hypergraph nonempty_random(int n, const std::vector<int>& types,
                                  double p, std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    Hypergraph h = random_r_graph(n, types, p, s);
    if (h.edge_count() > 0) return h;
  }
}

// Nonempty, connected, and of full rank max(types).
inline Hypergraph connected_random(int n, const std::vector<int>& types,
                                   double p, std::uint64_t seed) {
  int want_rank = 0;
  for (int t : types) want_rank = std::max(want_rank, t);
  for (std::uint64_t s = seed;; ++s) {
    Hypergraph h = random_r_graph(n, types, p, s);
    if (h.edge_count() > 0 && h.rank() == want_rank && is_connected(h)) {
      return h;
    }
  }
}

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool close_rel(double a, double b, double rtol, double atol = 1e-12) {
  return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

}  // namespace hspec::testing
