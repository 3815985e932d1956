#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hspec/hypergraph.hpp"

namespace hspec {

/// Point of the standard probability simplex: entries >= 0, summing to 1
/// within 1e-12.
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<double> weights);

  static SimplexVector barycenter(int n);

  const std::vector<double>& weights() const noexcept { return w_; }
  int dim() const noexcept { return static_cast<int>(w_.size()); }

 private:
  std::vector<double> w_;
};

/// Euclidean projection onto the simplex (sort-and-threshold). Idempotent.
SimplexVector project_to_simplex(std::span<const double> v);

/// Sum of prod_{k=1..m} x_{i_k} over all length-m index tuples drawn from
/// the edge with every vertex used at least once, via the inclusion-
/// exclusion subset form. Requires |e| <= m.
double edge_polynomial(const Edge& e, int m, std::span<const double> x);

/// The degree-m homogeneous polynomial sum_e edge_polynomial(e, m, x) /
/// alpha(|e|, m) with m = rank(H), evaluated at an arbitrary point.
double lagrangian_polynomial(const Hypergraph& h, std::span<const double> x);

/// Same polynomial restricted to its natural domain.
double evaluate_L(const Hypergraph& h, const SimplexVector& x);

/// Analytic gradient of lagrangian_polynomial.
std::vector<double> gradient_L(const Hypergraph& h, std::span<const double> x);

struct LagrangianResult {
  double value = 0.0;
  SimplexVector maximizer;
  int starts_used = 0;
  double kkt_residual = 0.0;  // ||x - P(x + grad)|| at the maximizer
};

/// Multi-start projected gradient ascent over the simplex. Start set:
/// barycenter, uniform on the maximum-clique witness and on each maximal
/// clique support, then seeded Dirichlet(1,...,1) draws up to `starts`.
/// Deterministic given (h, starts, seed, tol); the returned value is a
/// certified lower bound on the true maximum.
LagrangianResult maximize_L(const Hypergraph& h, int starts,
                            std::uint64_t seed, double tol = 1e-10);

/// Closed-form clique prediction (1/omega)^m C(omega+1, m).
double predicted_L(int omega, int m);

}  // namespace hspec
