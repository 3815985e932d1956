#pragma once

#include <span>
#include <vector>

#include "hspec/hypergraph.hpp"

namespace hspec {

struct PowerIterationConfig {
  double tolerance = 1e-10;   // on (lambda_hi - lambda_lo) / lambda_hi
  long max_iterations = 100000;
  double shift = 1.0;         // epsilon added as a diagonal, removed at the end
};

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> eigenvector;  // m-norm 1; positive on the achieving component
  double residual = 0.0;            // inf-norm of A x^{m-1} - rho * x^{[m-1]}
  long iterations = 0;              // summed over components
  double lambda_lo = 0.0;           // final Collatz-Wielandt bracket, shift removed
  double lambda_hi = 0.0;
  bool positive_support = true;     // false when zeros were padded in (disconnected input)
  std::vector<double> component_rho;  // aligned with connected_components(h)
};

/// Spectral radius and principal eigenvector of the adjacency tensor by
/// shifted power iteration:
///   y = A x^{m-1} + eps x^{[m-1]},  next x = y^{[1/(m-1)]} renormalized in
/// m-norm, bracketing lambda by min/max of y_i / x_i^{m-1} and stopping on
/// relative bracket width. Disconnected inputs are handled per component
/// with rho = max over components; the eigenvector of the achieving
/// component is padded with zeros elsewhere.
///
/// Requires at least one edge and rank >= 2. Throws ConvergenceError with
/// the last bracket when the iteration cap is hit.
SpectralResult spectral_radius(const Hypergraph& h,
                               const PowerIterationConfig& cfg = {});

/// inf-norm of A x^{m-1} - lambda * x^{[m-1]}.
double eigen_residual(const Hypergraph& h, std::span<const double> x,
                      double lambda);

/// U: sum of the entries of the principal eigenvector.
double principal_eigenvector_sum(const SpectralResult& result);

}  // namespace hspec
