#include "hspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hspec/tensor.hpp"
#include "hspec/util.hpp"

namespace hspec {

namespace {

struct ComponentSpectrum {
  double rho = 0.0;
  std::vector<double> eigenvector;  // component-local coordinates, m-norm 1
  long iterations = 0;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
};

ComponentSpectrum power_iterate(const Hypergraph& sub, int order,
                                const PowerIterationConfig& cfg) {
  const AdjacencyOperator op(sub, order);
  const int k = sub.vertex_count();
  const int m = order;
  const double eps = cfg.shift;

  ComponentSpectrum out;
  std::vector<double> x(static_cast<std::size_t>(k),
                        std::pow(static_cast<double>(k), -1.0 / m));
  double lo = 0.0, hi = 0.0;
  for (long it = 1; it <= cfg.max_iterations; ++it) {
    std::vector<double> y = op.apply(x);
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
      const double xpow = detail::ipow(x[static_cast<std::size_t>(i)], m - 1);
      y[static_cast<std::size_t>(i)] += eps * xpow;
      if (x[static_cast<std::size_t>(i)] > 1e-300) {
        const double ratio = y[static_cast<std::size_t>(i)] / xpow;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
    if (hi - lo <= cfg.tolerance * hi) {
      out.rho = 0.5 * (lo + hi) - eps;
      out.lambda_lo = lo - eps;
      out.lambda_hi = hi - eps;
      out.iterations = it;
      out.eigenvector = std::move(x);
      return out;
    }
    // Next iterate: componentwise (m-1)-th root, renormalized in m-norm.
    double norm_pow = 0.0;
    for (int i = 0; i < k; ++i) {
      const double v = std::pow(y[static_cast<std::size_t>(i)], 1.0 / (m - 1));
      x[static_cast<std::size_t>(i)] = v;
      norm_pow += detail::ipow(v, m);
    }
    const double norm = std::pow(norm_pow, 1.0 / m);
    for (double& v : x) v /= norm;
  }
  throw ConvergenceError(
      "power iteration did not converge in " +
          std::to_string(cfg.max_iterations) + " iterations",
      cfg.max_iterations, lo - eps, hi - eps);
}

}  // namespace

SpectralResult spectral_radius(const Hypergraph& h,
                               const PowerIterationConfig& cfg) {
  if (h.edge_count() == 0) {
    throw Error(errc::no_edges, "spectral radius needs at least one edge");
  }
  const int m = h.rank();
  if (m < 2) {
    throw Error(errc::invalid_arity,
                "spectral computation requires rank >= 2; the eigenproblem "
                "degenerates for rank 1");
  }
  if (!(cfg.tolerance > 0.0)) {
    throw Error(errc::invalid_arity, "tolerance must be positive");
  }
  if (!(cfg.shift >= 0.0)) {
    throw Error(errc::invalid_arity, "shift must be nonnegative");
  }

  const auto components = connected_components(h);
  SpectralResult result;
  result.component_rho.assign(components.size(), 0.0);
  result.eigenvector.assign(static_cast<std::size_t>(h.vertex_count()), 0.0);

  bool have_best = false;
  std::size_t best_index = 0;
  ComponentSpectrum best;
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const Hypergraph sub = induced_subhypergraph(h, components[ci]);
    if (sub.edge_count() == 0) continue;  // isolated vertices: zero block
    ComponentSpectrum spectrum = power_iterate(sub, m, cfg);
    result.iterations += spectrum.iterations;
    result.component_rho[ci] = spectrum.rho;
    if (!have_best || spectrum.rho > best.rho) {
      have_best = true;
      best = std::move(spectrum);
      best_index = ci;
    }
  }

  result.rho = best.rho;
  result.lambda_lo = best.lambda_lo;
  result.lambda_hi = best.lambda_hi;
  result.positive_support = components.size() == 1;
  const auto& verts = components[best_index];
  for (std::size_t i = 0; i < verts.size(); ++i) {
    result.eigenvector[static_cast<std::size_t>(verts[i] - 1)] =
        best.eigenvector[i];
  }
  result.residual = eigen_residual(h, result.eigenvector, result.rho);
  return result;
}

double eigen_residual(const Hypergraph& h, std::span<const double> x,
                      double lambda) {
  const AdjacencyOperator op(h);
  const std::vector<double> y = op.apply(x);
  const int m = op.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    worst = std::max(worst,
                     std::abs(y[i] - lambda * detail::ipow(x[i], m - 1)));
  }
  return worst;
}

double principal_eigenvector_sum(const SpectralResult& result) {
  double sum = 0.0;
  for (double v : result.eigenvector) sum += v;
  return sum;
}

}  // namespace hspec
