#include "hspec/lagrange.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "hspec/clique.hpp"
#include "hspec/comb.hpp"
#include "hspec/util.hpp"

namespace hspec {

namespace {

constexpr double kSimplexSumTol = 1e-12;

void check_dim(std::size_t got, int want, const char* what) {
  if (got != static_cast<std::size_t>(want)) {
    throw Error(errc::dimension_mismatch,
                std::string(what) + ": vector dimension " +
                    std::to_string(got) + " != " + std::to_string(want));
  }
}

// sum_{nonempty T subseteq e} sign(|e|-|T|) * sigma_T^power
double alternating_subset_sum(const Edge& e, std::span<const double> x,
                              int power) {
  const int s = static_cast<int>(e.size());
  const unsigned full = (1u << s) - 1u;
  double total = 0.0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    double sigma = 0.0;
    for (unsigned bits = mask; bits;) {
      int b = std::countr_zero(bits);
      sigma += x[static_cast<std::size_t>(e[b] - 1)];
      bits &= bits - 1;
    }
    const double t = detail::ipow(sigma, power);
    total += ((s - std::popcount(mask)) & 1) ? -t : t;
  }
  return total;
}

}  // namespace

SimplexVector::SimplexVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) {
    throw Error(errc::invalid_simplex_vector, "simplex vector must be nonempty");
  }
  double sum = 0.0;
  for (double v : w_) {
    if (!(v >= 0.0)) {
      throw Error(errc::invalid_simplex_vector,
                  "simplex vector entries must be nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSimplexSumTol) {
    throw Error(errc::invalid_simplex_vector,
                "simplex vector entries must sum to 1");
  }
}

SimplexVector SimplexVector::barycenter(int n) {
  if (n < 1) {
    throw Error(errc::invalid_simplex_vector, "dimension must be positive");
  }
  std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
  // Guard against accumulated rounding for large n.
  double sum = 0.0;
  for (double v : w) sum += v;
  for (double& v : w) v /= sum;
  return SimplexVector(std::move(w));
}

SimplexVector project_to_simplex(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) {
    throw Error(errc::invalid_simplex_vector, "dimension must be positive");
  }
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = u[0] - 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    cumulative += u[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) theta = candidate;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::max(v[i] - theta, 0.0);
  // Renormalize the positive part so the sum lands at 1 exactly enough.
  double sum = 0.0;
  for (double x : w) sum += x;
  for (double& x : w) x /= sum;
  return SimplexVector(std::move(w));
}

double edge_polynomial(const Edge& e, int m, std::span<const double> x) {
  if (static_cast<int>(e.size()) > m) {
    throw Error(errc::edge_larger_than_rank,
                "edge cardinality exceeds the polynomial degree");
  }
  for (int v : e) {
    if (v < 1 || static_cast<std::size_t>(v) > x.size()) {
      throw Error(errc::vertex_out_of_range, "edge vertex outside vector");
    }
  }
  return alternating_subset_sum(e, x, m);
}

namespace {

// Shared evaluation context: the per-edge alpha values are exact-integer
// computations, so they are built once and reused across optimizer
// iterations.
class LagrangeEvaluator {
 public:
  explicit LagrangeEvaluator(const Hypergraph& h)
      : h_(h), m_(h.rank()) {
    if (h_.edge_count() == 0) {
      throw Error(errc::no_edges, "L is undefined for an edgeless hypergraph");
    }
    AlphaTable table(m_);
    alpha_.reserve(h_.edge_count());
    for (const Edge& e : h_.edges()) {
      alpha_.push_back(table.alpha_as_double(static_cast<int>(e.size())));
    }
  }

  int dim() const { return h_.vertex_count(); }

  double value(std::span<const double> x) const {
    double total = 0.0;
    for (std::size_t ei = 0; ei < h_.edge_count(); ++ei) {
      total += alternating_subset_sum(h_.edges()[ei], x, m_) / alpha_[ei];
    }
    return total;
  }

  void gradient(std::span<const double> x, std::vector<double>& g) const {
    g.assign(x.size(), 0.0);
    for (std::size_t ei = 0; ei < h_.edge_count(); ++ei) {
      const Edge& e = h_.edges()[ei];
      const int s = static_cast<int>(e.size());
      acc_.assign(e.size(), 0.0);
      const unsigned full = (1u << s) - 1u;
      for (unsigned mask = 1; mask <= full; ++mask) {
        double sigma = 0.0;
        for (unsigned bits = mask; bits;) {
          int b = std::countr_zero(bits);
          sigma += x[static_cast<std::size_t>(e[b] - 1)];
          bits &= bits - 1;
        }
        const double w = ((s - std::popcount(mask)) & 1)
                             ? -detail::ipow(sigma, m_ - 1)
                             : detail::ipow(sigma, m_ - 1);
        for (unsigned bits = mask; bits;) {
          int b = std::countr_zero(bits);
          acc_[static_cast<std::size_t>(b)] += w;
          bits &= bits - 1;
        }
      }
      for (int b = 0; b < s; ++b) {
        g[static_cast<std::size_t>(e[b] - 1)] +=
            acc_[static_cast<std::size_t>(b)] * m_ / alpha_[ei];
      }
    }
  }

 private:
  const Hypergraph& h_;
  int m_;
  std::vector<double> alpha_;
  mutable std::vector<double> acc_;
};

}  // namespace

double lagrangian_polynomial(const Hypergraph& h, std::span<const double> x) {
  check_dim(x.size(), h.vertex_count(), "lagrangian_polynomial");
  return LagrangeEvaluator(h).value(x);
}

double evaluate_L(const Hypergraph& h, const SimplexVector& x) {
  return lagrangian_polynomial(h, x.weights());
}

std::vector<double> gradient_L(const Hypergraph& h, std::span<const double> x) {
  check_dim(x.size(), h.vertex_count(), "gradient_L");
  std::vector<double> g;
  LagrangeEvaluator(h).gradient(x, g);
  return g;
}

double predicted_L(int omega, int m) {
  if (omega < 1 || m < 1) {
    throw Error(errc::invalid_arity, "predicted_L requires omega, m >= 1");
  }
  return detail::ipow(1.0 / omega, m) * binom_double(omega + 1, m);
}

namespace {

struct StartOutcome {
  double value = -1.0;
  std::vector<double> x;
  double kkt = 0.0;
  bool converged = false;
};

double projected_gradient_norm(const std::vector<double>& x,
                               const std::vector<double>& g,
                               std::vector<double>& step) {
  for (std::size_t i = 0; i < x.size(); ++i) step[i] = x[i] + g[i];
  const std::vector<double> ref = project_to_simplex(step).weights();
  double pg = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - ref[i];
    pg += d * d;
  }
  return std::sqrt(pg);
}

StartOutcome ascend(const LagrangeEvaluator& eval, std::vector<double> x,
                    double tol) {
  constexpr int kMaxIterations = 10000;
  constexpr double kArmijo = 1e-4;

  StartOutcome out;
  double fx = eval.value(x);
  std::vector<double> g;
  std::vector<double> step(x.size());
  int flat_steps = 0;
  for (int it = 0; it < kMaxIterations; ++it) {
    eval.gradient(x, g);
    if (projected_gradient_norm(x, g, step) < tol) break;

    bool accepted = false;
    double t = 1.0;
    while (t > 1e-18) {
      for (std::size_t i = 0; i < x.size(); ++i) step[i] = x[i] + t * g[i];
      std::vector<double> xn = project_to_simplex(step).weights();
      const double fn = eval.value(xn);
      double gd = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) gd += g[i] * (xn[i] - x[i]);
      if (fn >= fx + kArmijo * gd) {
        // No representable improvement means the iterate is pinned at
        // double resolution; a few of those in a row is a stall.
        flat_steps = fn > fx ? 0 : flat_steps + 1;
        x = std::move(xn);
        fx = fn;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted || flat_steps >= 3) break;  // numerically stationary
  }

  eval.gradient(x, g);
  out.kkt = projected_gradient_norm(x, g, step);
  out.converged = out.kkt < tol;
  out.value = fx;
  out.x = std::move(x);
  return out;
}

std::vector<double> uniform_on_support(int n, const std::vector<int>& support) {
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  const double w = 1.0 / static_cast<double>(support.size());
  for (int v : support) x[static_cast<std::size_t>(v - 1)] = w;
  return x;
}

}  // namespace

LagrangianResult maximize_L(const Hypergraph& h, int starts, std::uint64_t seed,
                            double tol) {
  if (h.edge_count() == 0) {
    throw Error(errc::no_edges, "nothing to maximize: no edges");
  }
  if (starts < 1) {
    throw Error(errc::invalid_arity, "starts must be >= 1");
  }
  if (!(tol > 0.0)) {
    throw Error(errc::invalid_arity, "tolerance must be positive");
  }
  const int n = h.vertex_count();

  std::vector<std::vector<double>> start_points;
  start_points.push_back(SimplexVector::barycenter(n).weights());

  // Clique-uniform starts: the maximum-clique witness first, then maximal
  // clique supports.
  std::vector<std::vector<int>> supports;
  supports.push_back(clique_number(h).witness);
  for (auto& s : maximal_clique_supports(h)) {
    if (std::find(supports.begin(), supports.end(), s) == supports.end()) {
      supports.push_back(std::move(s));
    }
  }
  for (const auto& s : supports) {
    start_points.push_back(uniform_on_support(n, s));
  }

  const int dirichlet_count =
      std::max(0, starts - static_cast<int>(supports.size()));
  std::mt19937_64 rng(seed);
  for (int d = 0; d < dirichlet_count; ++d) {
    std::vector<double> x(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& xi : x) {
      xi = -std::log1p(-detail::canonical_u01(rng));
      sum += xi;
    }
    if (sum <= 0.0) sum = 1.0;
    for (double& xi : x) xi /= sum;
    start_points.push_back(project_to_simplex(x).weights());
  }

  const LagrangeEvaluator eval(h);
  StartOutcome best;
  bool any_converged = false;
  for (const auto& start : start_points) {
    StartOutcome outcome = ascend(eval, start, tol);
    if (!outcome.converged) continue;
    if (!any_converged || outcome.value > best.value) {
      best = std::move(outcome);
      any_converged = true;
    }
  }
  if (!any_converged) {
    throw Error(errc::not_converged,
                "no projected-gradient start reached stationarity");
  }

  LagrangianResult result{
      .value = eval.value(best.x),
      .maximizer = SimplexVector(std::move(best.x)),
      .starts_used = static_cast<int>(start_points.size()),
      .kkt_residual = best.kkt,
  };
  return result;
}

}  // namespace hspec
