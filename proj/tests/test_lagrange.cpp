#include <doctest.h>

#include <random>

#include "hspec/clique.hpp"
#include "hspec/lagrange.hpp"
#include "hspec/tensor.hpp"
#include "test_support.hpp"

using namespace hspec;

namespace {

// Exhaustive search over the lattice {k/steps} of the simplex.
double grid_search_max(const Hypergraph& h, int steps) {
  const int n = h.vertex_count();
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  double best = -1.0;
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      k[pos] = remaining;
      for (int i = 0; i < n; ++i) {
        x[i] = static_cast<double>(k[i]) / steps;
      }
      best = std::max(best, lagrangian_polynomial(h, x));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      k[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, steps);
  return best;
}

}  // namespace

TEST_CASE("edge_polynomial pinned values") {
  std::vector<double> half{0.5, 0.5, 0.0};
  CHECK(edge_polynomial({1, 2}, 3, half) == doctest::Approx(0.75));

  std::vector<double> x{0.3, 0.2};
  CHECK(edge_polynomial({2}, 4, x) == doctest::Approx(0.2 * 0.2 * 0.2 * 0.2));

  std::vector<double> third{1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK(edge_polynomial({1, 2, 3}, 3, third) == doctest::Approx(2.0 / 9));

  CHECK_THROWS_AS(edge_polynomial({1, 2, 3}, 2, third), Error);
}

TEST_CASE("edge_polynomial equals the surjective tuple enumeration") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4;
    const int m = 2 + static_cast<int>(rng() % 3);
    const int s = 1 + static_cast<int>(rng() % std::min(m, n));
    Edge e;
    for (int v = 1; v <= s; ++v) e.push_back(v);
    const std::vector<double> x = testing::random_point(rng, n);

    // direct enumeration over all s^m assignments
    double want = 0.0;
    std::vector<int> digit(static_cast<std::size_t>(m), 0);
    while (true) {
      unsigned seen = 0;
      double prod = 1.0;
      for (int j = 0; j < m; ++j) {
        seen |= 1u << digit[j];
        prod *= x[static_cast<std::size_t>(e[digit[j]] - 1)];
      }
      if (seen == (1u << s) - 1u) want += prod;
      int j = m - 1;
      for (; j >= 0; --j) {
        if (++digit[j] < s) break;
        digit[j] = 0;
      }
      if (j < 0) break;
    }
    CHECK(edge_polynomial(e, m, x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("evaluate_L pinned values") {
  SUBCASE("2-graphs reduce to sum of x_i x_j") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 4);
      Hypergraph h = testing::nonempty_random(n, {2}, 0.6, 5000 + trial);
      std::vector<double> raw = testing::random_point(rng, n, 0.01, 1.0);
      SimplexVector x = project_to_simplex(raw);
      double want = 0.0;
      for (const Edge& e : h.edges()) {
        want += x.weights()[e[0] - 1] * x.weights()[e[1] - 1];
      }
      CHECK(evaluate_L(h, x) == doctest::Approx(want).epsilon(1e-13));
    }
  }
  SUBCASE("complete {2,3}-graph on 3 vertices at the barycenter") {
    Hypergraph h = complete_r_graph(3, {2, 3});
    CHECK(evaluate_L(h, SimplexVector::barycenter(3)) ==
          doctest::Approx(4.0 / 27).epsilon(1e-12));
  }
  SUBCASE("K3 at the barycenter") {
    Hypergraph k3 = complete_r_graph(3, {2});
    CHECK(evaluate_L(k3, SimplexVector::barycenter(3)) ==
          doctest::Approx(1.0 / 3).epsilon(1e-12));
  }
  SUBCASE("errors") {
    Hypergraph h = complete_r_graph(3, {2});
    CHECK_THROWS_AS(evaluate_L(Hypergraph(3, {}), SimplexVector::barycenter(3)),
                    Error);
    CHECK_THROWS_AS(evaluate_L(h, SimplexVector::barycenter(4)), Error);
  }
}

TEST_CASE("SimplexVector validation") {
  CHECK_THROWS_AS(SimplexVector({0.5, 0.6}), Error);
  CHECK_THROWS_AS(SimplexVector({1.5, -0.5}), Error);
  CHECK_THROWS_AS(SimplexVector(std::vector<double>{}), Error);
  SimplexVector ok({0.25, 0.75});
  CHECK(ok.dim() == 2);
}

TEST_CASE("gradient_L pinned values") {
  SUBCASE("single 2-edge bilinear form") {
    Hypergraph h(2, {{1, 2}});
    std::vector<double> x{0.3, 0.9};
    auto g = gradient_L(h, x);
    CHECK(g[0] == doctest::Approx(0.9));
    CHECK(g[1] == doctest::Approx(0.3));
  }
  SUBCASE("zero point gives zero gradient for m >= 2") {
    Hypergraph h(3, {{1, 2}, {1, 2, 3}});
    auto g = gradient_L(h, std::vector<double>(3, 0.0));
    for (double v : g) CHECK(v == 0.0);
  }
}

TEST_CASE("gradient_L matches central finite differences") {
  std::mt19937_64 rng(53);
  const double step = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    Hypergraph h = testing::nonempty_random(n, {2, 3}, 0.6, 5300 + trial);
    std::vector<double> x = testing::random_point(rng, n, 0.05, 1.0);
    const std::vector<double> g = gradient_L(h, x);
    for (int i = 0; i < n; ++i) {
      std::vector<double> hi = x, lo = x;
      hi[i] += step;
      lo[i] -= step;
      const double fd = (lagrangian_polynomial(h, hi) -
                         lagrangian_polynomial(h, lo)) /
                        (2 * step);
      CHECK(testing::close(g[i], fd, 1e-6));
    }
  }
}

TEST_CASE("project_to_simplex") {
  SUBCASE("pinned points") {
    SimplexVector a = project_to_simplex(std::vector<double>{2.0, 0.0});
    CHECK(a.weights()[0] == doctest::Approx(1.0));
    CHECK(a.weights()[1] == doctest::Approx(0.0));

    SimplexVector b = project_to_simplex(std::vector<double>{0.6, 0.6});
    CHECK(b.weights()[0] == doctest::Approx(0.5));
    CHECK(b.weights()[1] == doctest::Approx(0.5));
  }
  SUBCASE("idempotent") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      std::vector<double> v = testing::random_point(rng, n, -2.0, 2.0);
      SimplexVector once = project_to_simplex(v);
      SimplexVector twice = project_to_simplex(once.weights());
      for (int i = 0; i < n; ++i) {
        CHECK(twice.weights()[i] ==
              doctest::Approx(once.weights()[i]).epsilon(1e-12));
      }
      double sum = 0.0;
      for (double w : once.weights()) sum += w;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  SUBCASE("nearest point: beats random simplex points") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      std::vector<double> v = testing::random_point(rng, n, -1.0, 2.0);
      const SimplexVector p = project_to_simplex(v);
      double best = 0.0;
      for (int i = 0; i < n; ++i) {
        const double d = p.weights()[i] - v[i];
        best += d * d;
      }
      for (int probe = 0; probe < 20; ++probe) {
        SimplexVector q =
            project_to_simplex(testing::random_point(rng, n, 0.0, 1.0));
        double dist = 0.0;
        for (int i = 0; i < n; ++i) {
          const double d = q.weights()[i] - v[i];
          dist += d * d;
        }
        CHECK(best <= dist + 1e-12);
      }
    }
  }
}

TEST_CASE("maximize_L pinned values") {
  SUBCASE("K3 reaches the Motzkin-Straus value") {
    LagrangianResult r = maximize_L(complete_r_graph(3, {2}), 8, 1);
    CHECK(r.value == doctest::Approx(1.0 / 3).epsilon(1e-9));
  }
  SUBCASE("complete {3,2}-graph on 4 vertices") {
    LagrangianResult r = maximize_L(complete_r_graph(4, {2, 3}), 8, 42);
    CHECK(r.value == doctest::Approx(0.15625).epsilon(1e-9));
  }
  SUBCASE("single 2-edge maximizes ab at (1/2, 1/2)") {
    LagrangianResult r = maximize_L(Hypergraph(2, {{1, 2}}), 4, 0);
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(r.maximizer.weights()[0] == doctest::Approx(0.5).epsilon(1e-6));
  }
  SUBCASE("value is L at the maximizer") {
    LagrangianResult r = maximize_L(complete_r_graph(4, {2, 3}), 6, 3);
    CHECK(r.value ==
          doctest::Approx(evaluate_L(complete_r_graph(4, {2, 3}), r.maximizer))
              .epsilon(1e-12));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(maximize_L(Hypergraph(3, {}), 4, 0), Error);
    CHECK_THROWS_AS(maximize_L(complete_r_graph(3, {2}), 0, 0), Error);
  }
}

TEST_CASE("maximize_L is deterministic") {
  Hypergraph h = testing::nonempty_random(6, {2, 3}, 0.5, 77);
  LagrangianResult a = maximize_L(h, 12, 5);
  LagrangianResult b = maximize_L(h, 12, 5);
  CHECK(a.value == b.value);
  CHECK(a.maximizer.weights() == b.maximizer.weights());
  CHECK(a.starts_used == b.starts_used);
}

TEST_CASE("maximize_L agrees with grid search on small instances") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);  // up to 4
    Hypergraph h = testing::nonempty_random(n, {2, std::min(3, n)}, 0.6,
                                            5600 + trial);
    const double grid = grid_search_max(h, 60);
    const double opt = maximize_L(h, 16, 7).value;
    CHECK(std::abs(opt - grid) <= 2e-3);
  }
}

TEST_CASE("monotonicity: adding an edge never decreases L") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    // keep the rank fixed by seeding with one 3-edge
    std::vector<Edge> base{{1, 2, 3}};
    const Hypergraph extra = random_r_graph(n, {2, 3}, 0.3, 5700 + trial);
    for (const Edge& e : extra.edges()) {
      if (e != Edge{1, 2, 3}) base.push_back(e);
    }
    Hypergraph small(n, {{1, 2, 3}});
    Hypergraph grown(n, base);
    CHECK(maximize_L(grown, 8, 1).value >=
          maximize_L(small, 8, 1).value - 1e-9);
  }
}

TEST_CASE("predicted_L") {
  CHECK(predicted_L(3, 3) == doctest::Approx(4.0 / 27));
  CHECK(predicted_L(1, 3) == 0.0);
  CHECK(predicted_L(3, 2) == doctest::Approx(2.0 / 3));  // not the 2-graph value
  CHECK(predicted_L(4, 3) == doctest::Approx(0.15625));
  CHECK_THROWS_AS(predicted_L(0, 3), Error);
}

TEST_CASE("spectral form sandwich on the simplex") {
  // min-type * L <= A x^m <= m * L for x on the simplex
  std::mt19937_64 rng(58);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    Hypergraph h = testing::nonempty_random(n, {2, 3}, 0.5, 5800 + trial);
    AdjacencyOperator op(h);
    SimplexVector x = project_to_simplex(testing::random_point(rng, n));
    const double axm = op.quadratic_form(x.weights());
    const double L = evaluate_L(h, x);
    const int min_type = edge_types(h).front();
    const int m = h.rank();
    CHECK(axm >= min_type * L - 1e-10);
    CHECK(axm <= m * L + 1e-10);
  }
}
