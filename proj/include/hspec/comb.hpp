#pragma once

#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hspec/errors.hpp"

namespace hspec {

using BigInt = boost::multiprecision::cpp_int;

/// Number of surjections from an m-element index set onto an s-element set,
/// by inclusion-exclusion: sum_{j=0..s} (-1)^j C(s,j) (s-j)^m. Exact.
BigInt alpha(int s, int m);

/// alpha via the multinomial composition sum
/// sum_{k1..ks >= 1, k1+...+ks = m} m!/(k1! ... ks!). Second route for tests.
BigInt alpha_composition_sum(int s, int m);

/// Brute-force surjection count: enumerate all s^m assignments and keep the
/// covering ones. Guarded at s^m <= 2e7 so the full 1<=s<=m<=8 sweep runs.
BigInt surjection_count_oracle(int s, int m);

/// All alpha(s, m) for 1 <= s <= m, computed once and shared.
class AlphaTable {
 public:
  explicit AlphaTable(int m);

  int order() const noexcept { return m_; }
  const BigInt& alpha(int s) const;
  double alpha_as_double(int s) const;

 private:
  int m_;
  std::vector<BigInt> values_;   // values_[s-1] = alpha(s, m)
  std::vector<double> as_double_;
};

/// C(a, b), exact; 0 when b < 0 or b > a so bound formulas degrade to zero
/// terms instead of failing for small cliques.
BigInt binom(long long a, long long b);
double binom_double(long long a, long long b);

BigInt factorial(int k);

/// Maclaurin mean S_k = e_k(x) / C(n, k) with e_k the elementary symmetric
/// polynomial. Entries must be strictly positive.
double symmetric_mean(std::span<const double> x, int k);

/// Both sides of the k-vector Cauchy-Schwarz generalization
/// sum_i prod_j v_j[i]  <=  prod_j ||v_j||_k  (k = number of vectors).
/// Returned as (lhs, rhs) so callers can report slack.
std::pair<double, double> holder_k_check(
    const std::vector<std::vector<double>>& vectors);

}  // namespace hspec
