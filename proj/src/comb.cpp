#include "hspec/comb.hpp"

#include <cmath>
#include <string>

namespace hspec {

namespace {

void require_arity(int s, int m) {
  if (s < 1 || m < 1 || s > m) {
    throw Error(errc::invalid_arity,
                std::string("alpha requires 1 <= s <= m, got s=") +
                    std::to_string(s) + " m=" + std::to_string(m));
  }
}

BigInt pow_int(BigInt base, int exp) {
  BigInt r = 1;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt binom(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // divides exactly: r is C(a-b+i, i) after each step
  }
  return r;
}

double binom_double(long long a, long long b) {
  return binom(a, b).convert_to<double>();
}

BigInt alpha(int s, int m) {
  require_arity(s, m);
  BigInt total = 0;
  for (int j = 0; j <= s; ++j) {
    BigInt term = binom(s, j) * pow_int(BigInt(s - j), m);
    if (j & 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

BigInt alpha_composition_sum(int s, int m) {
  require_arity(s, m);
  const BigInt m_fact = factorial(m);
  BigInt total = 0;
  // All compositions k_1..k_s >= 1 with sum m.
  std::vector<int> k(static_cast<std::size_t>(s), 0);
  auto walk = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == s - 1) {
      k[pos] = remaining;
      BigInt denom = 1;
      for (int part : k) denom *= factorial(part);
      total += m_fact / denom;
      return;
    }
    for (int v = 1; v <= remaining - (s - 1 - pos); ++v) {
      k[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  walk(walk, 0, m);
  return total;
}

BigInt surjection_count_oracle(int s, int m) {
  require_arity(s, m);
  double tuple_count = std::pow(static_cast<double>(s), m);
  if (tuple_count > 2e7) {
    throw Error(errc::too_large,
                "surjection enumeration too large: s^m exceeds 2e7");
  }

  // Odometer over assignments slot -> element with incremental coverage
  // counts, so each step is O(1) amortized.
  std::vector<int> digit(static_cast<std::size_t>(m), 0);
  std::vector<long> uses(static_cast<std::size_t>(s), 0);
  uses[0] = m;
  int covered = 1;
  long long hits = 0;
  while (true) {
    if (covered == s) ++hits;
    int pos = 0;
    while (pos < m) {
      int old = digit[pos];
      if (--uses[old] == 0) --covered;
      int next = old + 1;
      if (next < s) {
        digit[pos] = next;
        if (uses[next]++ == 0) ++covered;
        break;
      }
      digit[pos] = 0;
      if (uses[0]++ == 0) ++covered;
      ++pos;
    }
    if (pos == m) break;
  }
  return hits;
}

AlphaTable::AlphaTable(int m) : m_(m) {
  if (m < 1) {
    throw Error(errc::invalid_arity, "AlphaTable requires m >= 1");
  }
  values_.reserve(static_cast<std::size_t>(m));
  as_double_.reserve(static_cast<std::size_t>(m));
  for (int s = 1; s <= m; ++s) {
    values_.push_back(hspec::alpha(s, m));
    as_double_.push_back(values_.back().convert_to<double>());
  }
}

const BigInt& AlphaTable::alpha(int s) const {
  if (s < 1 || s > m_) {
    throw Error(errc::invalid_arity, "alpha index out of range");
  }
  return values_[static_cast<std::size_t>(s - 1)];
}

double AlphaTable::alpha_as_double(int s) const {
  if (s < 1 || s > m_) {
    throw Error(errc::invalid_arity, "alpha index out of range");
  }
  return as_double_[static_cast<std::size_t>(s - 1)];
}

double symmetric_mean(std::span<const double> x, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) {
    throw Error(errc::invalid_arity, "symmetric_mean requires 1 <= k <= n");
  }
  for (double v : x) {
    if (!(v > 0.0)) {
      throw Error(errc::non_positive_entry,
                  "symmetric_mean requires strictly positive entries");
    }
  }
  // e_j coefficients of prod (1 + x_i t), updated one factor at a time.
  std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j >= 1; --j) e[j] += x[i] * e[j - 1];
  }
  return e[static_cast<std::size_t>(k)] / binom_double(n, k);
}

std::pair<double, double> holder_k_check(
    const std::vector<std::vector<double>>& vectors) {
  const int k = static_cast<int>(vectors.size());
  if (k < 2) {
    throw Error(errc::invalid_arity, "holder_k_check requires k >= 2 vectors");
  }
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) {
      throw Error(errc::dimension_mismatch,
                  "holder_k_check requires equal-dimension vectors");
    }
  }
  double lhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (const auto& v : vectors) prod *= v[i];
    lhs += prod;
  }
  double rhs = 1.0;
  for (const auto& v : vectors) {
    double pk = 0.0;
    for (double vi : v) pk += std::pow(vi, k);
    rhs *= std::pow(pk, 1.0 / k);
  }
  return {lhs, rhs};
}

}  // namespace hspec
