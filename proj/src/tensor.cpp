#include "hspec/tensor.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "hspec/util.hpp"

namespace hspec {

namespace {

void check_dim(std::size_t got, int want, const char* what) {
  if (got != static_cast<std::size_t>(want)) {
    throw Error(errc::dimension_mismatch,
                std::string(what) + ": vector dimension " +
                    std::to_string(got) + " != " + std::to_string(want));
  }
}

}  // namespace

AdjacencyOperator::AdjacencyOperator(const Hypergraph& h)
    : AdjacencyOperator(h, h.rank()) {}

AdjacencyOperator::AdjacencyOperator(const Hypergraph& h, int order)
    : h_(h), m_(order) {
  if (h_.edge_count() == 0) {
    throw Error(errc::no_edges, "adjacency tensor needs at least one edge");
  }
  if (m_ < h_.rank()) {
    throw Error(errc::edge_larger_than_rank,
                "tensor order " + std::to_string(m_) +
                    " below rank " + std::to_string(h_.rank()));
  }
  if (h_.rank() > 30) {
    throw Error(errc::too_large, "edges beyond 30 vertices are unsupported");
  }
  AlphaTable table(m_);
  alpha_.reserve(h_.edge_count());
  for (const Edge& e : h_.edges()) {
    alpha_.push_back(table.alpha_as_double(static_cast<int>(e.size())));
  }
}

double AdjacencyOperator::edge_coefficient(std::size_t edge_index) const {
  const Edge& e = h_.edges().at(edge_index);
  return static_cast<double>(e.size()) / alpha_[edge_index];
}

std::vector<double> AdjacencyOperator::apply(std::span<const double> x) const {
  check_dim(x.size(), h_.vertex_count(), "apply");
  std::vector<double> y(x.size(), 0.0);
  std::vector<double> acc;
  for (std::size_t ei = 0; ei < h_.edge_count(); ++ei) {
    const Edge& e = h_.edges()[ei];
    const int s = static_cast<int>(e.size());
    acc.assign(e.size(), 0.0);
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
        acc[static_cast<std::size_t>(b)] += w;
        bits &= bits - 1;
      }
    }
    for (int b = 0; b < s; ++b) {
      y[static_cast<std::size_t>(e[b] - 1)] +=
          acc[static_cast<std::size_t>(b)] * s / alpha_[ei];
    }
  }
  return y;
}

double AdjacencyOperator::quadratic_form(std::span<const double> x) const {
  check_dim(x.size(), h_.vertex_count(), "quadratic_form");
  double total = 0.0;
  for (std::size_t ei = 0; ei < h_.edge_count(); ++ei) {
    const Edge& e = h_.edges()[ei];
    const int s = static_cast<int>(e.size());
    const unsigned full = (1u << s) - 1u;
    double subtotal = 0.0;
    for (unsigned mask = 1; mask <= full; ++mask) {
      double sigma = 0.0;
      for (unsigned bits = mask; bits;) {
        int b = std::countr_zero(bits);
        sigma += x[static_cast<std::size_t>(e[b] - 1)];
        bits &= bits - 1;
      }
      const double t = detail::ipow(sigma, m_);
      subtotal += ((s - std::popcount(mask)) & 1) ? -t : t;
    }
    total += subtotal * s / alpha_[ei];
  }
  return total;
}

double DenseTensor::at(std::span<const int> index_tuple) const {
  if (index_tuple.size() != static_cast<std::size_t>(order)) {
    throw Error(errc::dimension_mismatch, "index tuple length != order");
  }
  std::size_t flat = 0;
  for (int v : index_tuple) {
    if (v < 1 || v > dim) {
      throw Error(errc::vertex_out_of_range, "tensor index outside 1..n");
    }
    flat = flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(v - 1);
  }
  return values[flat];
}

std::vector<double> DenseTensor::contract(std::span<const double> x) const {
  check_dim(x.size(), dim, "contract");
  std::vector<double> y(x.size(), 0.0);
  std::vector<int> digit(static_cast<std::size_t>(order), 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    if (values[flat] != 0.0) {
      double p = 1.0;
      for (int j = 1; j < order; ++j) {
        p *= x[static_cast<std::size_t>(digit[j])];
      }
      y[static_cast<std::size_t>(digit[0])] += values[flat] * p;
    }
    for (int j = order - 1; j >= 0; --j) {
      if (++digit[j] < dim) break;
      digit[j] = 0;
    }
  }
  return y;
}

double DenseTensor::full_contract(std::span<const double> x) const {
  check_dim(x.size(), dim, "full_contract");
  double total = 0.0;
  std::vector<int> digit(static_cast<std::size_t>(order), 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    if (values[flat] != 0.0) {
      double p = 1.0;
      for (int j = 0; j < order; ++j) {
        p *= x[static_cast<std::size_t>(digit[j])];
      }
      total += values[flat] * p;
    }
    for (int j = order - 1; j >= 0; --j) {
      if (++digit[j] < dim) break;
      digit[j] = 0;
    }
  }
  return total;
}

void DenseTensor::dump(std::ostream& os) const {
  os << order << ' ' << dim << '\n';
  char buf[40];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf << '\n';
  }
}

DenseTensor materialize_dense(const AdjacencyOperator& op) {
  const int n = op.dim();
  const int m = op.order();
  double size = std::pow(static_cast<double>(n), m);
  if (size > 1e7) {
    throw Error(errc::too_large, "dense tensor would exceed 1e7 entries");
  }
  DenseTensor t;
  t.order = m;
  t.dim = n;
  t.values.assign(static_cast<std::size_t>(size + 0.5), 0.0);

  const auto& edges = op.hypergraph().edges();
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    const Edge& e = edges[ei];
    const int s = static_cast<int>(e.size());
    const double coeff = op.edge_coefficient(ei);
    // Every assignment of the m slots to edge elements that covers the edge.
    std::vector<int> digit(static_cast<std::size_t>(m), 0);
    while (true) {
      unsigned seen = 0;
      for (int j = 0; j < m; ++j) seen |= 1u << digit[j];
      if (seen == (1u << s) - 1u) {
        std::size_t flat = 0;
        for (int j = 0; j < m; ++j) {
          flat = flat * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(e[digit[j]] - 1);
        }
        t.values[flat] = coeff;
      }
      int j = m - 1;
      for (; j >= 0; --j) {
        if (++digit[j] < s) break;
        digit[j] = 0;
      }
      if (j < 0) break;
    }
  }
  return t;
}

}  // namespace hspec
