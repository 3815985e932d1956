#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "hspec/comb.hpp"
#include "hspec/hypergraph.hpp"

namespace hspec {

/// The order-m adjacency tensor of a general hypergraph as an implicit
/// operator: an edge of cardinality s contributes entries s/alpha(s,m) at
/// every index tuple drawn from the edge with each vertex used at least
/// once. Evaluation never materializes the n^m entries; per edge it uses
/// the subset identity
///   sum over covering tuples of prod x  =  sum_{T subseteq e} (-1)^{|e|-|T|} sigma_T^m,
/// sigma_T = sum_{v in T} x_v, at O(2^|e|) per edge.
///
/// The numerator (edge sum times s) is divided by alpha(s,m) as the last
/// step, so coefficients stay exact rationals until one final divide.
class AdjacencyOperator {
 public:
  /// Order defaults to rank(H). Throws no_edges for an edgeless hypergraph.
  explicit AdjacencyOperator(const Hypergraph& h);

  /// Order override, used to evaluate the block of a larger tensor induced
  /// on a component; requires order >= rank(H).
  AdjacencyOperator(const Hypergraph& h, int order);

  int order() const noexcept { return m_; }
  int dim() const noexcept { return h_.vertex_count(); }
  const Hypergraph& hypergraph() const noexcept { return h_; }

  /// s/alpha(s, m) for the edge at `edge_index` (canonical edge order).
  double edge_coefficient(std::size_t edge_index) const;

  /// (A x^{m-1})_i for all i. Deterministic summation order.
  std::vector<double> apply(std::span<const double> x) const;

  /// A x^m.
  double quadratic_form(std::span<const double> x) const;

 private:
  Hypergraph h_;
  int m_;
  std::vector<double> alpha_;  // per edge: alpha(|e|, m) as double
};

/// Explicit n^m tensor, row-major with the first index slowest. Small-scale
/// oracle for the implicit operator.
struct DenseTensor {
  int order = 0;
  int dim = 0;
  std::vector<double> values;

  /// Entry at a tuple of 1-based vertex indices (size == order).
  double at(std::span<const int> index_tuple) const;

  std::vector<double> contract(std::span<const double> x) const;  // T x^{m-1}
  double full_contract(std::span<const double> x) const;          // T x^m

  /// Debug dump: header "m n", then one value per line in flat order.
  void dump(std::ostream& os) const;
};

/// Guarded at dim^order <= 1e7.
DenseTensor materialize_dense(const AdjacencyOperator& op);

}  // namespace hspec
