#pragma once

#include <stdexcept>
#include <string>

namespace hspec {

enum class errc {
  empty_edge,
  vertex_out_of_range,
  duplicate_vertex_in_edge,
  duplicate_edge,
  type_exceeds_n,
  invalid_arity,
  too_large,
  dimension_mismatch,
  non_positive_entry,
  invalid_simplex_vector,
  no_edges,
  not_converged,
  edge_larger_than_rank,
  parse_error,
  file_not_found,
};

const char* errc_name(errc code);

/// Library error with a machine-checkable code. `edge_index` is the 0-based
/// position of the offending edge in the caller's input where that applies,
/// otherwise -1.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, long edge_index = -1)
      : std::runtime_error(std::move(message)),
        code_(code),
        edge_index_(edge_index) {}

  errc code() const noexcept { return code_; }
  long edge_index() const noexcept { return edge_index_; }

 private:
  errc code_;
  long edge_index_;
};

/// An iterative solver hit its iteration cap. Carries the last
/// Collatz-Wielandt bracket so callers can report how close it got.
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::string message, long iterations, double lambda_lo,
                   double lambda_hi)
      : Error(errc::not_converged, std::move(message)),
        iterations_(iterations),
        lambda_lo_(lambda_lo),
        lambda_hi_(lambda_hi) {}

  long iterations() const noexcept { return iterations_; }
  double lambda_lo() const noexcept { return lambda_lo_; }
  double lambda_hi() const noexcept { return lambda_hi_; }

 private:
  long iterations_;
  double lambda_lo_;
  double lambda_hi_;
};

}  // namespace hspec
