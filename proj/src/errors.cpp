#include "hspec/errors.hpp"

namespace hspec {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_edge: return "EmptyEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::duplicate_vertex_in_edge: return "DuplicateVertexInEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::type_exceeds_n: return "TypeExceedsN";
    case errc::invalid_arity: return "InvalidArity";
    case errc::too_large: return "TooLarge";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_positive_entry: return "NonPositiveEntry";
    case errc::invalid_simplex_vector: return "InvalidSimplexVector";
    case errc::no_edges: return "NoEdges";
    case errc::not_converged: return "NotConverged";
    case errc::edge_larger_than_rank: return "EdgeLargerThanRank";
    case errc::parse_error: return "ParseError";
    case errc::file_not_found: return "FileNotFound";
  }
  return "UnknownError";
}

}  // namespace hspec
