#include "qcirc/error.hpp"

namespace qcirc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::non_square: return "non_square";
    case ErrorCode::non_symmetric: return "non_symmetric";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::not_unimodular: return "not_unimodular";
    case ErrorCode::odd_diagonal: return "odd_diagonal";
    case ErrorCode::nonpositive: return "nonpositive";
    case ErrorCode::degenerate_torsion: return "degenerate_torsion";
    case ErrorCode::not_hyperbolic: return "not_hyperbolic";
    case ErrorCode::empty_string: return "empty_string";
    case ErrorCode::entry_below_two: return "entry_below_two";
    case ErrorCode::malformed_params: return "malformed_params";
    case ErrorCode::special_case: return "special_case";
    case ErrorCode::not_in_family: return "not_in_family";
    case ErrorCode::dangling_edge: return "dangling_edge";
    case ErrorCode::duplicate_vertex: return "duplicate_vertex";
    case ErrorCode::unknown_vertex: return "unknown_vertex";
    case ErrorCode::too_many_cycles: return "too_many_cycles";
    case ErrorCode::not_a_tree: return "not_a_tree";
    case ErrorCode::same_vertex: return "same_vertex";
    case ErrorCode::not_cyclic: return "not_cyclic";
    case ErrorCode::unsupported_word: return "unsupported_word";
    case ErrorCode::bad_framing: return "bad_framing";
    case ErrorCode::chain_too_short: return "chain_too_short";
    case ErrorCode::bad_index: return "bad_index";
    case ErrorCode::finite_order: return "finite_order";
    case ErrorCode::malformed_descriptor: return "malformed_descriptor";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace qcirc
