#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcirc {

enum class ErrorCode {
  parse_error,
  non_square,
  non_symmetric,
  dimension_mismatch,
  not_unimodular,
  odd_diagonal,
  nonpositive,
  degenerate_torsion,
  not_hyperbolic,
  empty_string,
  entry_below_two,
  malformed_params,
  special_case,
  not_in_family,
  dangling_edge,
  duplicate_vertex,
  unknown_vertex,
  too_many_cycles,
  not_a_tree,
  same_vertex,
  not_cyclic,
  unsupported_word,
  bad_framing,
  chain_too_short,
  bad_index,
  finite_order,
  malformed_descriptor,
  internal,
};

/// Stable lowercase identifier, used verbatim in CLI `error=<code>` lines.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qcirc
