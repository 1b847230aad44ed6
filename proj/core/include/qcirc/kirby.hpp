#pragma once

// Blowup / blowdown rewriting on cyclic framed chains of unknots.
//
// A chain (f1,...,fn; eps) is the surgery diagram of a cyclic plumbing; its
// torus-bundle monodromy is eps * T^f1 S ... T^fn S. Every move preserves the
// monodromy as an exact SL(2,Z) matrix: moves that cross the seam of the
// stored list (or act on a one-component chain) would only preserve it up to
// conjugation, so the state also carries a conjugating frame F and the
// monodromy is eps * F * (prod T^fi S) * F^-1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcirc/int_string.hpp"
#include "qcirc/sl2.hpp"

namespace qcirc::kirby {

struct ChainState {
  std::vector<std::int64_t> framings;
  int eps = +1;
  sl2::SL2Element frame;  // identity unless a seam move happened

  friend bool operator==(const ChainState&, const ChainState&) = default;
};

/// The chain of a word: framings -a_i, sign from the word.
ChainState chain_from_word(const sl2::MonodromyWord& w);

sl2::SL2Element chain_monodromy(const ChainState& c);

/// Removes the +-1 framed component i (n >= 3). Both cyclic neighbors change
/// by -f_i; eps flips when f_i = +1.
ChainState blow_down(const ChainState& c, std::size_t i);

/// Inserts a component with framing e = +-1 on edge i (between components i
/// and i+1 mod n). Both neighbors change by +e; eps flips when e = +1. On a
/// one-component chain the single component changes by 2e.
ChainState blow_up(const ChainState& c, std::size_t edge, int e);

/// Same framings up to cyclic rotation.
bool same_up_to_rotation(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

struct Move {
  enum class Kind { up, down };
  Kind kind = Kind::down;
  std::size_t index = 0;
  int framing = -1;  // up only

  friend bool operator==(const Move&, const Move&) = default;
};

ChainState apply(const ChainState& c, const Move& m);

/// "up <edge> <+1|-1>" or "down <index>"
Move parse_move(std::string_view line);
std::string format_move(const Move& m);
/// One move per line; '#' comments and blank lines are skipped.
std::vector<Move> parse_script(std::string_view text);

/// "chain -3,-1,-3 sign=+" (the leading "chain" and the sign are optional).
ChainState parse_chain(std::string_view text);
/// "framings=-2,-2 sign=+" plus " frame=a,b,c,d" when the frame is not the identity.
std::string format_chain(const ChainState& c);

struct DualizeResult {
  ChainState start;
  ChainState terminal;
  std::vector<Move> script;
  IntString d;  // terminal framings are (-d1..-dp, d1..dp) up to rotation
};

/// Runs +1 blowups followed by -1 blowdowns on the chain of a family string
/// until the e-block is absorbed. The terminal framings and the exact
/// monodromy equality with the start are checked before returning.
DualizeResult dualize_procedure(const IntString& a);

}  // namespace qcirc::kirby
