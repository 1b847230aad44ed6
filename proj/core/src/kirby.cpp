#include "qcirc/kirby.hpp"

#include <charconv>
#include <sstream>

#include "qcirc/error.hpp"
#include "qcirc/strings.hpp"

namespace qcirc::kirby {

namespace {

using sl2::SL2Element;

SL2Element factor(std::int64_t f) { return sl2::chain_factor(sl2::Integer(static_cast<long>(f))); }

// Same chain read from position r; the frame absorbs the prefix product so
// the monodromy is unchanged.
ChainState rotate_left(const ChainState& c, std::size_t r) {
  const std::size_t n = c.framings.size();
  r %= n;
  ChainState out;
  out.eps = c.eps;
  out.frame = c.frame;
  for (std::size_t i = 0; i < r; ++i) out.frame = out.frame * factor(c.framings[i]);
  out.framings.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.framings.push_back(c.framings[(r + i) % n]);
  return out;
}

// 0 < i < n-1: T^a S T^{-1} S T^b S = T^{a+1} S T^{b+1} S, and the +1 case
// picks up a global -I.
ChainState interior_down(ChainState c, std::size_t i) {
  const std::int64_t f = c.framings[i];
  c.framings[i - 1] -= f;
  c.framings[i + 1] -= f;
  c.framings.erase(c.framings.begin() + static_cast<std::ptrdiff_t>(i));
  if (f == 1) c.eps = -c.eps;
  return c;
}

// edge < n-1: insert between edge and edge+1.
ChainState interior_up(ChainState c, std::size_t edge, int e) {
  c.framings[edge] += e;
  c.framings[edge + 1] += e;
  c.framings.insert(c.framings.begin() + static_cast<std::ptrdiff_t>(edge + 1), e);
  if (e == 1) c.eps = -c.eps;
  return c;
}

}  // namespace

ChainState chain_from_word(const sl2::MonodromyWord& w) {
  ChainState c;
  for (std::int64_t a : w.coeffs.entries) c.framings.push_back(-a);
  c.eps = w.sign;
  return c;
}

sl2::SL2Element chain_monodromy(const ChainState& c) {
  SL2Element product;
  for (std::int64_t f : c.framings) product = product * factor(f);
  SL2Element m = c.frame * product * c.frame.inverse();
  return c.eps < 0 ? m.negated() : m;
}

ChainState blow_down(const ChainState& c, std::size_t i) {
  const std::size_t n = c.framings.size();
  if (n < 3) throw Error(ErrorCode::chain_too_short, "blow_down needs a chain of length >= 3");
  if (i >= n) throw Error(ErrorCode::bad_index, "blow_down: index " + std::to_string(i) + " out of range");
  const std::int64_t f = c.framings[i];
  if (f != 1 && f != -1) {
    throw Error(ErrorCode::bad_framing, "blow_down: component " + std::to_string(i) + " has framing " +
                                            std::to_string(f) + ", not +-1");
  }
  if (i > 0 && i + 1 < n) return interior_down(c, i);
  if (i == 0) return rotate_left(interior_down(rotate_left(c, n - 1), 1), 1);
  return rotate_left(interior_down(rotate_left(c, 1), n - 2), n - 2);
}

ChainState blow_up(const ChainState& c, std::size_t edge, int e) {
  const std::size_t n = c.framings.size();
  if (n == 0) throw Error(ErrorCode::chain_too_short, "blow_up on an empty chain");
  if (edge >= n) throw Error(ErrorCode::bad_index, "blow_up: edge " + std::to_string(edge) + " out of range");
  if (e != 1 && e != -1) throw Error(ErrorCode::bad_framing, "blow_up: framing must be +1 or -1");

  if (n == 1) {
    // T^{f+2e} S T^e S = (-I if e = +1) * T^e (T^f S) T^-e
    ChainState out;
    out.framings = {c.framings[0] + 2 * e, e};
    out.eps = e == 1 ? -c.eps : c.eps;
    out.frame = c.frame * SL2Element::T_power(sl2::Integer(-e));
    return out;
  }
  if (edge + 1 < n) return interior_up(c, edge, e);
  return rotate_left(interior_up(rotate_left(c, 1), n - 2, e), n);
}

bool same_up_to_rotation(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return sl2::rotation_equivalent(IntString(a), IntString(b));
}

ChainState apply(const ChainState& c, const Move& m) {
  return m.kind == Move::Kind::up ? blow_up(c, m.index, m.framing) : blow_down(c, m.index);
}

namespace {

std::size_t parse_index(std::string_view tok, std::string_view line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::parse_error, "bad index in move '" + std::string(line) + "'");
  }
  return v;
}

}  // namespace

Move parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.size() == 3 && tok[0] == "up") {
    Move m;
    m.kind = Move::Kind::up;
    m.index = parse_index(tok[1], line);
    if (tok[2] == "+1" || tok[2] == "1" || tok[2] == "+") {
      m.framing = 1;
    } else if (tok[2] == "-1" || tok[2] == "-") {
      m.framing = -1;
    } else {
      throw Error(ErrorCode::parse_error, "blowup framing must be +1 or -1 in '" + std::string(line) + "'");
    }
    return m;
  }
  if (tok.size() == 2 && tok[0] == "down") {
    Move m;
    m.kind = Move::Kind::down;
    m.index = parse_index(tok[1], line);
    return m;
  }
  throw Error(ErrorCode::parse_error, "expected 'up <edge> <+1|-1>' or 'down <index>', got '" + std::string(line) + "'");
}

std::string format_move(const Move& m) {
  if (m.kind == Move::Kind::up) return "up " + std::to_string(m.index) + (m.framing > 0 ? " +1" : " -1");
  return "down " + std::to_string(m.index);
}

std::vector<Move> parse_script(std::string_view text) {
  std::vector<Move> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_move(line));
  }
  return out;
}

ChainState parse_chain(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  std::size_t pos = 0;
  if (pos < tok.size() && tok[pos] == "chain") ++pos;
  if (pos >= tok.size()) throw Error(ErrorCode::parse_error, "chain: missing framings");
  ChainState c;
  c.framings = parse_int_string(tok[pos++]).entries;
  if (pos < tok.size()) {
    if (tok[pos] == "sign=+") {
      c.eps = 1;
    } else if (tok[pos] == "sign=-") {
      c.eps = -1;
    } else {
      throw Error(ErrorCode::parse_error, "chain: expected sign=+ or sign=-, got '" + tok[pos] + "'");
    }
    ++pos;
  }
  if (pos != tok.size()) throw Error(ErrorCode::parse_error, "chain: trailing text after sign");
  if (c.framings.empty()) throw Error(ErrorCode::chain_too_short, "chain: needs at least one component");
  return c;
}

std::string format_chain(const ChainState& c) {
  std::string out = "framings=" + format_int_string(IntString(c.framings)) + " sign=" + (c.eps > 0 ? "+" : "-");
  if (c.frame != SL2Element::identity()) out += " frame=" + sl2::format_element(c.frame);
  return out;
}

DualizeResult dualize_procedure(const IntString& a) {
  const strings::SplitRelabel split = strings::split_relabel(a);
  const auto params = *strings::recognize_family(a);
  const IntString canonical = strings::family_string(params);
  const std::size_t n = a.size();

  std::size_t offset = 0;
  while (a.rotated(offset) != canonical) ++offset;

  DualizeResult out;
  out.d = split.d;
  out.start = chain_from_word({a, +1});

  // j tracks the e-block entry adjacent to the growing positive block. In the
  // canonical rotation it is the last entry, next to the d1 end.
  std::size_t j = (offset + n - 1) % n;
  std::size_t remaining = split.e.size();
  ChainState state = out.start;
  auto step = [&](const Move& m) {
    state = apply(state, m);
    out.script.push_back(m);
  };

  while (remaining > 0) {
    step(Move{Move::Kind::up, j, +1});
    while (remaining > 0 && state.framings[j] == -1) {
      step(Move{Move::Kind::down, j, -1});
      j = j == 0 ? state.framings.size() - 1 : j - 1;
      --remaining;
    }
  }
  out.terminal = state;

  std::vector<std::int64_t> target;
  for (std::int64_t x : split.d.entries) target.push_back(-x);
  for (std::int64_t x : split.d.entries) target.push_back(x);
  if (!same_up_to_rotation(out.terminal.framings, target)) {
    throw Error(ErrorCode::internal, "dualize: terminal framings " + format_int_string(IntString(out.terminal.framings)) +
                                         " do not match (-d, d)");
  }
  if (chain_monodromy(out.terminal) != chain_monodromy(out.start)) {
    throw Error(ErrorCode::internal, "dualize: monodromy certificate failed");
  }
  return out;
}

}  // namespace qcirc::kirby
