#include "qcirc/sl2.hpp"

#include "qcirc/error.hpp"

namespace qcirc::sl2 {

SL2Element::SL2Element() : a_(1), b_(0), c_(0), d_(1) {}

SL2Element::SL2Element(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw Error(ErrorCode::not_unimodular, "SL2Element: ad - bc != 1");
  }
}

SL2Element SL2Element::T() { return {1, 1, 0, 1}; }
SL2Element SL2Element::S() { return {0, 1, -1, 0}; }
SL2Element SL2Element::T_power(const Integer& n) { return {1, n, 0, 1}; }

SL2Element SL2Element::inverse() const { return {d_, -b_, -c_, a_}; }
SL2Element SL2Element::negated() const { return {-a_, -b_, -c_, -d_}; }

SL2Element operator*(const SL2Element& x, const SL2Element& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

std::string_view to_string(TraceKind k) {
  switch (k) {
    case TraceKind::elliptic: return "elliptic";
    case TraceKind::parabolic: return "parabolic";
    case TraceKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::string_view to_string(TraceSign s) {
  switch (s) {
    case TraceSign::positive: return "positive";
    case TraceSign::negative: return "negative";
    case TraceSign::zero_trace: return "zero-trace";
  }
  return "?";
}

SL2Element chain_factor(const Integer& framing) {
  // T^f S = [[1,f],[0,1]] [[0,1],[-1,0]]
  return {-framing, 1, -1, 0};
}

SL2Element word_to_matrix(const MonodromyWord& w) {
  SL2Element m;
  for (std::int64_t a : w.coeffs.entries) m = m * chain_factor(Integer(-a));
  return w.sign < 0 ? m.negated() : m;
}

Classification classify(const SL2Element& m) {
  const Integer tr = m.trace();
  const Integer mag = abs(tr);
  Classification c{};
  c.kind = mag < 2 ? TraceKind::elliptic : (mag == 2 ? TraceKind::parabolic : TraceKind::hyperbolic);
  c.sign = tr > 0 ? TraceSign::positive : (tr < 0 ? TraceSign::negative : TraceSign::zero_trace);
  return c;
}

Integer torsion_order(const SL2Element& m) {
  const Integer tr = m.trace();
  if (tr == 2) {
    throw Error(ErrorCode::degenerate_torsion, "parabolic-positive: torsion formula degenerate");
  }
  return abs(tr - 2);
}

SquareTraceCheck square_trace_check(const SL2Element& m) {
  const Integer tr = m.trace();
  if (abs(tr) <= 2) {
    throw Error(ErrorCode::not_hyperbolic, "square check needs |trace| > 2, got trace " + tr.get_str());
  }
  SquareTraceCheck out;
  out.value = tr * tr - 4;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), out.value.get_mpz_t());
  out.is_square = rem == 0;
  return out;
}

bool rotation_equivalent(const IntString& a, const IntString& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a.rotated(r) == b) return true;
  }
  return false;
}

MonodromyWord parse_word(std::string_view text) {
  MonodromyWord w;
  if (text.size() >= 2 && text[1] == ':' && (text[0] == '-' || text[0] == '+')) {
    w.sign = text[0] == '-' ? -1 : +1;
    text.remove_prefix(2);
  }
  w.coeffs = parse_int_string(text);
  return w;
}

std::string format_word(const MonodromyWord& w) {
  std::string body = format_int_string(w.coeffs);
  return w.sign < 0 ? "-:" + body : body;
}

SL2Element parse_monodromy(std::string_view text) {
  std::string_view rest = text;
  int sign = +1;
  if (!rest.empty() && (rest[0] == '-' || rest[0] == '+') && rest.size() > 1 && rest[1] == 'T') {
    sign = rest[0] == '-' ? -1 : +1;
    rest.remove_prefix(1);
  }
  if (!rest.empty() && rest[0] == 'T') {
    rest.remove_prefix(1);
    Integer n = 1;
    if (!rest.empty()) {
      if (rest[0] != '^' || rest.size() < 2) {
        throw Error(ErrorCode::parse_error, "expected T^n, got '" + std::string(text) + "'");
      }
      rest.remove_prefix(1);
      IntString exponent = parse_int_string(rest);
      if (exponent.size() != 1) throw Error(ErrorCode::parse_error, "bad exponent in '" + std::string(text) + "'");
      n = Integer(static_cast<long>(exponent[0]));
    }
    SL2Element m = SL2Element::T_power(n);
    return sign < 0 ? m.negated() : m;
  }
  return word_to_matrix(parse_word(text));
}

std::string format_element(const SL2Element& m) {
  return m.a().get_str() + "," + m.b().get_str() + "," + m.c().get_str() + "," + m.d().get_str();
}

}  // namespace qcirc::sl2
