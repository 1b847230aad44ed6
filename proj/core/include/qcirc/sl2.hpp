#pragma once

// SL(2,Z) monodromy algebra for torus bundles over the circle.
//
// Words are stored by their exponents: (a1,...,an; sign) stands for
// sign * T^-a1 S ... T^-an S with T = [[1,1],[0,1]] and S = [[0,1],[-1,0]].

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "qcirc/int_string.hpp"

namespace qcirc::sl2 {

using Integer = mpz_class;

/// [[a, b], [c, d]] with ad - bc = 1, checked on construction.
class SL2Element {
 public:
  SL2Element();  // identity
  SL2Element(Integer a, Integer b, Integer c, Integer d);

  static SL2Element identity() { return {}; }
  static SL2Element T();
  static SL2Element S();
  /// T^n for any integer n.
  static SL2Element T_power(const Integer& n);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  Integer trace() const { return a_ + d_; }
  SL2Element inverse() const;
  SL2Element negated() const;

  friend SL2Element operator*(const SL2Element& x, const SL2Element& y);
  friend bool operator==(const SL2Element&, const SL2Element&) = default;

 private:
  Integer a_, b_, c_, d_;
};

struct MonodromyWord {
  IntString coeffs;
  int sign = +1;

  friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;
};

enum class TraceKind { elliptic, parabolic, hyperbolic };
enum class TraceSign { positive, negative, zero_trace };

struct Classification {
  TraceKind kind;
  TraceSign sign;

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string_view to_string(TraceKind k);
std::string_view to_string(TraceSign s);

/// T^f S, the factor contributed by one chain component of framing f.
SL2Element chain_factor(const Integer& framing);

SL2Element word_to_matrix(const MonodromyWord& w);
Classification classify(const SL2Element& m);

/// |tr(m) - 2|, the order of the torsion of H1 of the bundle with monodromy m.
/// Throws degenerate_torsion when tr(m) == 2.
Integer torsion_order(const SL2Element& m);

struct SquareTraceCheck {
  Integer value;  // tr(m)^2 - 4
  bool is_square = false;
};
/// Torsion order of the bundle with monodromy m^2. m must be hyperbolic.
SquareTraceCheck square_trace_check(const SL2Element& m);

bool rotation_equivalent(const IntString& a, const IntString& b);

/// "3,2,2" or "-:2,2" (a leading "-:" / "+:" sets the gluing sign).
MonodromyWord parse_word(std::string_view text);
std::string format_word(const MonodromyWord& w);

/// Accepts a word (see parse_word) or a signed parabolic power "T^n" / "-T^n".
SL2Element parse_monodromy(std::string_view text);

/// "a,b,c,d" in row-major order.
std::string format_element(const SL2Element& m);

}  // namespace qcirc::sl2
