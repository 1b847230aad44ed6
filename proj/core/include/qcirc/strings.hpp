#pragma once

// Dual strings of linear chains and the hyperbolic family of monodromy
// strings whose torus bundles bound rational homology circles.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcirc/int_string.hpp"

namespace qcirc::strings {

/// Negative continued fraction b1 - 1/(b2 - 1/(... - 1/bk)), reduced.
/// Requires a nonempty string with every entry >= 2, so that p > q >= 1.
mpq_class cf_value(const IntString& b);

/// Riemenschneider dual of a string with every entry >= 2.
///
/// Writing b = (2^[m1], 3+n1, 2^[m2], 3+n2, ..., 3+nj, 2^[m(j+1)]), the dual is
/// (2+m1, 2^[n1], 3+m2, 2^[n2], ..., 3+mj, 2^[nj], 2+m(j+1)); the all-2 string
/// of length k has dual (k+1). The result is checked against cf_value:
/// cf(b) = p/q implies cf(dual) = p/(p-q).
IntString dual_string(const IntString& b);

struct FamilyParams {
  std::size_t k = 0;
  std::vector<std::int64_t> xs;  // 2k+1 entries, all >= 0

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// (3+x1, 2^[x2], 3+x3, ..., 3+x(2k+1), 2^[x1], 3+x2, 2^[x3], ..., 3+x(2k), 2^[x(2k+1)])
IntString family_string(const FamilyParams& p);

/// Parameters whose family string is a rotation of `a`, if any. Rotations are
/// tried by increasing start index; the first match wins.
std::optional<FamilyParams> recognize_family(const IntString& a);

struct SplitRelabel {
  IntString d;
  IntString e;
};

/// Splits a family string (up to rotation, other than (3)) into the relabeled
/// d-block and the e-block. The first and last entries of the first half are
/// decremented by one each (a single-entry first half by two), and
/// dual_string(d) == e is guaranteed.
SplitRelabel split_relabel(const IntString& a);

/// "k=1;x=0,0,0"
FamilyParams parse_family_params(std::string_view text);
std::string format_family_params(const FamilyParams& p);

}  // namespace qcirc::strings
