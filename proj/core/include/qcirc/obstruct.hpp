#pragma once

// Homology-level obstructions: 2-handle attachment along a knot class,
// the square-order test on torsion, and the Rohlin bit of an even
// unimodular linking matrix.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcirc/linalg.hpp"

namespace qcirc::obstruct {

/// Integer surgery diagram, recorded by its symmetric linking matrix.
struct SurgeryPresentation {
  linalg::IntMatrix L;

  /// Throws non_square / non_symmetric.
  static SurgeryPresentation from_matrix(linalg::IntMatrix m);
  linalg::AbelianGroupDesc homology() const { return linalg::abelian_group_of(L); }
};

/// Linking numbers of a knot with the surgery components, and its framing.
struct KnotClass {
  std::vector<linalg::Integer> kappa;
  linalg::Integer framing;
};

bool has_infinite_order(const SurgeryPresentation& p, const KnotClass& k);

/// L bordered by kappa with the framing in the corner, and its cokernel.
std::pair<SurgeryPresentation, linalg::AbelianGroupDesc> attach_two_handle(const SurgeryPresentation& p,
                                                                           const KnotClass& k);

enum class SquareTest { pass, fail };
std::string_view to_string(SquareTest t);

/// pass iff the torsion order is a perfect square. A pass is only a
/// necessary condition.
SquareTest square_order_obstruction(const linalg::Integer& torsion_order);

/// (signature mod 16) / 8 for an even symmetric matrix with |det| = 1.
int rohlin_mu(const linalg::IntMatrix& m);

/// "kappa=1,0,2 framing=-1"
KnotClass parse_knot_class(std::string_view text);
std::string format_knot_class(const KnotClass& k);

}  // namespace qcirc::obstruct
