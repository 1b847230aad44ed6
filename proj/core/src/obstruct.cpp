#include "qcirc/obstruct.hpp"

#include <sstream>

#include "qcirc/error.hpp"
#include "qcirc/int_string.hpp"

namespace qcirc::obstruct {

using linalg::IntMatrix;
using linalg::Integer;

SurgeryPresentation SurgeryPresentation::from_matrix(IntMatrix m) {
  if (!m.is_square()) throw Error(ErrorCode::non_square, "linking matrix must be square");
  if (!m.is_symmetric()) throw Error(ErrorCode::non_symmetric, "linking matrix must be symmetric");
  return SurgeryPresentation{std::move(m)};
}

namespace {

void check_dims(const SurgeryPresentation& p, const KnotClass& k) {
  if (k.kappa.size() != p.L.rows()) {
    throw Error(ErrorCode::dimension_mismatch, "kappa has length " + std::to_string(k.kappa.size()) +
                                                   ", presentation has " + std::to_string(p.L.rows()) + " components");
  }
}

}  // namespace

bool has_infinite_order(const SurgeryPresentation& p, const KnotClass& k) {
  check_dims(p, k);
  const std::size_t n = p.L.rows();
  IntMatrix augmented(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = p.L(r, c);
    augmented(r, n) = k.kappa[r];
  }
  return linalg::rank(augmented) > linalg::rank(p.L);
}

std::pair<SurgeryPresentation, linalg::AbelianGroupDesc> attach_two_handle(const SurgeryPresentation& p,
                                                                           const KnotClass& k) {
  if (!has_infinite_order(p, k)) {
    throw Error(ErrorCode::finite_order, "knot class has finite order in H1; attaching does not reduce b1");
  }
  const std::size_t n = p.L.rows();
  IntMatrix bordered(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) bordered(r, c) = p.L(r, c);
    bordered(r, n) = k.kappa[r];
    bordered(n, r) = k.kappa[r];
  }
  bordered(n, n) = k.framing;
  linalg::AbelianGroupDesc h = linalg::abelian_group_of(bordered);
  const linalg::AbelianGroupDesc before = p.homology();
  if (h.free_rank + 1 != before.free_rank) {
    throw Error(ErrorCode::internal, "attach_two_handle: free rank did not drop by one");
  }
  return {SurgeryPresentation{std::move(bordered)}, std::move(h)};
}

std::string_view to_string(SquareTest t) { return t == SquareTest::pass ? "pass" : "fail"; }

SquareTest square_order_obstruction(const Integer& torsion_order) {
  if (torsion_order <= 0) {
    throw Error(ErrorCode::nonpositive, "torsion order must be positive, got " + torsion_order.get_str());
  }
  return linalg::is_perfect_square(torsion_order) ? SquareTest::pass : SquareTest::fail;
}

int rohlin_mu(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::non_square, "rohlin_mu: matrix must be square");
  if (!m.is_symmetric()) throw Error(ErrorCode::non_symmetric, "rohlin_mu: matrix must be symmetric");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (mpz_odd_p(m(i, i).get_mpz_t())) {
      throw Error(ErrorCode::odd_diagonal, "rohlin_mu: diagonal entry " + std::to_string(i) + " is odd");
    }
  }
  const Integer d = linalg::det(m);
  if (abs(d) != 1) throw Error(ErrorCode::not_unimodular, "rohlin_mu: |det| = " + Integer(abs(d)).get_str() + ", not 1");
  long s = linalg::signature(m) % 16;
  if (s < 0) s += 16;
  return static_cast<int>(s / 8);
}

KnotClass parse_knot_class(std::string_view text) {
  std::istringstream in{std::string(text)};
  KnotClass k;
  bool have_kappa = false;
  bool have_framing = false;
  for (std::string tok; in >> tok;) {
    if (tok.rfind("kappa=", 0) == 0 && !have_kappa) {
      for (std::int64_t v : parse_int_string(tok.substr(6)).entries) k.kappa.emplace_back(static_cast<long>(v));
      have_kappa = true;
    } else if (tok.rfind("framing=", 0) == 0 && !have_framing) {
      const IntString f = parse_int_string(tok.substr(8));
      if (f.size() != 1) throw Error(ErrorCode::parse_error, "framing must be a single integer");
      k.framing = static_cast<long>(f[0]);
      have_framing = true;
    } else {
      throw Error(ErrorCode::parse_error, "unexpected token '" + tok + "' in knot class");
    }
  }
  if (!have_kappa || !have_framing) throw Error(ErrorCode::parse_error, "knot class needs kappa=.. and framing=..");
  return k;
}

std::string format_knot_class(const KnotClass& k) {
  std::string out = "kappa=";
  for (std::size_t i = 0; i < k.kappa.size(); ++i) {
    if (i) out += ',';
    out += k.kappa[i].get_str();
  }
  return out + " framing=" + k.framing.get_str();
}

}  // namespace qcirc::obstruct
