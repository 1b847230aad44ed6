#pragma once

// Exact integer linear algebra: determinants, Smith normal form, cokernels
// and signatures of integer matrices. Everything is GMP-backed; there is no
// floating point anywhere in this module.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qcirc::linalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// U * A * V == D with U, V unimodular and D diagonal with a divisor chain.
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::size_t source_rows = 0;
  std::size_t source_cols = 0;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
};

/// Z^free_rank (+) Z/t1 (+) ... (+) Z/tk with t1 | t2 | ... | tk, all ti >= 2.
struct AbelianGroupDesc {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_factors;

  Integer torsion_order() const;

  friend bool operator==(const AbelianGroupDesc&, const AbelianGroupDesc&) = default;
};

Integer det(const IntMatrix& m);
SNFResult snf(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Cokernel of m acting on column vectors, i.e. Z^rows / m Z^cols.
AbelianGroupDesc abelian_group_of(const IntMatrix& m);

/// Sylvester signature (positive minus negative inertia).
long signature(const IntMatrix& m);

/// Positive and negative inertia indices of a symmetric matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const IntMatrix& m);

bool is_perfect_square(const Integer& n);

/// "rows cols" followed by rows*cols whitespace-separated integers.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

}  // namespace qcirc::linalg
