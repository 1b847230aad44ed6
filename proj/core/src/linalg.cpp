#include "qcirc/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qcirc/error.hpp"

namespace qcirc::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::dimension_mismatch, "entry count does not match rows*cols");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::dimension_mismatch, "ragged matrix literal");
    }
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix product: inner dimensions differ");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

Integer AbelianGroupDesc::torsion_order() const {
  Integer order = 1;
  for (const auto& t : torsion_factors) order *= t;
  return order;
}

// Bareiss fraction-free elimination. Every division below is exact.
Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::non_square, "det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer g = gcd(a(r, c), a(i, c));
      Integer fr = a(i, c) / g;
      Integer fi = a(r, c) / g;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * fi - a(r, j) * fr;
    }
    ++r;
  }
  return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

// col[dst] += q * col[src]
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

}  // namespace

SNFResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (!found || abs(d(i, j)) < abs(d(pr, pc))) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) goto done;

      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        Integer neg = -q;
        add_row(d, i, t, neg);
        add_row(u, i, t, neg);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        Integer neg = -q;
        add_col(d, j, t, neg);
        add_col(v, j, t, neg);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot is isolated; enforce the divisor chain on the trailing block.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row(d, t, i, Integer(1));
            add_row(u, t, i, Integer(1));
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
done:
  return SNFResult{std::move(d), std::move(u), std::move(v), rows, cols};
}

AbelianGroupDesc abelian_group_of(const IntMatrix& m) {
  const SNFResult s = snf(m);
  AbelianGroupDesc g;
  std::size_t nonzero = 0;
  for (const auto& x : s.diagonal()) {
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) g.torsion_factors.push_back(x);
  }
  g.free_rank = m.rows() - nonzero;
  return g;
}

Inertia inertia(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::non_symmetric, "signature: matrix is not symmetric");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = Rational(m.entries()[i]);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia out;
  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return at(i, i) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational piv = at(p, p);
      (piv > 0 ? out.positive : out.negative) += 1;
      active.erase(diag);
      for (std::size_t j : active) {
        if (at(j, p) == 0) continue;
        const Rational f = at(j, p) / piv;
        for (std::size_t k : active) at(j, k) -= f * at(p, k);
      }
      continue;
    }

    // Zero diagonal: split off a hyperbolic plane [[0,b],[b,0]] (inertia 1,1).
    std::size_t hi = n, hj = n;
    for (std::size_t x = 0; x < active.size() && hi == n; ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        if (at(active[x], active[y]) != 0) {
          hi = active[x];
          hj = active[y];
          break;
        }
      }
    }
    if (hi == n) {
      out.zero += active.size();
      break;
    }
    const Rational b = at(hi, hj);
    out.positive += 1;
    out.negative += 1;
    std::erase(active, hi);
    std::erase(active, hj);
    // Schur complement against P = [[0,b],[b,0]], P^-1 = [[0,1/b],[1/b,0]].
    std::vector<Rational> ci(active.size()), cj(active.size());
    for (std::size_t x = 0; x < active.size(); ++x) {
      ci[x] = at(active[x], hi);
      cj[x] = at(active[x], hj);
    }
    for (std::size_t x = 0; x < active.size(); ++x) {
      for (std::size_t y = 0; y < active.size(); ++y) {
        at(active[x], active[y]) -= (ci[x] * cj[y] + cj[x] * ci[y]) / b;
      }
    }
  }
  return out;
}

long signature(const IntMatrix& m) {
  const Inertia in = inertia(m);
  return static_cast<long>(in.positive) - static_cast<long>(in.negative);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  return rem == 0;
}

namespace {

Integer parse_integer_token(const std::string& tok) {
  std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (start == tok.size()) throw Error(ErrorCode::parse_error, "expected integer, got '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw Error(ErrorCode::parse_error, "expected integer, got '" + tok + "'");
  }
  Integer v(tok.substr(start), 10);
  return tok[0] == '-' ? Integer(-v) : v;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.size() < 2) throw Error(ErrorCode::parse_error, "matrix: missing 'rows cols' header");
  const Integer r = parse_integer_token(tokens[0]);
  const Integer c = parse_integer_token(tokens[1]);
  if (r < 0 || c < 0 || !r.fits_ulong_p() || !c.fits_ulong_p()) {
    throw Error(ErrorCode::parse_error, "matrix: bad dimensions");
  }
  const std::size_t rows = r.get_ui();
  const std::size_t cols = c.get_ui();
  if (tokens.size() != 2 + rows * cols) {
    throw Error(ErrorCode::parse_error, "matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                                            std::to_string(tokens.size() - 2));
  }
  std::vector<Integer> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 2; i < tokens.size(); ++i) entries.push_back(parse_integer_token(tokens[i]));
  return IntMatrix(rows, cols, std::move(entries));
}

std::string format_matrix(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace qcirc::linalg
