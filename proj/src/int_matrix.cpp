#include "gkz/int_matrix.hpp"

#include <cctype>
#include <sstream>

#include "gkz/errors.hpp"

namespace gkz {

IntMatrix::IntMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ParseError, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::ParseError, "ragged matrix rows");
    for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, size_t rows) {
  IntMatrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

IntVector IntMatrix::row(size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(size_t j) const {
  IntVector c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const size_t> idx) const {
  IntMatrix m(rows_, idx.size());
  for (size_t k = 0; k < idx.size(); ++k)
    for (size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  IntVector y(rows_, Integer(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RationalVector IntMatrix::apply(std::span<const Rational> x) const {
  RationalVector y(rows_, Rational(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) y[i] += Rational((*this)(i, j)) * x[j];
  return y;
}

void IntMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Integer& k) {
  if (k == 0) return;
  for (size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Integer& k) {
  if (k == 0) return;
  for (size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(size_t r) {
  for (size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(size_t c) {
  for (size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

bool IntMatrix::spans_lattice() const {
  // Column echelon form by unimodular column operations; the lattice is Z^d
  // iff every row gets a pivot of absolute value one.
  IntMatrix m = *this;
  size_t pivot_col = 0;
  for (size_t r = 0; r < rows_; ++r) {
    if (pivot_col >= cols_) return false;
    for (;;) {
      size_t best = cols_;
      for (size_t j = pivot_col; j < cols_; ++j) {
        if (m(r, j) == 0) continue;
        if (best == cols_ || abs(m(r, j)) < abs(m(r, best))) best = j;
      }
      if (best == cols_) return false;
      m.swap_cols(pivot_col, best);
      bool done = true;
      for (size_t j = pivot_col + 1; j < cols_; ++j) {
        if (m(r, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, pivot_col).get_mpz_t());
        m.add_col_multiple(j, pivot_col, -q);
        if (m(r, j) != 0) done = false;
      }
      if (done) break;
    }
    if (abs(m(r, pivot_col)) != 1) return false;
    ++pivot_col;
  }
  return true;
}

size_t IntMatrix::rank() const {
  RationalMatrix rm(rows_, RationalVector(cols_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) rm[i][j] = (*this)(i, j);
  return rational_rank(rm, cols_);
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::vector<IntVector> rows;
  std::string cur;
  auto flush = [&] {
    bool blank = true;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) rows.push_back(parse_int_vector(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ';' || c == '\n') flush();
    else cur.push_back(c);
  }
  flush();
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size() || r.empty())
      throw Error(ErrorCode::ParseError, "matrix rows must be non-empty and of equal length");
  return from_rows(rows);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j).get_str();
    }
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<size_t> row_reduce(RationalMatrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rational_rank(const RationalMatrix& rows, size_t cols) {
  RationalMatrix m = rows;
  return row_reduce(m, cols).size();
}

std::vector<RationalVector> rational_nullspace(const RationalMatrix& m, size_t cols) {
  RationalMatrix r = m;
  auto pivots = row_reduce(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVector primitive_integer_vector(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  IntVector z(v.size());
  for (size_t i = 0; i < v.size(); ++i) z[i] = Rational(v[i] * l).get_num();
  Integer g = gcd_of(z);
  if (g > 1)
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return z;
}

std::vector<IntVector> annihilator_basis(const std::vector<IntVector>& vectors, size_t dim) {
  RationalMatrix m;
  for (const auto& v : vectors) m.push_back(to_rational(v));
  std::vector<IntVector> out;
  for (const auto& b : rational_nullspace(m, dim)) out.push_back(primitive_integer_vector(b));
  return out;
}

}  // namespace gkz
