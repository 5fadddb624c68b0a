#include "gkz/lattice.hpp"

#include <algorithm>

#include "gkz/errors.hpp"

namespace gkz {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Keeps input == left * S * right while S is transformed by elementary ops.
class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& m)
      : f_{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.rows()),
           IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols()), 0} {}

  SmithForm run() {
    IntMatrix& s = f_.S;
    const size_t d = s.rows(), n = s.cols();
    size_t t = 0;
    for (; t < std::min(d, n); ++t) {
      if (!reduce_block(t)) break;
      if (s(t, t) < 0) negate_row(t);
    }
    f_.rank = t;
    return std::move(f_);
  }

 private:
  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    f_.S.swap_rows(a, b);
    f_.left.swap_cols(a, b);
    f_.left_inv.swap_rows(a, b);
  }
  void swap_cols(size_t a, size_t b) {
    if (a == b) return;
    f_.S.swap_cols(a, b);
    f_.right.swap_rows(a, b);
    f_.right_inv.swap_cols(a, b);
  }
  // row a += k * row b
  void add_row(size_t a, size_t b, const Integer& k) {
    if (k == 0) return;
    f_.S.add_row_multiple(a, b, k);
    f_.left.add_col_multiple(b, a, -k);
    f_.left_inv.add_row_multiple(a, b, k);
  }
  // col a += k * col b
  void add_col(size_t a, size_t b, const Integer& k) {
    if (k == 0) return;
    f_.S.add_col_multiple(a, b, k);
    f_.right.add_row_multiple(b, a, -k);
    f_.right_inv.add_col_multiple(a, b, k);
  }
  void negate_row(size_t a) {
    f_.S.negate_row(a);
    f_.left.negate_col(a);
    f_.left_inv.negate_row(a);
  }

  // Brings the block S[t.., t..] to the form pivot (+) rest with the pivot
  // dividing every entry of the rest. Returns false if the block is zero.
  bool reduce_block(size_t t) {
    IntMatrix& s = f_.S;
    const size_t d = s.rows(), n = s.cols();
    for (;;) {
      size_t bi = d, bj = n;
      for (size_t i = t; i < d; ++i)
        for (size_t j = t; j < n; ++j)
          if (s(i, j) != 0 && (bi == d || abs(s(i, j)) < abs(s(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == d) return false;
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (size_t i = t + 1; i < d; ++i) {
        if (s(i, t) == 0) continue;
        add_row(i, t, -floor_div(s(i, t), s(t, t)));
        if (s(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        add_col(j, t, -floor_div(s(t, j), s(t, t)));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (size_t i = t + 1; i < d && divides; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) return true;
    }
  }

  SmithForm f_;
};

}  // namespace

SmithForm smith_form(const IntMatrix& m) { return SmithWorker(m).run(); }

IntMatrix SmithDecomposition::lattice_matrix() const { return D2 * M; }

SmithDecomposition smith_decompose(const IntMatrix& b) {
  if (b.empty()) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  SmithForm f = smith_form(b);
  const size_t d = b.rows(), n = b.cols();
  if (f.rank < d)
    throw Error(ErrorCode::RankDeficient,
                "columns do not span Q^" + std::to_string(d) + " (rank " + std::to_string(f.rank) + ")");
  SmithDecomposition out{f.left, IntMatrix(d, d), IntMatrix(d, n), f.right, {}};
  for (size_t i = 0; i < d; ++i) {
    out.D1(i, i) = f.S(i, i);
    out.D2(i, i) = 1;
    out.elementary_divisors.push_back(f.S(i, i));
  }
  return out;
}

IntMatrix homogenize(const IntMatrix& a) {
  IntMatrix h(a.rows() + 1, a.cols() + 1);
  for (size_t j = 0; j <= a.cols(); ++j) h(0, j) = 1;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) h(i + 1, j + 1) = a(i, j);
  return h;
}

bool is_homogenization(const IntMatrix& a) {
  if (a.rows() < 2 || a.cols() < 2) return false;
  for (size_t j = 0; j < a.cols(); ++j)
    if (a(0, j) != 1) return false;
  for (size_t i = 1; i < a.rows(); ++i)
    if (a(i, 0) != 0) return false;
  return true;
}

IntMatrix dehomogenize(const IntMatrix& a) {
  if (!is_homogenization(a))
    throw Error(ErrorCode::InvalidArgument, "matrix is not a homogenization");
  IntMatrix r(a.rows() - 1, a.cols() - 1);
  for (size_t i = 0; i < r.rows(); ++i)
    for (size_t j = 0; j < r.cols(); ++j) r(i, j) = a(i + 1, j + 1);
  return r;
}

std::vector<IntVector> canonical_lattice_basis(std::vector<IntVector> rows, size_t dim) {
  std::vector<IntVector> pivots;  // finished rows, pivot columns descending
  std::vector<size_t> pivot_cols;
  for (size_t cc = dim; cc-- > 0;) {
    // Euclid on column cc among the remaining rows.
    for (;;) {
      size_t best = rows.size();
      for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i][cc] != 0 && (best == rows.size() || abs(rows[i][cc]) < abs(rows[best][cc])))
          best = i;
      if (best == rows.size()) break;
      bool single = true;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][cc] == 0) continue;
        Integer q = floor_div(rows[i][cc], rows[best][cc]);
        for (size_t k = 0; k < dim; ++k) rows[i][k] -= q * rows[best][k];
        if (rows[i][cc] != 0) single = false;
      }
      if (!single) continue;
      IntVector p = std::move(rows[best]);
      rows.erase(rows.begin() + static_cast<long>(best));
      if (p[cc] < 0)
        for (auto& x : p) x = -x;
      for (auto& prev : pivots) {
        Integer q = floor_div(prev[cc], p[cc]);
        for (size_t k = 0; k < dim; ++k) prev[k] -= q * p[k];
      }
      pivots.push_back(std::move(p));
      pivot_cols.push_back(cc);
      break;
    }
  }
  std::reverse(pivots.begin(), pivots.end());
  return pivots;
}

std::vector<IntVector> lattice_kernel(const IntMatrix& a) {
  SmithForm f = smith_form(a);
  std::vector<IntVector> basis;
  for (size_t j = f.rank; j < a.cols(); ++j) basis.push_back(f.right_inv.column(j));
  return canonical_lattice_basis(std::move(basis), a.cols());
}

std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b) {
  SmithForm f = smith_form(m);
  IntVector c = f.left_inv.apply(b);
  IntVector y(m.cols(), Integer(0));
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i < f.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), f.S(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), f.S(i, i).get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return f.right_inv.apply(y);
}

std::optional<IntVector> homogeneity_vector(const IntMatrix& a) {
  IntVector ones(a.cols(), Integer(1));
  return solve_integer(a.transpose(), ones);
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return canonical_lattice_basis(a.columns(), a.rows()) ==
         canonical_lattice_basis(b.columns(), b.rows());
}

}  // namespace gkz
