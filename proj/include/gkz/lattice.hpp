#pragma once

#include <optional>
#include <vector>

#include "gkz/int_matrix.hpp"

namespace gkz {

// B = C * D1 * D2 * M with C, M unimodular, D1 = diag(e), D2 = (I_d | 0).
struct SmithDecomposition {
  IntMatrix C;   // d x d
  IntMatrix D1;  // d x d diagonal
  IntMatrix D2;  // d x n
  IntMatrix M;   // n x n
  IntVector elementary_divisors;

  // D2 * M; its columns generate Z^d.
  IntMatrix lattice_matrix() const;
};

// Full unimodular bookkeeping for arbitrary rank: left * S * right == input,
// left_inv * left == I, right * right_inv == I. S is diagonal with
// positive entries s_0 | s_1 | ... | s_{rank-1} followed by zeros.
struct SmithForm {
  IntMatrix S;
  IntMatrix left, left_inv;
  IntMatrix right, right_inv;
  size_t rank = 0;
};

SmithForm smith_form(const IntMatrix& m);

// Throws RankDeficient when the columns do not span Q^d.
SmithDecomposition smith_decompose(const IntMatrix& b);

// Prepend a row of ones and the column (1,0,...,0).
IntMatrix homogenize(const IntMatrix& a);

// True iff `a` has the shape produced by homogenize().
bool is_homogenization(const IntMatrix& a);
// Inverse of homogenize(); requires is_homogenization(a).
IntMatrix dehomogenize(const IntMatrix& a);

// Canonical Z-basis of ker_Z(A): Hermite form with pivots chosen from the
// last coordinate backwards, pivots positive.
std::vector<IntVector> lattice_kernel(const IntMatrix& a);

// Some integer x with m * x == b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b);

// h in Z^d with h . a_i == 1 for every column, if one exists.
std::optional<IntVector> homogeneity_vector(const IntMatrix& a);

// Canonical row-Hermite basis of the lattice spanned by `vectors`.
std::vector<IntVector> canonical_lattice_basis(std::vector<IntVector> vectors, size_t dim);

// Lattice spanned by the columns of a equals the one spanned by the columns of b.
bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace gkz
