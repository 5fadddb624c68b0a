#pragma once

#include <vector>

#include "gkz/int_matrix.hpp"
#include "gkz/weyl.hpp"

namespace gkz {

// B = C * D1 * A with A = D2 * M. The Laurent family is -sum_i l_i y^{b_i};
// only its exponent matrix B is kept.
struct FamilyData {
  IntMatrix B, C, D1, D2, M;
  IntVector e;
  IntMatrix A;
};

FamilyData factor_B(const IntMatrix& b);

enum class IndexKind { I, IPrime };

std::string_view index_kind_name(IndexKind kind);

struct IndexSet {
  IndexKind kind = IndexKind::I;
  IntVector e;
  std::vector<RationalVector> classes;  // (0, gamma) with gamma in prod [0, e_k - 1] / e_k
  std::vector<RationalVector> members;  // one representative per class, in Q^{d+1}
  RationalVector base;                  // starting point of the representative search
};

constexpr long kDefaultSectionRadius = 6;

IndexSet index_sets(const IntMatrix& b, IndexKind kind, long radius = kDefaultSectionRadius);
// Same search with the homogenization of a and explicitly given divisors.
IndexSet index_sets(const IntMatrix& a, std::span<const Integer> e, IndexKind kind,
                    long radius = kDefaultSectionRadius);

// coefficient * d0^{exponents[0]} d1^{exponents[1]} ... ; d0 may carry a
// negative (formal) exponent.
struct PsiImage {
  Rational coefficient = 1;
  IntVector exponents;

  // The image multiplied on the left by d_i.
  PsiImage times_partial(size_t i) const;
  std::string to_string() const;
  friend bool operator==(const PsiImage&, const PsiImage&) = default;
};

PsiImage psi_image(std::span<const Integer> m, const Integer& s);

// The action of d/d lambda_i on the monomial data (m, s).
std::pair<IntVector, Integer> psi_source_derivative(std::span<const Integer> m, const Integer& s,
                                                    size_t i);

// sum_i a_ki l_i d_i over the variables 1..n of the homogenization, k = 1..d.
std::vector<WeylElement> psi_kernel_sections(const IntMatrix& a);

}  // namespace gkz
