#pragma once

#include <optional>
#include <vector>

#include "gkz/int_matrix.hpp"
#include "gkz/polynomial.hpp"
#include "gkz/weyl.hpp"

namespace gkz {

struct GKZPresentation {
  IntMatrix matrix;
  RationalVector beta;
  std::vector<WeylElement> boxes;
  std::vector<WeylElement> eulers;  // E_k - beta_k

  std::vector<WeylElement> generators() const;
};

// A polynomial in the partials, shifted by offset variables, as a Weyl element.
WeylElement partial_polynomial(const Polynomial& p, size_t nvars, size_t offset = 0);
// sum_i a_ki l_i d_i over the variables offset .. offset + n - 1
WeylElement euler_operator(const IntMatrix& a, size_t k, size_t nvars, size_t offset = 0);
WeylElement euler_field(size_t nvars);

GKZPresentation gkz_presentation(const IntMatrix& a, std::span<const Rational> beta);
GKZPresentation gkz_presentation(const IntMatrix& a, std::span<const Rational> beta,
                                 const TermOrder& order);

// Generators after setting lambda_0 = 1 for a homogenized matrix whose
// dehomogenization has first row all ones: boxes and Euler operators of the
// dehomogenized matrix, then d0 + sum_{i>=1} l_i d_i.
std::vector<WeylElement> restrict_presentation(const IntMatrix& atilde,
                                               std::span<const Rational> beta_tilde);

struct MembershipCertificate {
  std::vector<WeylElement> cofactors;
  size_t bound = 0;
};

WeylElement expand_certificate(const MembershipCertificate& cert,
                               const std::vector<WeylElement>& gens);

// Cofactors of total degree <= bound with sum c_g * g == target, solved as an
// exact linear system. Nothing means no certificate at this bound.
std::optional<MembershipCertificate> ideal_member_bounded(const WeylElement& target,
                                                          const std::vector<WeylElement>& gens,
                                                          size_t bound);

// h with sum_k h_k E_k equal to the Euler field, checked symbolically.
std::optional<IntVector> euler_decomposition(const IntMatrix& a);
bool verify_euler_decomposition(const IntMatrix& a, std::span<const Integer> h);
Rational euler_scalar(std::span<const Integer> h, std::span<const Rational> beta);

}  // namespace gkz
