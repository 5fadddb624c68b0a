#pragma once

#include <optional>
#include <vector>

#include "gkz/groebner.hpp"
#include "gkz/int_matrix.hpp"
#include "gkz/polyhedral.hpp"

namespace gkz {

struct ToricIdeal {
  size_t nvars = 0;
  std::vector<Polynomial> generators;
  TermOrder order;
  bool is_groebner = false;
};

// x^{l-} - x^{l+}: the negative part of l carries the positive sign.
Polynomial binomial(std::span<const Integer> l, const TermOrder& order);

// A.u for an exponent vector u.
IntVector multidegree(const IntMatrix& a, const Exponent& u);
bool is_multihomogeneous(const IntMatrix& a, const Polynomial& p);

ToricIdeal toric_ideal(const IntMatrix& a);
ToricIdeal toric_ideal(const IntMatrix& a, const TermOrder& order);

Polynomial normal_form(const Polynomial& p, const ToricIdeal& ideal);

// (J : x_var^infinity) for the ideal generated by gens. With a positive
// weight vector on the variables (under which gens are homogeneous) this uses
// the reverse-lex trick; otherwise it eliminates t from J + <t*x_var - 1>.
std::vector<Polynomial> saturate_variable(const std::vector<Polynomial>& gens, size_t var,
                                          const std::vector<long>* weights);
// (J : x^u) by repeated single-variable quotients.
std::vector<Polynomial> quotient_by_monomial(const std::vector<Polynomial>& gens,
                                             const Exponent& u, const std::vector<long>* weights);

bool true_degree_contains(const IntMatrix& a, size_t j, std::span<const Integer> u);

struct DegreePair {
  IntVector offset;
  Face face;
  Exponent monomial;  // standard monomial witnessing the offset
};

struct QuasiDegreeSet {
  size_t j = 0;
  std::vector<DegreePair> components;
};

constexpr long kDefaultFiltrationBound = 64;

// Prime filtration of S_A / <d_j>; bound caps the weighted degree searched.
QuasiDegreeSet quasi_degrees(const IntMatrix& a, size_t j, long bound = kDefaultFiltrationBound);

// u in offset + N F for some component (exact lattice-cone test).
bool quasi_degree_union_contains(const IntMatrix& a, const QuasiDegreeSet& q,
                                 std::span<const Integer> u);

}  // namespace gkz
