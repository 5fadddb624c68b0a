#pragma once

#include <vector>

#include "gkz/polynomial.hpp"

namespace gkz {

// Full normal form of p modulo g (all terms reduced).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g, const TermOrder& order);

// Reduced monic Groebner basis, sorted by increasing leading monomial.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& g, const TermOrder& order);

bool is_unit_ideal(const std::vector<Polynomial>& gb);

}  // namespace gkz
