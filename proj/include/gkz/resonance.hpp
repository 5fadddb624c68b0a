#pragma once

#include <optional>
#include <vector>

#include "gkz/int_matrix.hpp"
#include "gkz/polyhedral.hpp"
#include "gkz/toric.hpp"

namespace gkz {

// The set of beta with beta + m a_j in offset + QF for some integer m >= 1.
struct ResonanceComponent {
  size_t j = 0;
  IntVector offset;
  Face face;
  IntVector shift;  // a_j
};

struct ResonanceSet {
  IntMatrix matrix;
  std::vector<ResonanceComponent> components;
};

ResonanceSet resonance_components(const IntMatrix& a, long bound = kDefaultFiltrationBound);

struct SresWitness {
  size_t j = 0;
  IntVector offset;
  std::vector<size_t> face;
  Integer m;
};

std::optional<SresWitness> sres_witness(const ResonanceSet& set, std::span<const Rational> beta);
bool sres_contains(const ResonanceSet& set, std::span<const Rational> beta);
bool sres_contains(const IntMatrix& a, std::span<const Rational> beta);

struct DsresWitness {
  std::vector<size_t> face;
  RationalVector cone_point;  // lies in the cone and differs from beta by an element of QF
};

std::optional<DsresWitness> dsres_witness(const IntMatrix& a, const FaceLattice& faces,
                                          std::span<const Rational> beta);
bool dsres_contains(const IntMatrix& a, std::span<const Rational> beta);

// Index of a component for which (cone + delta) meets -t a_j + offset + QF
// for some real t >= 1, or nothing when delta is certified.
std::optional<size_t> delta_violation(const ResonanceSet& set, std::span<const Integer> delta);
bool delta_certifies(const ResonanceSet& set, std::span<const Integer> delta);

IntVector delta_A(const IntMatrix& a);
IntVector delta_A(const ResonanceSet& set);

Integer n_beta(const IntMatrix& a, std::span<const Rational> beta);

constexpr long kDefaultDualSearchRadius = 8;

RationalVector dual_parameter(const IntMatrix& a, std::span<const Rational> beta,
                              long radius = kDefaultDualSearchRadius);

}  // namespace gkz
