#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gkz/int_matrix.hpp"

namespace gkz {

struct Face {
  std::vector<size_t> columns;  // ascending column indices
  IntVector certificate;        // zero on the face, positive on every other column
  size_t dim = 0;               // rank of the spanned subspace

  bool contains(size_t column) const;
  friend bool operator==(const Face&, const Face&) = default;
};

struct FaceLattice {
  std::vector<Face> faces;         // ordered by (dim, columns); improper face last
  std::vector<Face> proper_faces;  // faces without the improper one
  bool pointed = false;

  const Face& minimal() const { return faces.front(); }
  const Face* find(const std::vector<size_t>& columns) const;
  std::vector<Face> facets() const;
};

// All column subsets cut out by a supporting functional; n <= 12.
FaceLattice face_lattice(const IntMatrix& a);

// True iff phi.a_i == 0 exactly on the face columns and > 0 elsewhere.
bool validate_certificate(const IntMatrix& a, const Face& face);

struct SupportFunction {
  Face facet;
  IntVector functional;
};

std::vector<SupportFunction> support_functions(const IntMatrix& a);

// Inequality description of the real cone spanned by the columns:
// equations . x == 0 and inequalities . x >= 0.
struct ConeDescription {
  std::vector<IntVector> equations;
  std::vector<IntVector> inequalities;

  bool contains(std::span<const Rational> x) const;
  bool contains_relative_interior(std::span<const Rational> x) const;
};

ConeDescription cone_description(const IntMatrix& a);
ConeDescription cone_description(const IntMatrix& a, const FaceLattice& faces);

// Nonnegative rational x with A x = b.
std::optional<RationalVector> cone_witness(const IntMatrix& a, std::span<const Rational> b);
bool saturation_contains(const IntMatrix& a, std::span<const Integer> b);

// Positive integral grading w with w.a_i > 0 for every nonzero column.
IntVector positive_grading(const IntMatrix& a, const FaceLattice& faces);

// Semigroup membership with witness x in N^n, A x = b.
class SemigroupOracle {
 public:
  explicit SemigroupOracle(const IntMatrix& a);

  std::optional<IntVector> witness(std::span<const Integer> b);
  bool contains(std::span<const Integer> b) { return witness(b).has_value(); }

 private:
  bool search(const IntVector& b);

  IntMatrix a_;
  IntVector grading_;
  ConeDescription cone_;
  std::vector<size_t> nonzero_;
  std::map<IntVector, long> memo_;  // column used on success, -1 on failure
};

std::optional<IntVector> semigroup_witness(const IntMatrix& a, std::span<const Integer> b);
bool semigroup_contains(const IntMatrix& a, std::span<const Integer> b);

// A lattice point of the cone outside the semigroup, if any.
std::optional<IntVector> saturation_gap(const IntMatrix& a);
bool is_saturated(const IntMatrix& a);

}  // namespace gkz
