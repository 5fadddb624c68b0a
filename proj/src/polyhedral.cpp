#include "gkz/polyhedral.hpp"

#include <algorithm>

#include "gkz/errors.hpp"
#include "gkz/rational_lp.hpp"

namespace gkz {

namespace {

constexpr size_t kMaxFaceColumns = 12;

bool in_span_of(const std::vector<IntVector>& annihilator, const IntVector& v) {
  return std::all_of(annihilator.begin(), annihilator.end(),
                     [&](const IntVector& n) { return dot(n, v) == 0; });
}

std::optional<IntVector> face_certificate(const IntMatrix& a, const std::vector<bool>& in_face) {
  const size_t d = a.rows();
  LinearSystem lp(d);
  for (size_t k = 0; k < d; ++k) lp.set_free(k);
  for (size_t i = 0; i < a.cols(); ++i) {
    RationalVector row = to_rational(a.column(i));
    if (in_face[i])
      lp.add_equality(std::move(row), 0);
    else
      lp.add_at_least(std::move(row), 1);
  }
  auto phi = lp.solve();
  if (!phi) return std::nullopt;
  if (is_zero(*phi)) return IntVector(d, Integer(0));
  return primitive_integer_vector(*phi);
}

}  // namespace

bool Face::contains(size_t column) const {
  return std::binary_search(columns.begin(), columns.end(), column);
}

const Face* FaceLattice::find(const std::vector<size_t>& columns) const {
  for (const auto& f : faces)
    if (f.columns == columns) return &f;
  return nullptr;
}

std::vector<Face> FaceLattice::facets() const {
  std::vector<Face> out;
  const size_t top = faces.back().dim;
  for (const auto& f : proper_faces)
    if (f.dim + 1 == top) out.push_back(f);
  return out;
}

FaceLattice face_lattice(const IntMatrix& a) {
  const size_t n = a.cols();
  if (n > kMaxFaceColumns)
    throw Error(ErrorCode::DimensionUnsupported,
                "face enumeration supports at most " + std::to_string(kMaxFaceColumns) + " columns");
  const auto cols = a.columns();
  FaceLattice lattice;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<bool> in_face(n);
    std::vector<IntVector> spanning;
    Face face;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        in_face[i] = true;
        spanning.push_back(cols[i]);
        face.columns.push_back(i);
      }
    auto ann = annihilator_basis(spanning, a.rows());
    bool closed = true;
    for (size_t i = 0; i < n && closed; ++i)
      if (!in_face[i] && in_span_of(ann, cols[i])) closed = false;
    if (!closed) continue;
    auto cert = face_certificate(a, in_face);
    if (!cert) continue;
    face.certificate = std::move(*cert);
    face.dim = a.rows() - ann.size();
    lattice.faces.push_back(std::move(face));
  }
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& x, const Face& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    if (x.columns.size() != y.columns.size()) return x.columns.size() < y.columns.size();
    return x.columns < y.columns;
  });
  lattice.proper_faces.assign(lattice.faces.begin(), lattice.faces.end() - 1);
  lattice.pointed = lattice.minimal().dim == 0;
  return lattice;
}

bool validate_certificate(const IntMatrix& a, const Face& face) {
  if (face.certificate.size() != a.rows()) return false;
  for (size_t i = 0; i < a.cols(); ++i) {
    Integer v = dot(face.certificate, a.column(i));
    if (face.contains(i) ? v != 0 : v <= 0) return false;
  }
  return true;
}

std::vector<SupportFunction> support_functions(const IntMatrix& a) {
  if (a.rank() < a.rows())
    throw Error(ErrorCode::NotFullDimensional, "cone is not full-dimensional");
  if (!a.spans_lattice())
    throw Error(ErrorCode::InvalidArgument, "columns do not generate the full lattice");
  std::vector<SupportFunction> out;
  for (auto& f : face_lattice(a).facets()) out.push_back({f, f.certificate});
  std::sort(out.begin(), out.end(), [](const SupportFunction& x, const SupportFunction& y) {
    return x.facet.columns < y.facet.columns;
  });
  return out;
}

bool ConeDescription::contains(std::span<const Rational> x) const {
  for (const auto& e : equations)
    if (dot(to_rational(e), x) != 0) return false;
  for (const auto& f : inequalities)
    if (dot(to_rational(f), x) < 0) return false;
  return true;
}

bool ConeDescription::contains_relative_interior(std::span<const Rational> x) const {
  for (const auto& e : equations)
    if (dot(to_rational(e), x) != 0) return false;
  for (const auto& f : inequalities)
    if (dot(to_rational(f), x) <= 0) return false;
  return true;
}

ConeDescription cone_description(const IntMatrix& a, const FaceLattice& faces) {
  ConeDescription c;
  c.equations = annihilator_basis(a.columns(), a.rows());
  for (const auto& f : faces.facets()) c.inequalities.push_back(f.certificate);
  return c;
}

ConeDescription cone_description(const IntMatrix& a) {
  return cone_description(a, face_lattice(a));
}

std::optional<RationalVector> cone_witness(const IntMatrix& a, std::span<const Rational> b) {
  std::vector<RationalVector> rows;
  for (size_t r = 0; r < a.rows(); ++r) rows.push_back(to_rational(a.row(r)));
  return standard_form_feasible(rows, RationalVector(b.begin(), b.end()), a.cols());
}

bool saturation_contains(const IntMatrix& a, std::span<const Integer> b) {
  return cone_witness(a, to_rational(b)).has_value();
}

IntVector positive_grading(const IntMatrix& a, const FaceLattice& faces) {
  if (!faces.pointed) throw Error(ErrorCode::NotPointed, "cone contains a nonzero linear subspace");
  IntVector w = faces.minimal().certificate;
  if (w.empty()) w.assign(a.rows(), Integer(0));
  return w;
}

SemigroupOracle::SemigroupOracle(const IntMatrix& a) : a_(a) {
  FaceLattice faces = face_lattice(a);
  grading_ = positive_grading(a, faces);
  cone_ = cone_description(a, faces);
  for (size_t i = 0; i < a.cols(); ++i)
    if (!is_zero(a.column(i))) nonzero_.push_back(i);
}

bool SemigroupOracle::search(const IntVector& b) {
  if (is_zero(b)) return true;
  if (auto it = memo_.find(b); it != memo_.end()) return it->second >= 0;
  long used = -1;
  if (dot(grading_, b) > 0 && cone_.contains(to_rational(b))) {
    for (size_t i : nonzero_) {
      IntVector rest = b;
      for (size_t r = 0; r < a_.rows(); ++r) rest[r] -= a_(r, i);
      if (search(rest)) {
        used = static_cast<long>(i);
        break;
      }
    }
  }
  memo_[b] = used;
  return used >= 0;
}

std::optional<IntVector> SemigroupOracle::witness(std::span<const Integer> b) {
  if (b.size() != a_.rows()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  IntVector cur(b.begin(), b.end());
  if (!search(cur)) return std::nullopt;
  IntVector x(a_.cols(), Integer(0));
  while (!is_zero(cur)) {
    auto i = static_cast<size_t>(memo_.at(cur));
    x[i] += 1;
    for (size_t r = 0; r < a_.rows(); ++r) cur[r] -= a_(r, i);
  }
  return x;
}

std::optional<IntVector> semigroup_witness(const IntMatrix& a, std::span<const Integer> b) {
  return SemigroupOracle(a).witness(b);
}

bool semigroup_contains(const IntMatrix& a, std::span<const Integer> b) {
  return semigroup_witness(a, b).has_value();
}

std::optional<IntVector> saturation_gap(const IntMatrix& a) {
  SemigroupOracle oracle(a);
  const ConeDescription cone = cone_description(a);
  const size_t d = a.rows();
  IntVector lo(d, Integer(0)), hi(d, Integer(0));
  Integer volume = 1;
  for (size_t r = 0; r < d; ++r) {
    for (size_t i = 0; i < a.cols(); ++i) (a(r, i) < 0 ? lo[r] : hi[r]) += a(r, i);
    volume *= hi[r] - lo[r] + 1;
  }
  if (volume > 2000000)
    throw Error(ErrorCode::SearchBoundExceeded, "saturation test box too large");
  IntVector p = lo;
  for (;;) {
    if (cone.contains(to_rational(p)) && !oracle.contains(p)) return p;
    size_t r = 0;
    while (r < d && p[r] == hi[r]) p[r] = lo[r], ++r;
    if (r == d) break;
    p[r] += 1;
  }
  return std::nullopt;
}

bool is_saturated(const IntMatrix& a) { return !saturation_gap(a).has_value(); }

}  // namespace gkz
