#include "gkz/family.hpp"

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "gkz/presentation.hpp"
#include "gkz/resonance.hpp"

namespace gkz {

FamilyData factor_B(const IntMatrix& b) {
  SmithDecomposition s = smith_decompose(b);
  FamilyData f{b, s.C, s.D1, s.D2, s.M, s.elementary_divisors, s.D2 * s.M};
  if (s.C * s.D1 * f.A != b)
    throw Error(ErrorCode::InvalidArgument, "internal error: factorization does not multiply back");
  return f;
}

std::string_view index_kind_name(IndexKind kind) { return kind == IndexKind::I ? "I" : "I'"; }

namespace {

// Calls visit on each v in Z^dim with max |v_k| == r, lexicographically.
template <typename Visit>
bool for_each_on_shell(size_t dim, long r, Visit&& visit) {
  IntVector v(dim, Integer(-r));
  for (;;) {
    bool on_shell = r == 0;
    for (const auto& x : v) on_shell = on_shell || abs(x) == r;
    if (on_shell && visit(v)) return true;
    size_t k = dim;
    while (k > 0 && v[k - 1] == r) v[k - 1] = -r, --k;
    if (k == 0) return false;
    v[k - 1] += 1;
  }
}

std::vector<RationalVector> divisor_classes(std::span<const Integer> e) {
  std::vector<RationalVector> out;
  IntVector g(e.size(), Integer(0));
  for (;;) {
    RationalVector c(e.size() + 1);
    for (size_t k = 0; k < e.size(); ++k) c[k + 1] = Rational(g[k], e[k]);
    for (auto& x : c) x.canonicalize();
    out.push_back(std::move(c));
    size_t k = e.size();
    while (k > 0 && g[k - 1] + 1 == e[k - 1]) g[k - 1] = 0, --k;
    if (k == 0) return out;
    g[k - 1] += 1;
  }
}

}  // namespace

IndexSet index_sets(const IntMatrix& b, IndexKind kind, long radius) {
  FamilyData f = factor_B(b);
  return index_sets(f.A, f.e, kind, radius);
}

IndexSet index_sets(const IntMatrix& a, std::span<const Integer> e, IndexKind kind, long radius) {
  if (e.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "one divisor per row expected");
  for (const auto& x : e)
    if (x < 1) throw Error(ErrorCode::InvalidArgument, "elementary divisors must be positive");
  const IntMatrix at = homogenize(a);
  IndexSet out{kind, IntVector(e.begin(), e.end()), divisor_classes(e), {}, {}};

  ResonanceSet resonance;
  FaceLattice faces;
  if (kind == IndexKind::I) {
    resonance = resonance_components(at);
    out.base = to_rational(delta_A(resonance));
  } else {
    faces = face_lattice(at);
    IntVector s(at.rows(), Integer(0));
    for (size_t i = 0; i < at.cols(); ++i) s = sub(s, at.column(i));
    out.base = to_rational(s);
  }
  auto passes = [&](const RationalVector& cand) {
    return kind == IndexKind::I ? !sres_contains(resonance, cand) : !dsres_witness(at, faces, cand);
  };

  for (const auto& cls : out.classes) {
    RationalVector start = add(out.base, cls);
    bool found = false;
    for (long r = 0; r <= radius && !found; ++r)
      found = for_each_on_shell(at.rows(), r, [&](const IntVector& z) {
        RationalVector cand = add(start, to_rational(z));
        if (!passes(cand)) return false;
        out.members.push_back(std::move(cand));
        return true;
      });
    if (!found)
      throw Error(ErrorCode::SectionSearchFailed,
                  "no representative of class " + to_string(cls) + " within radius " + std::to_string(radius));
  }
  return out;
}

PsiImage PsiImage::times_partial(size_t i) const {
  PsiImage p = *this;
  p.exponents[i] += 1;
  return p;
}

std::string PsiImage::to_string() const {
  std::string s;
  if (coefficient != 1) s = gkz::to_string(coefficient);
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "d" + std::to_string(i);
    if (exponents[i] != 1) s += "^" + gkz::to_string(exponents[i]);
  }
  return s.empty() ? "1" : s;
}

PsiImage psi_image(std::span<const Integer> m, const Integer& s) {
  PsiImage p{1, IntVector(m.size() + 1)};
  Integer total = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    p.exponents[i + 1] = m[i];
    total += m[i];
  }
  p.exponents[0] = s - total + 1;
  return p;
}

std::pair<IntVector, Integer> psi_source_derivative(std::span<const Integer> m, const Integer& s,
                                                    size_t i) {
  if (i > m.size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  IntVector next(m.begin(), m.end());
  if (i > 0) next[i - 1] += 1;
  return {next, s + 1};
}

std::vector<WeylElement> psi_kernel_sections(const IntMatrix& a) {
  std::vector<WeylElement> out;
  for (size_t k = 0; k < a.rows(); ++k) out.push_back(euler_operator(a, k, a.cols() + 1, 1));
  return out;
}

}  // namespace gkz
