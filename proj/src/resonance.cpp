#include "gkz/resonance.hpp"

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "gkz/rational_lp.hpp"

namespace gkz {

namespace {

std::vector<IntVector> face_annihilator(const IntMatrix& a, const std::vector<size_t>& face) {
  std::vector<IntVector> span;
  for (size_t i : face) span.push_back(a.column(i));
  return annihilator_basis(span, a.rows());
}

RationalVector apply_rows(const std::vector<IntVector>& rows, std::span<const Rational> x) {
  RationalVector out;
  for (const auto& r : rows) out.push_back(dot(to_rational(r), x));
  return out;
}

// Some rational c with u == c v, assuming v != 0.
std::optional<Rational> proportional(const RationalVector& u, const RationalVector& v) {
  size_t k = 0;
  while (v[k] == 0) ++k;
  Rational c = u[k] / v[k];
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != c * v[i]) return std::nullopt;
  return c;
}

}  // namespace

ResonanceSet resonance_components(const IntMatrix& a, long bound) {
  ResonanceSet set{a, {}};
  for (size_t j = 0; j < a.cols(); ++j) {
    if (is_zero(a.column(j))) continue;
    for (auto& c : quasi_degrees(a, j, bound).components)
      set.components.push_back({j, std::move(c.offset), std::move(c.face), a.column(j)});
  }
  return set;
}

std::optional<SresWitness> sres_witness(const ResonanceSet& set, std::span<const Rational> beta) {
  const IntMatrix& a = set.matrix;
  if (beta.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "parameter length mismatch");
  for (const auto& c : set.components) {
    auto n = face_annihilator(a, c.face.columns);
    RationalVector u = apply_rows(n, to_rational(c.shift));
    RationalVector r = apply_rows(n, sub(to_rational(c.offset), beta));
    // m * u == r
    if (is_zero(u)) {
      if (is_zero(r)) return SresWitness{c.j, c.offset, c.face.columns, Integer(1)};
      continue;
    }
    auto m = proportional(r, u);
    if (m && is_integral(*m) && *m >= 1)
      return SresWitness{c.j, c.offset, c.face.columns, m->get_num()};
  }
  return std::nullopt;
}

bool sres_contains(const ResonanceSet& set, std::span<const Rational> beta) {
  return sres_witness(set, beta).has_value();
}

bool sres_contains(const IntMatrix& a, std::span<const Rational> beta) {
  return sres_contains(resonance_components(a), beta);
}

std::optional<DsresWitness> dsres_witness(const IntMatrix& a, const FaceLattice& faces,
                                          std::span<const Rational> beta) {
  if (beta.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "parameter length mismatch");
  const size_t n = a.cols();
  for (const auto& f : faces.proper_faces) {
    auto ann = face_annihilator(a, f.columns);
    RationalVector image = apply_rows(ann, beta);
    if (!is_integral(image)) continue;
    if (!ann.empty() && !solve_integer(IntMatrix::from_rows(ann), to_integer(image))) continue;

    LinearSystem lp(n + f.columns.size());
    for (size_t k = n; k < lp.vars(); ++k) lp.set_free(k);
    for (size_t r = 0; r < a.rows(); ++r) {
      RationalVector row(lp.vars());
      for (size_t i = 0; i < n; ++i) row[i] = a(r, i);
      for (size_t k = 0; k < f.columns.size(); ++k) row[n + k] = a(r, f.columns[k]);
      lp.add_equality(std::move(row), beta[r]);
    }
    auto x = lp.solve();
    if (!x) continue;
    RationalVector point(a.rows());
    for (size_t r = 0; r < a.rows(); ++r)
      for (size_t i = 0; i < n; ++i) point[r] += a(r, i) * (*x)[i];
    return DsresWitness{f.columns, std::move(point)};
  }
  return std::nullopt;
}

bool dsres_contains(const IntMatrix& a, std::span<const Rational> beta) {
  return dsres_witness(a, face_lattice(a), beta).has_value();
}

std::optional<size_t> delta_violation(const ResonanceSet& set, std::span<const Integer> delta) {
  const IntMatrix& a = set.matrix;
  const size_t n = a.cols();
  for (size_t idx = 0; idx < set.components.size(); ++idx) {
    const auto& c = set.components[idx];
    // A x + t' a_j - A_F y = offset - delta - a_j with x, t' >= 0 and y free.
    LinearSystem lp(n + 1 + c.face.columns.size());
    for (size_t k = n + 1; k < lp.vars(); ++k) lp.set_free(k);
    for (size_t r = 0; r < a.rows(); ++r) {
      RationalVector row(lp.vars());
      for (size_t i = 0; i < n; ++i) row[i] = a(r, i);
      row[n] = c.shift[r];
      for (size_t k = 0; k < c.face.columns.size(); ++k) row[n + 1 + k] = -a(r, c.face.columns[k]);
      lp.add_equality(std::move(row), Rational(c.offset[r] - delta[r] - c.shift[r]));
    }
    if (lp.feasible()) return idx;
  }
  return std::nullopt;
}

bool delta_certifies(const ResonanceSet& set, std::span<const Integer> delta) {
  return !delta_violation(set, delta).has_value();
}

IntVector delta_A(const IntMatrix& a) { return delta_A(resonance_components(a)); }

IntVector delta_A(const ResonanceSet& set) {
  const IntMatrix& a = set.matrix;
  SemigroupOracle oracle(a);
  IntVector columns_sum(a.rows(), Integer(0));
  for (size_t i = 0; i < a.cols(); ++i) columns_sum = add(columns_sum, a.column(i));
  IntVector delta = columns_sum;
  for (const auto& c : set.components) delta = add(delta, c.offset);

  for (int extra = 0; !delta_certifies(set, delta); ++extra) {
    if (extra == 64) throw Error(ErrorCode::SearchBoundExceeded, "no certified translate found");
    delta = add(delta, columns_sum);
  }
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (size_t i = 0; i < a.cols() && !shrunk; ++i) {
      if (is_zero(a.column(i))) continue;
      IntVector cand = sub(delta, a.column(i));
      if (oracle.contains(cand) && delta_certifies(set, cand)) {
        delta = std::move(cand);
        shrunk = true;
      }
    }
  }
  return delta;
}

Integer n_beta(const IntMatrix& a, std::span<const Rational> beta) {
  if (sres_contains(a, beta))
    throw Error(ErrorCode::ParameterResonant, "parameter is strongly resonant");
  const IntMatrix at = homogenize(a);
  const ResonanceSet set = resonance_components(at);
  RationalVector lifted(at.rows());
  for (size_t k = 0; k < beta.size(); ++k) lifted[k + 1] = beta[k];
  RationalVector e0(at.rows());
  e0[0] = 1;

  std::optional<Rational> worst;
  auto note = [&](const Rational& bad) {
    if (!worst || bad > *worst) worst = bad;
  };
  auto unbounded = [] {
    throw Error(ErrorCode::ParameterResonant, "lifted parameter is resonant for all large beta_0");
  };

  for (const auto& c : set.components) {
    auto ann = face_annihilator(at, c.face.columns);
    RationalVector u = apply_rows(ann, e0);
    RationalVector v = apply_rows(ann, to_rational(c.shift));
    RationalVector w = apply_rows(ann, sub(to_rational(c.offset), lifted));
    // Bad beta_0: beta_0 u + m v == w with m an integer >= 1.
    if (is_zero(v)) {
      if (is_zero(u)) {
        if (is_zero(w)) unbounded();
      } else if (auto b0 = proportional(w, u)) {
        note(*b0);
      }
      continue;
    }
    if (auto cu = proportional(u, v)) {
      auto k = proportional(w, v);
      if (!k) continue;
      // m = k - c beta_0
      if (*cu == 0) {
        if (is_integral(*k) && *k >= 1) unbounded();
      } else if (*cu > 0) {
        note((*k - 1) / *cu);
      } else {
        unbounded();
      }
      continue;
    }
    RationalMatrix sys;
    for (size_t r = 0; r < u.size(); ++r) sys.push_back({u[r], v[r], w[r]});
    auto pivots = row_reduce(sys, 3);
    if (pivots.size() != 2 || pivots[1] != 1) continue;
    Rational m = sys[1][2];
    if (is_integral(m) && m >= 1) note(sys[0][2]);
  }
  return worst ? Integer(floor_of(*worst) + 1) : Integer(0);
}

RationalVector dual_parameter(const IntMatrix& a, std::span<const Rational> beta, long radius) {
  if (!homogeneity_vector(a))
    throw Error(ErrorCode::NotHomogeneous, "no integral h with h.a_i = 1 for all columns");
  if (beta.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "parameter length mismatch");
  if (sres_contains(a, beta))
    throw Error(ErrorCode::ParameterResonant, "parameter is strongly resonant");
  const FaceLattice faces = face_lattice(a);
  const ConeDescription cone = cone_description(a, faces);
  const size_t d = a.rows();

  for (long r = 0; r <= radius; ++r) {
    IntVector alpha(d, Integer(-r));
    for (;;) {
      bool on_shell = false;
      for (const auto& x : alpha) on_shell = on_shell || abs(x) == r;
      if (on_shell) {
        RationalVector candidate(d);
        for (size_t k = 0; k < d; ++k) candidate[k] = -beta[k] - alpha[k];
        RationalVector reflected(d);
        for (size_t k = 0; k < d; ++k) reflected[k] = -candidate[k];
        if (cone.contains_relative_interior(reflected) || !dsres_witness(a, faces, candidate))
          return candidate;
      }
      size_t k = d;
      while (k > 0 && alpha[k - 1] == r) alpha[k - 1] = -r, --k;
      if (k == 0) break;
      alpha[k - 1] += 1;
    }
  }
  throw Error(ErrorCode::SearchBoundExceeded,
              "no dual parameter within shift radius " + std::to_string(radius));
}

}  // namespace gkz
