#include "gkz/presentation.hpp"

#include <functional>

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "gkz/toric.hpp"

namespace gkz {

std::vector<WeylElement> GKZPresentation::generators() const {
  std::vector<WeylElement> g = boxes;
  g.insert(g.end(), eulers.begin(), eulers.end());
  return g;
}

WeylElement partial_polynomial(const Polynomial& p, size_t nvars, size_t offset) {
  WeylElement e(nvars);
  for (const auto& t : p.terms()) {
    WeylElement::Key k(2 * nvars, 0);
    for (size_t i = 0; i < t.exp.size(); ++i) k[nvars + offset + i] = t.exp[i];
    e.add_term(k, t.coef);
  }
  return e;
}

WeylElement euler_operator(const IntMatrix& a, size_t k, size_t nvars, size_t offset) {
  WeylElement e(nvars);
  for (size_t i = 0; i < a.cols(); ++i) {
    WeylElement::Key key(2 * nvars, 0);
    key[offset + i] = 1;
    key[nvars + offset + i] = 1;
    e.add_term(key, Rational(a(k, i)));
  }
  return e;
}

WeylElement euler_field(size_t nvars) {
  IntMatrix ones(1, nvars);
  for (size_t i = 0; i < nvars; ++i) ones(0, i) = 1;
  return euler_operator(ones, 0, nvars);
}

GKZPresentation gkz_presentation(const IntMatrix& a, std::span<const Rational> beta) {
  return gkz_presentation(a, beta, TermOrder::degrevlex(a.cols()));
}

GKZPresentation gkz_presentation(const IntMatrix& a, std::span<const Rational> beta,
                                 const TermOrder& order) {
  if (beta.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "parameter length mismatch");
  const size_t n = a.cols();
  GKZPresentation p{a, RationalVector(beta.begin(), beta.end()), {}, {}};
  for (const auto& g : toric_ideal(a, order).generators) p.boxes.push_back(partial_polynomial(g, n));
  for (size_t k = 0; k < a.rows(); ++k)
    p.eulers.push_back(euler_operator(a, k, n) - WeylElement::constant(n, beta[k]));
  return p;
}

std::vector<WeylElement> restrict_presentation(const IntMatrix& atilde,
                                               std::span<const Rational> beta_tilde) {
  if (!is_homogenization(atilde))
    throw Error(ErrorCode::FirstRowNotOnes, "matrix is not a homogenization");
  IntMatrix a = dehomogenize(atilde);
  for (size_t i = 0; i < a.cols(); ++i)
    if (a(0, i) != 1)
      throw Error(ErrorCode::FirstRowNotOnes, "first row of the dehomogenized matrix is not all ones");
  if (beta_tilde.size() != atilde.rows())
    throw Error(ErrorCode::InvalidArgument, "parameter length mismatch");
  const size_t nv = atilde.cols();
  std::vector<WeylElement> out;
  for (const auto& g : toric_ideal(a).generators) out.push_back(partial_polynomial(g, nv, 1));
  for (size_t k = 0; k < a.rows(); ++k)
    out.push_back(euler_operator(a, k, nv, 1) - WeylElement::constant(nv, beta_tilde[k + 1]));
  WeylElement extra = WeylElement::partial(nv, 0);
  for (size_t i = 1; i < nv; ++i) extra = extra + WeylElement::lambda(nv, i) * WeylElement::partial(nv, i);
  out.push_back(extra);
  return out;
}

WeylElement expand_certificate(const MembershipCertificate& cert,
                               const std::vector<WeylElement>& gens) {
  if (cert.cofactors.size() != gens.size())
    throw Error(ErrorCode::InvalidArgument, "certificate size mismatch");
  WeylElement sum(gens.empty() ? 0 : gens.front().nvars());
  for (size_t i = 0; i < gens.size(); ++i) sum = sum + cert.cofactors[i] * gens[i];
  return sum;
}

namespace {

using Key = WeylElement::Key;

struct EliminationRow {
  std::map<Key, Rational> vec;
  std::map<size_t, Rational> combo;
};

void subtract_multiple(EliminationRow& r, const Rational& f, const EliminationRow& p) {
  for (const auto& [k, c] : p.vec) {
    auto& slot = r.vec[k];
    slot -= f * c;
    if (slot == 0) r.vec.erase(k);
  }
  for (const auto& [k, c] : p.combo) {
    auto& slot = r.combo[k];
    slot -= f * c;
    if (slot == 0) r.combo.erase(k);
  }
}

// Eliminates every pivot key from r, scanning keys from largest to smallest.
void reduce_row(EliminationRow& r, const std::map<Key, EliminationRow>& pivots) {
  auto it = r.vec.end();
  while (it != r.vec.begin()) {
    --it;
    auto p = pivots.find(it->first);
    if (p == pivots.end()) continue;
    Key k = it->first;
    Rational f = it->second / p->second.vec.rbegin()->second;
    subtract_multiple(r, f, p->second);
    it = r.vec.lower_bound(k);
  }
}

void enumerate_monomials(size_t slots, size_t bound, const std::function<void(const Key&)>& visit) {
  Key k(slots, 0);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t left) {
    if (pos == slots) {
      visit(k);
      return;
    }
    for (size_t e = 0; e <= left; ++e) {
      k[pos] = static_cast<int32_t>(e);
      rec(pos + 1, left - e);
    }
    k[pos] = 0;
  };
  rec(0, bound);
}

}  // namespace

std::optional<MembershipCertificate> ideal_member_bounded(const WeylElement& target,
                                                          const std::vector<WeylElement>& gens,
                                                          size_t bound) {
  const size_t n = target.nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw Error(ErrorCode::VariableMismatch, "generator variable count differs");

  std::vector<std::pair<size_t, Key>> unknowns;
  std::map<Key, EliminationRow> pivots;
  for (size_t g = 0; g < gens.size(); ++g) {
    enumerate_monomials(2 * n, bound, [&](const Key& mono) {
      WeylElement m(n);
      m.add_term(mono, 1);
      EliminationRow row;
      const WeylElement prod = m * gens[g];
      for (const auto& [k, c] : prod.terms()) row.vec.emplace(k, c);
      row.combo.emplace(unknowns.size(), 1);
      unknowns.emplace_back(g, mono);
      reduce_row(row, pivots);
      if (!row.vec.empty()) {
        Key lead = row.vec.rbegin()->first;
        pivots.emplace(std::move(lead), std::move(row));
      }
    });
  }

  EliminationRow t;
  for (const auto& [k, c] : target.terms()) t.vec.emplace(k, c);
  reduce_row(t, pivots);
  if (!t.vec.empty()) return std::nullopt;

  MembershipCertificate cert{std::vector<WeylElement>(gens.size(), WeylElement(n)), bound};
  for (const auto& [idx, c] : t.combo) cert.cofactors[unknowns[idx].first].add_term(unknowns[idx].second, -c);
  if (expand_certificate(cert, gens) != target)
    throw Error(ErrorCode::InvalidArgument, "internal error: certificate does not re-expand");
  return cert;
}

bool verify_euler_decomposition(const IntMatrix& a, std::span<const Integer> h) {
  const size_t n = a.cols();
  WeylElement sum(n);
  for (size_t k = 0; k < a.rows(); ++k) sum = sum + euler_operator(a, k, n).scaled(Rational(h[k]));
  return sum == euler_field(n);
}

std::optional<IntVector> euler_decomposition(const IntMatrix& a) {
  auto h = homogeneity_vector(a);
  if (h && !verify_euler_decomposition(a, *h))
    throw Error(ErrorCode::InvalidArgument, "internal error: Euler decomposition fails to verify");
  return h;
}

Rational euler_scalar(std::span<const Integer> h, std::span<const Rational> beta) {
  Rational b = 0;
  for (size_t k = 0; k < h.size(); ++k) b += h[k] * beta[k];
  return b;
}

}  // namespace gkz
