#include "gkz/toric.hpp"

#include <algorithm>
#include <functional>

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"

namespace gkz {

namespace {

TermOrder revlex_with_last(const std::vector<long>& weights, size_t var) {
  TermOrder order{{weights}, TermOrder::Tie::RevLex, {}};
  for (size_t i = 0; i < weights.size(); ++i)
    if (i != var) order.sequence.push_back(i);
  order.sequence.push_back(var);
  return order;
}

Polynomial extend(const Polynomial& p, size_t extra) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponent e = t.exp;
    e.resize(e.size() + extra, 0);
    terms.push_back({std::move(e), t.coef});
  }
  return Polynomial::from_terms(p.nvars() + extra, std::move(terms), TermOrder::lex(p.nvars() + extra));
}

// Generators of J intersected with k[x], where J lives in k[x, t] and t is the last variable.
std::vector<Polynomial> eliminate_last(const std::vector<Polynomial>& gens, size_t n) {
  TermOrder order = TermOrder::degrevlex(n + 1);
  std::vector<long> block(n + 1, 0);
  block[n] = 1;
  order.weights.insert(order.weights.begin(), block);
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(gens, order)) {
    bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(),
                                 [&](const Term& t) { return t.exp[n] == 0; });
    if (!free_of_t) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({Exponent(t.exp.begin(), t.exp.end() - 1), t.coef});
    out.push_back(Polynomial::from_terms(n, std::move(terms), TermOrder::lex(n)));
  }
  return out;
}

Polynomial divide_variable(const Polynomial& g, size_t var, bool all_powers) {
  int32_t k = g.terms().front().exp[var];
  for (const auto& t : g.terms()) k = std::min(k, t.exp[var]);
  if (!all_powers) k = std::min(k, 1);
  if (k == 0) return g;
  Exponent shift(g.nvars(), 0);
  shift[var] = -k;
  return g.times_term(shift, 1);
}

bool positive_weights(const std::vector<long>* weights) {
  return weights && std::all_of(weights->begin(), weights->end(), [](long w) { return w > 0; });
}

std::vector<Polynomial> quotient_variable(const std::vector<Polynomial>& gens, size_t var,
                                          const std::vector<long>* weights, bool saturate) {
  if (gens.empty()) return {};
  const size_t n = gens.front().nvars();
  if (positive_weights(weights)) {
    TermOrder order = revlex_with_last(*weights, var);
    std::vector<Polynomial> out;
    for (const auto& g : groebner_basis(gens, order)) out.push_back(divide_variable(g, var, saturate));
    return out;
  }
  TermOrder lex = TermOrder::lex(n + 1);
  if (saturate) {
    std::vector<Polynomial> lifted;
    for (const auto& g : gens) lifted.push_back(extend(g, 1));
    Exponent tx(n + 1, 0);
    tx[var] = 1;
    tx[n] = 1;
    lifted.push_back(Polynomial::from_terms(n + 1, {{tx, 1}, {Exponent(n + 1, 0), -1}}, lex));
    return eliminate_last(lifted, n);
  }
  return quotient_by_monomial(gens, unit_exponent(n, var), nullptr);
}

}  // namespace

Polynomial binomial(std::span<const Integer> l, const TermOrder& order) {
  Exponent plus(l.size(), 0), minus(l.size(), 0);
  for (size_t i = 0; i < l.size(); ++i) {
    if (l[i] > 0) plus[i] = static_cast<int32_t>(l[i].get_si());
    if (l[i] < 0) minus[i] = static_cast<int32_t>(-l[i].get_si());
  }
  return Polynomial::from_terms(l.size(), {{minus, 1}, {plus, -1}}, order);
}

IntVector multidegree(const IntMatrix& a, const Exponent& u) {
  IntVector x(u.size());
  for (size_t i = 0; i < u.size(); ++i) x[i] = u[i];
  return a.apply(x);
}

bool is_multihomogeneous(const IntMatrix& a, const Polynomial& p) {
  if (p.is_zero()) return true;
  IntVector d = multidegree(a, p.leading().exp);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const Term& t) { return multidegree(a, t.exp) == d; });
}

std::vector<Polynomial> saturate_variable(const std::vector<Polynomial>& gens, size_t var,
                                          const std::vector<long>* weights) {
  return quotient_variable(gens, var, weights, true);
}

std::vector<Polynomial> quotient_by_monomial(const std::vector<Polynomial>& gens,
                                             const Exponent& u, const std::vector<long>* weights) {
  if (gens.empty()) return {};
  const size_t n = u.size();
  if (positive_weights(weights)) {
    std::vector<Polynomial> cur = gens;
    for (size_t v = 0; v < n; ++v)
      for (int32_t k = 0; k < u[v]; ++k) cur = quotient_variable(cur, v, weights, false);
    return cur;
  }
  // J : m = (J intersect <m>) / m, with the intersection t*J + (1-t)*<m> eliminated.
  TermOrder lex = TermOrder::lex(n + 1);
  Exponent t = unit_exponent(n + 1, n);
  Exponent m = u;
  m.push_back(0);
  std::vector<Polynomial> lifted;
  for (const auto& g : gens) lifted.push_back(extend(g, 1).resorted(lex).times_term(t, 1));
  lifted.push_back(Polynomial::from_terms(n + 1, {{m, 1}, {product(m, t), -1}}, lex));
  std::vector<Polynomial> out;
  Exponent inverse(n, 0);
  for (size_t v = 0; v < n; ++v) inverse[v] = -u[v];
  for (const auto& g : eliminate_last(lifted, n)) out.push_back(g.times_term(inverse, 1));
  return out;
}

ToricIdeal toric_ideal(const IntMatrix& a) { return toric_ideal(a, TermOrder::degrevlex(a.cols())); }

ToricIdeal toric_ideal(const IntMatrix& a, const TermOrder& order) {
  const size_t n = a.cols();
  ToricIdeal ideal{n, {}, order, true};
  auto kernel = lattice_kernel(a);
  if (kernel.empty()) return ideal;

  std::vector<long> weights;
  if (n <= 12) {
    FaceLattice faces = face_lattice(a);
    if (faces.pointed) {
      IntVector w = positive_grading(a, faces);
      for (size_t i = 0; i < n; ++i) weights.push_back(dot(w, a.column(i)).get_si());
    }
  }
  const std::vector<long>* wp = weights.empty() ? nullptr : &weights;

  std::vector<Polynomial> gens;
  for (const auto& l : kernel) gens.push_back(binomial(l, order));
  for (size_t v = 0; v < n; ++v) gens = saturate_variable(gens, v, wp);
  ideal.generators = groebner_basis(gens, order);
  return ideal;
}

Polynomial normal_form(const Polynomial& p, const ToricIdeal& ideal) {
  return reduce(p.resorted(ideal.order), ideal.generators, ideal.order);
}

bool true_degree_contains(const IntMatrix& a, size_t j, std::span<const Integer> u) {
  if (j >= a.cols()) throw Error(ErrorCode::InvalidArgument, "column index out of range");
  SemigroupOracle oracle(a);
  if (!oracle.contains(u)) return false;
  return !oracle.contains(sub(u, a.column(j)));
}

QuasiDegreeSet quasi_degrees(const IntMatrix& a, size_t j, long bound) {
  const size_t n = a.cols();
  if (j >= n) throw Error(ErrorCode::InvalidArgument, "column index out of range");
  if (is_zero(a.column(j)))
    throw Error(ErrorCode::InvalidArgument, "column " + std::to_string(j) + " is zero");
  const FaceLattice faces = face_lattice(a);
  const IntVector w = positive_grading(a, faces);
  std::vector<long> weights(n);
  for (size_t i = 0; i < n; ++i) weights[i] = dot(w, a.column(i)).get_si();
  const std::vector<long>* wp = positive_weights(&weights) ? &weights : nullptr;

  const TermOrder order = TermOrder::degrevlex(n);
  const std::vector<Polynomial> ia = toric_ideal(a, order).generators;
  auto with_variables = [&](const std::vector<size_t>& vars) {
    std::vector<Polynomial> g = ia;
    for (size_t v : vars) g.push_back(Polynomial::monomial(unit_exponent(n, v)));
    return groebner_basis(g, order);
  };
  auto face_prime = [&](const Face& f) {
    std::vector<size_t> outside;
    for (size_t i = 0; i < n; ++i)
      if (!f.contains(i)) outside.push_back(i);
    return with_variables(outside);
  };

  QuasiDegreeSet result{j, {}};
  std::vector<Polynomial> ideal = with_variables({j});
  auto member = [&](const Exponent& u) {
    return reduce(Polynomial::monomial(u), ideal, order).is_zero();
  };

  // Calls visit on every monomial of weighted degree exactly deg until it returns true.
  std::function<bool(Exponent&, size_t, long, const std::function<bool(const Exponent&)>&)> walk =
      [&](Exponent& u, size_t v, long left, const std::function<bool(const Exponent&)>& visit) {
        if (v == n) return left == 0 && visit(u);
        if (weights[v] <= 0) return walk(u, v + 1, left, visit);
        for (long k = left / weights[v]; k >= 0; --k) {
          u[v] = static_cast<int32_t>(k);
          bool done = walk(u, v + 1, left - k * weights[v], visit);
          u[v] = 0;
          if (done) return true;
        }
        return false;
      };

  while (!is_unit_ideal(ideal)) {
    bool found = false;
    auto try_witness = [&](const Exponent& u) {
      if (member(u)) return false;
      Face probe;
      for (size_t i = 0; i < n; ++i)
        if (!member(product(u, unit_exponent(n, i)))) probe.columns.push_back(i);
      const Face* face = faces.find(probe.columns);
      if (!face || face->contains(j) || face->columns.size() == n) return false;
      if (groebner_basis(quotient_by_monomial(ideal, u, wp), order) != face_prime(*face)) return false;
      result.components.push_back({multidegree(a, u), *face, u});
      std::vector<Polynomial> grown = ideal;
      grown.push_back(Polynomial::monomial(u));
      ideal = groebner_basis(grown, order);
      return true;
    };
    for (long deg = 0; deg <= bound && !found; ++deg) {
      Exponent u(n, 0);
      found = walk(u, 0, deg, try_witness);
    }
    if (!found)
      throw Error(ErrorCode::FiltrationBoundExceeded,
                  "no filtration witness up to weighted degree " + std::to_string(bound));
  }
  std::sort(result.components.begin(), result.components.end(),
            [](const DegreePair& x, const DegreePair& y) {
              if (x.face.columns != y.face.columns) return x.face.columns < y.face.columns;
              return x.offset < y.offset;
            });
  return result;
}

bool quasi_degree_union_contains(const IntMatrix& a, const QuasiDegreeSet& q,
                                 std::span<const Integer> u) {
  for (const auto& c : q.components) {
    IntVector rest = sub(u, c.offset);
    if (c.face.columns.empty()) {
      if (is_zero(rest)) return true;
      continue;
    }
    if (semigroup_contains(a.select_columns(c.face.columns), rest)) return true;
  }
  return false;
}

}  // namespace gkz
