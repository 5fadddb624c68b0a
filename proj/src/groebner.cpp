#include "gkz/groebner.hpp"

#include <algorithm>
#include <set>

namespace gkz {

namespace {

const Polynomial* find_reducer(const Exponent& e, const std::vector<Polynomial>& g) {
  for (const auto& h : g)
    if (!h.is_zero() && divides(h.leading().exp, e)) return &h;
  return nullptr;
}

void make_reduced(std::vector<Polynomial>& g, const TermOrder& order) {
  std::vector<Polynomial> minimal;
  std::sort(g.begin(), g.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.greater(y.leading().exp, x.leading().exp);
  });
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return divides(q.leading().exp, p.leading().exp);
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    out.push_back(reduce(minimal[i], others, order).monic());
  }
  g = std::move(out);
}

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g, const TermOrder& order) {
  Polynomial rem(p.nvars());
  std::vector<Term> kept;
  Polynomial work = p;
  while (!work.is_zero()) {
    const Term& lt = work.leading();
    if (const Polynomial* h = find_reducer(lt.exp, g)) {
      Rational c = -lt.coef / h->leading().coef;
      work = work.add_multiple(c, quotient(lt.exp, h->leading().exp), *h, order);
    } else {
      kept.push_back(lt);
      work = work.add_multiple(-lt.coef, Exponent(p.nvars(), 0),
                               Polynomial::monomial(lt.exp), order);
    }
  }
  return Polynomial::from_terms(p.nvars(), std::move(kept), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  Exponent l = lcm(f.leading().exp, g.leading().exp);
  Polynomial a = f.times_term(quotient(l, f.leading().exp), 1 / f.leading().coef);
  return a.add_multiple(-1 / g.leading().coef, quotient(l, g.leading().exp), g, order);
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const TermOrder& order) {
  std::vector<Polynomial> g;
  for (auto& p : gens) {
    Polynomial q = reduce(p.resorted(order), g, order);
    if (!q.is_zero()) g.push_back(q.monic());
  }
  if (g.empty()) return g;

  using Pair = std::pair<size_t, size_t>;
  std::set<Pair> pending;
  for (size_t j = 0; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) pending.insert({i, j});
  auto is_pending = [&](size_t i, size_t j) {
    return pending.count({std::min(i, j), std::max(i, j)}) > 0;
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Exponent best_lcm = lcm(g[best->first].leading().exp, g[best->second].leading().exp);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = lcm(g[it->first].leading().exp, g[it->second].leading().exp);
      if (order.greater(best_lcm, l)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Exponent& li = g[i].leading().exp;
    const Exponent& lj = g[j].leading().exp;
    if (product(li, lj) == best_lcm) continue;  // coprime leading monomials
    bool chain = false;
    for (size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && divides(g[k].leading().exp, best_lcm) && !is_pending(i, k) &&
              !is_pending(j, k);
    if (chain) continue;

    Polynomial r = reduce(s_polynomial(g[i], g[j], order), g, order);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    if (g.back().is_constant()) return {g.back()};
    for (size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
  }
  make_reduced(g, order);
  return g;
}

bool is_groebner_basis(const std::vector<Polynomial>& g, const TermOrder& order) {
  for (size_t j = 0; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i)
      if (!reduce(s_polynomial(g[i], g[j], order), g, order).is_zero()) return false;
  return true;
}

bool is_unit_ideal(const std::vector<Polynomial>& gb) {
  return std::any_of(gb.begin(), gb.end(),
                     [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

}  // namespace gkz
