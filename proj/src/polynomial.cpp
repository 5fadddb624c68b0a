#include "gkz/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gkz/errors.hpp"

namespace gkz {

namespace {

std::vector<size_t> identity_sequence(size_t n) {
  std::vector<size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace

TermOrder TermOrder::degrevlex(size_t nvars) {
  return {{std::vector<long>(nvars, 1)}, Tie::RevLex, identity_sequence(nvars)};
}

TermOrder TermOrder::deglex(size_t nvars) {
  return {{std::vector<long>(nvars, 1)}, Tie::Lex, identity_sequence(nvars)};
}

TermOrder TermOrder::lex(size_t nvars) { return {{}, Tie::Lex, identity_sequence(nvars)}; }

TermOrder TermOrder::parse(std::string_view text, size_t nvars) {
  auto colon = text.find(':');
  std::string_view kind = text.substr(0, colon);
  TermOrder order;
  if (kind == "degrevlex" || kind == "grevlex")
    order = degrevlex(nvars);
  else if (kind == "deglex" || kind == "grlex")
    order = deglex(nvars);
  else if (kind == "lex")
    order = lex(nvars);
  else
    throw Error(ErrorCode::ParseError, "unknown term order '" + std::string(kind) + "'");
  if (colon == std::string_view::npos) return order;

  std::vector<size_t> seq;
  for (const auto& z : parse_int_vector(text.substr(colon + 1))) {
    if (z < 0 || z >= static_cast<long>(nvars))
      throw Error(ErrorCode::ParseError, "variable index out of range in term order");
    seq.push_back(z.get_ui());
  }
  std::vector<size_t> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_sequence(nvars))
    throw Error(ErrorCode::ParseError, "term order sequence must be a permutation of all variables");
  order.sequence = std::move(seq);
  return order;
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  for (const auto& w : weights) {
    long da = 0, db = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      da += w[i] * a[i];
      db += w[i] * b[i];
    }
    if (da != db) return da > db ? 1 : -1;
  }
  if (tie == Tie::Lex) {
    for (size_t v : sequence)
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  } else {
    for (auto it = sequence.rbegin(); it != sequence.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
  }
  return 0;
}

bool TermOrder::greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

std::string TermOrder::name() const {
  std::ostringstream os;
  bool graded = weights.size() == 1 &&
                std::all_of(weights[0].begin(), weights[0].end(), [](long w) { return w == 1; });
  if (weights.empty() && tie == Tie::Lex)
    os << "lex";
  else if (graded)
    os << (tie == Tie::Lex ? "deglex" : "degrevlex");
  else
    os << "weighted-" << (tie == Tie::Lex ? "lex" : "revlex");
  if (sequence != identity_sequence(sequence.size())) {
    os << ':';
    for (size_t i = 0; i < sequence.size(); ++i) os << (i ? "," : "") << sequence[i];
  }
  return os.str();
}

Polynomial Polynomial::constant(size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Exponent(nvars, 0), c});
  return p;
}

Polynomial Polynomial::monomial(Exponent e, const Rational& c) {
  Polynomial p(e.size());
  if (c != 0) p.terms_.push_back({std::move(e), c});
  return p;
}

Polynomial Polynomial::from_terms(size_t nvars, std::vector<Term> terms, const TermOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return order.greater(x.exp, y.exp); });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
      p.terms_.back().coef += t.coef;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coef == 0) p.terms_.pop_back();
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                                            [](int32_t x) { return x == 0; }));
}

Polynomial Polynomial::resorted(const TermOrder& order) const {
  return from_terms(nvars_, terms_, order);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading().coef);
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::times_term(const Exponent& e, const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({product(t.exp, e), t.coef * c});
  return p;
}

Polynomial Polynomial::add_multiple(const Rational& c, const Exponent& e, const Polynomial& q,
                                    const TermOrder& order) const {
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size() + q.terms_.size());
  auto i = terms_.begin();
  auto j = q.terms_.begin();
  Exponent shifted;
  while (i != terms_.end() || j != q.terms_.end()) {
    if (j != q.terms_.end()) shifted = product(j->exp, e);
    int cmp = i == terms_.end() ? -1 : j == q.terms_.end() ? 1 : order.compare(i->exp, shifted);
    if (cmp > 0) {
      out.terms_.push_back(*i++);
    } else if (cmp < 0) {
      out.terms_.push_back({shifted, c * j->coef});
      ++j;
    } else {
      Rational s = i->coef + c * j->coef;
      if (s != 0) out.terms_.push_back({i->exp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::plus(const Polynomial& q, const TermOrder& order) const {
  return add_multiple(1, Exponent(nvars_, 0), q, order);
}

Polynomial Polynomial::minus(const Polynomial& q, const TermOrder& order) const {
  return add_multiple(-1, Exponent(nvars_, 0), q, order);
}

Polynomial Polynomial::times(const Polynomial& q, const TermOrder& order) const {
  Polynomial out(nvars_);
  for (const auto& t : terms_) out = out.add_multiple(t.coef, t.exp, q, order);
  return out;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool has_var = std::any_of(t.exp.begin(), t.exp.end(), [](int32_t x) { return x != 0; });
    bool need_star = false;
    if (c != 1 || !has_var) {
      os << gkz::to_string(c);
      need_star = true;
    }
    for (size_t v = 0; v < t.exp.size(); ++v) {
      if (t.exp[v] == 0) continue;
      if (need_star) os << '*';
      os << var << v;
      if (t.exp[v] != 1) os << '^' << t.exp[v];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (size_t i = 0; i < p.terms_.size(); ++i)
    if (p.terms_[i].exp != q.terms_[i].exp || p.terms_[i].coef != q.terms_[i].coef) return false;
  return true;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponent product(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

Exponent unit_exponent(size_t nvars, size_t var) {
  Exponent e(nvars, 0);
  e[var] = 1;
  return e;
}

}  // namespace gkz
