#include "gkz/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "gkz/errors.hpp"

namespace gkz {

namespace {

// Coefficients of d^b l^c = sum_k C(b,k) c!/(c-k)! l^(c-k) d^(b-k).
const std::vector<Integer>& commutation_coefficients(int32_t b, int32_t c) {
  thread_local std::map<std::pair<int32_t, int32_t>, std::vector<Integer>> memo;
  auto [it, inserted] = memo.try_emplace({b, c});
  if (inserted) {
    Integer falling = 1;
    for (int32_t k = 0; k <= std::min(b, c); ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k));
      it->second.push_back(binom * falling);
      falling *= c - k;
    }
  }
  return it->second;
}

void check_same(const WeylElement& a, const WeylElement& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::VariableMismatch, "Weyl elements over " + std::to_string(a.nvars()) +
                                                 " and " + std::to_string(b.nvars()) + " variables");
}

}  // namespace

WeylElement WeylElement::constant(size_t nvars, const Rational& c) {
  WeylElement e(nvars);
  e.add_term(Key(2 * nvars, 0), c);
  return e;
}

WeylElement WeylElement::lambda(size_t nvars, size_t i) {
  Key k(2 * nvars, 0);
  k[i] = 1;
  WeylElement e(nvars);
  e.add_term(k, 1);
  return e;
}

WeylElement WeylElement::partial(size_t nvars, size_t i) {
  Key k(2 * nvars, 0);
  k[nvars + i] = 1;
  WeylElement e(nvars);
  e.add_term(k, 1);
  return e;
}

WeylElement WeylElement::monomial(const std::vector<int32_t>& u, const std::vector<int32_t>& v,
                                  const Rational& c) {
  WeylElement e(u.size());
  Key k(u);
  k.insert(k.end(), v.begin(), v.end());
  e.add_term(k, c);
  return e;
}

void WeylElement::add_term(const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long WeylElement::total_degree() const {
  long best = -1;
  for (const auto& [k, c] : terms_) {
    long deg = 0;
    for (int32_t x : k) deg += x;
    best = std::max(best, deg);
  }
  return best;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  check_same(*this, o);
  WeylElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + (-o); }

WeylElement WeylElement::operator-() const { return scaled(-1); }

WeylElement WeylElement::scaled(const Rational& c) const {
  WeylElement r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [k, x] : r.terms_) x *= c;
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const { return weyl_mul(*this, o); }

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  check_same(a, b);
  const size_t n = a.nvars();
  WeylElement out(n);
  WeylElement::Key key(2 * n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // l^u1 (d^v1 l^u2) d^v2, expanded one variable at a time.
      std::vector<const std::vector<Integer>*> coeffs(n);
      for (size_t i = 0; i < n; ++i) coeffs[i] = &commutation_coefficients(ka[n + i], kb[i]);
      std::vector<int32_t> k(n, 0);
      for (;;) {
        Rational c = ca * cb;
        for (size_t i = 0; i < n; ++i) {
          key[i] = ka[i] + kb[i] - k[i];
          key[n + i] = ka[n + i] + kb[n + i] - k[i];
          c *= (*coeffs[i])[k[i]];
        }
        out.add_term(key, c);
        size_t i = 0;
        while (i < n && k[i] + 1 == static_cast<int32_t>(coeffs[i]->size())) k[i++] = 0;
        if (i == n) break;
        ++k[i];
      }
    }
  }
  return out;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> sorted(terms_.begin(), terms_.end());
  auto degree = [](const Key& k) {
    long d = 0;
    for (int32_t x : k) d += x;
    return d;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    long dx = degree(x.first), dy = degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, coef] : sorted) {
    if (first)
      os << (coef < 0 ? "-" : "");
    else
      os << (coef < 0 ? " - " : " + ");
    first = false;
    Rational c = abs(coef);
    bool star = false;
    if (degree(k) == 0 || c != 1) {
      os << gkz::to_string(c);
      star = true;
    }
    for (size_t part = 0; part < 2; ++part)
      for (size_t i = 0; i < nvars_; ++i) {
        int32_t e = k[part * nvars_ + i];
        if (e == 0) continue;
        os << (star ? "*" : "") << (part == 0 ? 'l' : 'd') << i;
        if (e != 1) os << '^' << e;
        star = true;
      }
  }
  return os.str();
}

}  // namespace gkz
