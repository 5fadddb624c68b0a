#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkz/number.hpp"

namespace gkz {

using Exponent = std::vector<int32_t>;

// Weight rows compared first, then a lex or reverse-lex tie-break over a
// variable sequence (first entry is the largest variable).
struct TermOrder {
  enum class Tie { Lex, RevLex };

  std::vector<std::vector<long>> weights;
  Tie tie = Tie::RevLex;
  std::vector<size_t> sequence;

  static TermOrder degrevlex(size_t nvars);
  static TermOrder deglex(size_t nvars);
  static TermOrder lex(size_t nvars);
  // "degrevlex", "deglex" or "lex", optionally followed by ":2,0,1" giving
  // the variable sequence from largest to smallest.
  static TermOrder parse(std::string_view text, size_t nvars);

  // true iff a > b
  bool greater(const Exponent& a, const Exponent& b) const;
  int compare(const Exponent& a, const Exponent& b) const;
  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

struct Term {
  Exponent exp;
  Rational coef;
};

// Terms are kept sorted strictly decreasing under the order the polynomial
// was built with; every operation takes that order explicitly.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(size_t nvars, const Rational& c);
  static Polynomial monomial(Exponent e, const Rational& c = 1);
  static Polynomial from_terms(size_t nvars, std::vector<Term> terms, const TermOrder& order);

  size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  size_t size() const noexcept { return terms_.size(); }
  bool is_constant() const;

  Polynomial resorted(const TermOrder& order) const;
  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Exponent& e, const Rational& c) const;
  Polynomial plus(const Polynomial& q, const TermOrder& order) const;
  Polynomial minus(const Polynomial& q, const TermOrder& order) const;
  Polynomial times(const Polynomial& q, const TermOrder& order) const;
  // self + c * x^e * q, the workhorse of reduction.
  Polynomial add_multiple(const Rational& c, const Exponent& e, const Polynomial& q,
                          const TermOrder& order) const;

  // Terms written as c*d0^2*d1, using the given variable prefix.
  std::string to_string(std::string_view var = "d") const;

  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  size_t nvars_ = 0;
  std::vector<Term> terms_;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent quotient(const Exponent& b, const Exponent& a);  // b / a, assumes divides(a, b)
Exponent product(const Exponent& a, const Exponent& b);
long total_degree(const Exponent& e);
Exponent unit_exponent(size_t nvars, size_t var);

}  // namespace gkz
