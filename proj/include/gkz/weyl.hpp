#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gkz/number.hpp"

namespace gkz {

// Normally ordered element of the Weyl algebra in N variables: every term is
// c * l^u * d^v with all l's to the left of all d's.
class WeylElement {
 public:
  using Key = std::vector<int32_t>;  // u followed by v, length 2N

  WeylElement() = default;
  explicit WeylElement(size_t nvars) : nvars_(nvars) {}

  static WeylElement constant(size_t nvars, const Rational& c);
  static WeylElement lambda(size_t nvars, size_t i);
  static WeylElement partial(size_t nvars, size_t i);
  static WeylElement monomial(const std::vector<int32_t>& u, const std::vector<int32_t>& v,
                              const Rational& c = 1);

  size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  void add_term(const Key& key, const Rational& c);
  long total_degree() const;  // -1 for zero

  // Exponents of lambda_i / partial_i in a key.
  static int32_t lambda_exp(const Key& k, size_t i) { return k[i]; }
  static int32_t partial_exp(const Key& k, size_t i) { return k[k.size() / 2 + i]; }

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator-() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement scaled(const Rational& c) const;

  std::string to_string() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  size_t nvars_ = 0;
  std::map<Key, Rational> terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

// Terms such as "3*l0^2*d0 - 4*l1*l2*d0^2 + l0"; products are taken in the
// written order and normal ordered. At least min_vars variables.
WeylElement parse_weyl(std::string_view text, size_t min_vars = 0);

}  // namespace gkz
