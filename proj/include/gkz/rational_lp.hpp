#pragma once

#include <optional>
#include <vector>

#include "gkz/number.hpp"

namespace gkz {

// Feasibility problems over Q: equalities and >= inequalities on variables
// that are either nonnegative or free.
class LinearSystem {
 public:
  explicit LinearSystem(size_t vars) : free_(vars, false) {}

  size_t vars() const noexcept { return free_.size(); }
  void set_free(size_t var) { free_[var] = true; }
  void add_equality(RationalVector row, Rational rhs);
  void add_at_least(RationalVector row, Rational rhs);  // row . x >= rhs

  // Some feasible point, or nothing when the system is empty.
  std::optional<RationalVector> solve() const;
  bool feasible() const { return solve().has_value(); }

 private:
  std::vector<bool> free_;
  std::vector<RationalVector> eq_rows_, ge_rows_;
  RationalVector eq_rhs_, ge_rhs_;
};

// Phase-one simplex for {M x = b, x >= 0}; Bland's rule, exact arithmetic.
std::optional<RationalVector> standard_form_feasible(const std::vector<RationalVector>& m,
                                                     const RationalVector& b, size_t vars);

}  // namespace gkz
