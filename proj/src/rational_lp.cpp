#include "gkz/rational_lp.hpp"

#include "gkz/errors.hpp"

namespace gkz {

void LinearSystem::add_equality(RationalVector row, Rational rhs) {
  if (row.size() != vars()) throw Error(ErrorCode::InvalidArgument, "constraint length mismatch");
  eq_rows_.push_back(std::move(row));
  eq_rhs_.push_back(std::move(rhs));
}

void LinearSystem::add_at_least(RationalVector row, Rational rhs) {
  if (row.size() != vars()) throw Error(ErrorCode::InvalidArgument, "constraint length mismatch");
  ge_rows_.push_back(std::move(row));
  ge_rhs_.push_back(std::move(rhs));
}

std::optional<RationalVector> LinearSystem::solve() const {
  // Column layout: one column per nonnegative variable, two per free variable
  // (x = x+ - x-), then one surplus column per inequality.
  std::vector<size_t> col_of(vars());
  size_t cols = 0;
  for (size_t v = 0; v < vars(); ++v) {
    col_of[v] = cols;
    cols += free_[v] ? 2 : 1;
  }
  const size_t structural = cols;
  cols += ge_rows_.size();

  std::vector<RationalVector> m;
  RationalVector b;
  auto expand = [&](const RationalVector& row) {
    RationalVector r(cols);
    for (size_t v = 0; v < vars(); ++v) {
      r[col_of[v]] = row[v];
      if (free_[v]) r[col_of[v] + 1] = -row[v];
    }
    return r;
  };
  for (size_t i = 0; i < eq_rows_.size(); ++i) {
    m.push_back(expand(eq_rows_[i]));
    b.push_back(eq_rhs_[i]);
  }
  for (size_t i = 0; i < ge_rows_.size(); ++i) {
    RationalVector r = expand(ge_rows_[i]);
    r[structural + i] = -1;
    m.push_back(std::move(r));
    b.push_back(ge_rhs_[i]);
  }

  auto y = standard_form_feasible(m, b, cols);
  if (!y) return std::nullopt;
  RationalVector x(vars());
  for (size_t v = 0; v < vars(); ++v) {
    x[v] = (*y)[col_of[v]];
    if (free_[v]) x[v] -= (*y)[col_of[v] + 1];
  }
  return x;
}

std::optional<RationalVector> standard_form_feasible(const std::vector<RationalVector>& m,
                                                     const RationalVector& b, size_t vars) {
  const size_t rows = m.size();
  if (rows == 0) return RationalVector(vars);
  const size_t width = vars + rows + 1;  // structural, artificial, rhs
  const size_t rhs = width - 1;

  std::vector<RationalVector> t(rows, RationalVector(width));
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (size_t j = 0; j < vars; ++j) t[i][j] = flip ? Rational(-m[i][j]) : m[i][j];
    t[i][vars + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = vars + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  RationalVector cost(width);
  for (size_t j = 0; j < vars; ++j)
    for (size_t i = 0; i < rows; ++i) cost[j] -= t[i][j];
  for (size_t i = 0; i < rows; ++i) cost[rhs] -= t[i][rhs];

  for (;;) {
    size_t enter = vars;
    for (size_t j = 0; j < vars; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == vars) break;

    size_t leave = rows;
    Rational best;
    for (size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // cannot happen: phase one is bounded below

    Rational p = t[leave][enter];
    for (auto& x : t[leave]) x /= p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[rhs] != 0) return std::nullopt;
  RationalVector x(vars);
  for (size_t i = 0; i < rows; ++i)
    if (basis[i] < vars) x[basis[i]] = t[i][rhs];
  return x;
}

}  // namespace gkz
