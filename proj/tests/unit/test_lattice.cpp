#include <doctest.h>

#include <numeric>

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "oracles.hpp"

using namespace gkz;
using oracle::vec;

namespace {

void check_smith(const IntMatrix& b, const SmithDecomposition& s) {
  const size_t d = b.rows(), n = b.cols();
  REQUIRE(s.C.rows() == d);
  REQUIRE(s.M.rows() == n);
  CHECK(oracle::mat_mul(oracle::mat_mul(oracle::mat_mul(s.C, s.D1), s.D2), s.M) == b);
  CHECK(abs(oracle::det(s.C)) == 1);
  CHECK(abs(oracle::det(s.M)) == 1);
  REQUIRE(s.elementary_divisors.size() == d);
  for (size_t i = 0; i < d; ++i) {
    CHECK(s.elementary_divisors[i] >= 1);
    CHECK(s.D1(i, i) == s.elementary_divisors[i]);
    if (i + 1 < d) CHECK(s.elementary_divisors[i + 1] % s.elementary_divisors[i] == 0);
    for (size_t j = 0; j < n; ++j) {
      if (j < d && i != j) CHECK(s.D1(i, j) == 0);
      CHECK(s.D2(i, j) == (i == j ? 1 : 0));
    }
  }
}

Integer gcd_of_maximal_minors(const IntMatrix& rows) {
  const size_t k = rows.rows(), n = rows.cols();
  Integer g = 0;
  std::vector<bool> cs(n);
  std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
  do {
    IntMatrix sub(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0, jj = 0; j < n; ++j)
        if (cs[j]) sub(i, jj++) = rows(i, j);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(oracle::det(sub)).get_mpz_t());
  } while (std::prev_permutation(cs.begin(), cs.end()));
  return g;
}

}  // namespace

TEST_CASE("smith decomposition of small examples") {
  SUBCASE("identity") {
    auto s = smith_decompose(IntMatrix::identity(2));
    CHECK(s.C == IntMatrix::identity(2));
    CHECK(s.D1 == IntMatrix::identity(2));
    CHECK(s.M == IntMatrix::identity(2));
    CHECK(s.elementary_divisors == vec({1, 1}));
  }
  SUBCASE("single entry 2") {
    IntMatrix b{{2}};
    auto s = smith_decompose(b);
    check_smith(b, s);
    CHECK(s.elementary_divisors == vec({2}));
    CHECK(s.lattice_matrix() == IntMatrix{{1}});
  }
  SUBCASE("upper triangular 2 2; 0 2") {
    IntMatrix b{{2, 2}, {0, 2}};
    auto s = smith_decompose(b);
    check_smith(b, s);
    CHECK(s.elementary_divisors == vec({2, 2}));
    CHECK(s.lattice_matrix().spans_lattice());
  }
  SUBCASE("diag(2,3) has divisors 1, 6") {
    IntMatrix b{{2, 0}, {0, 3}};
    auto s = smith_decompose(b);
    check_smith(b, s);
    CHECK(s.elementary_divisors == vec({1, 6}));
  }
  SUBCASE("rank deficient") {
    IntMatrix b{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(smith_decompose(b), Error);
    try {
      smith_decompose(b);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RankDeficient);
    }
  }
}

TEST_CASE("smith property suite on random full-rank matrices") {
  std::mt19937 rng(20240611);
  int tested = 0;
  while (tested < 100) {
    size_t d = 1 + rng() % 3;
    size_t n = d + rng() % (6 - d);
    IntMatrix b = oracle::random_matrix(rng, d, n, 6);
    if (oracle::rank(b) < d) continue;
    check_smith(b, smith_decompose(b));
    ++tested;
  }
}

TEST_CASE("homogenization") {
  CHECK(homogenize(IntMatrix{{3, 2, 0}, {1, 1, 1}}) ==
        IntMatrix{{1, 1, 1, 1}, {0, 3, 2, 0}, {0, 1, 1, 1}});
  CHECK(homogenize(IntMatrix{{1}}) == IntMatrix{{1, 1}, {0, 1}});
  CHECK(homogenize(IntMatrix{{1, -1}}) == IntMatrix{{1, 1, 1}, {0, 1, -1}});
  IntMatrix a{{3, 2, 0}, {1, 1, 1}};
  CHECK(is_homogenization(homogenize(a)));
  CHECK(dehomogenize(homogenize(a)) == a);
  CHECK(homogenize(a).spans_lattice());
}

TEST_CASE("lattice kernels against brute force") {
  CHECK(lattice_kernel(IntMatrix{{1, 1}, {0, 1}}).empty());
  CHECK(lattice_kernel(IntMatrix{{1, 1, 1}, {0, 1, -1}}) == std::vector<IntVector>{vec({-2, 1, 1})});
  CHECK(lattice_kernel(IntMatrix{{3, 2, 0}, {1, 1, 1}}) == std::vector<IntVector>{vec({2, -3, 1})});

  // Every kernel vector of a rank-1 kernel in a box is a multiple of the basis vector.
  for (const IntMatrix& a : {IntMatrix{{1, 1, 1}, {0, 1, -1}}, IntMatrix{{3, 2, 0}, {1, 1, 1}}}) {
    auto basis = lattice_kernel(a);
    REQUIRE(basis.size() == 1);
    for (const auto& l : oracle::box({-6, -6, -6}, {6, 6, 6})) {
      bool in_kernel = is_zero(a.apply(l));
      bool multiple = false;
      for (long k = -6; k <= 6; ++k) multiple = multiple || l == scale(Integer(k), basis[0]);
      CHECK(in_kernel == multiple);
    }
  }
}

TEST_CASE("lattice kernels are saturated bases on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    size_t d = 1 + rng() % 3, n = 2 + rng() % 4;
    IntMatrix a = oracle::random_matrix(rng, d, n, 4);
    auto basis = lattice_kernel(a);
    CHECK(basis.size() == n - oracle::rank(a));
    for (const auto& l : basis) CHECK(is_zero(a.apply(l)));
    if (!basis.empty()) CHECK(gcd_of_maximal_minors(IntMatrix::from_rows(basis)) == 1);
    // Kernel of the homogenization, checked directly.
    for (const auto& l : lattice_kernel(homogenize(a))) CHECK(is_zero(homogenize(a).apply(l)));
  }
}

TEST_CASE("homogeneity vector") {
  auto h = homogeneity_vector(IntMatrix{{3, 2, 0}, {1, 1, 1}});
  REQUIRE(h);
  CHECK(*h == vec({0, 1}));
  CHECK_FALSE(homogeneity_vector(IntMatrix{{2, 5}}).has_value());

  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    IntMatrix at = homogenize(oracle::random_matrix(rng, 1 + rng() % 2, 1 + rng() % 4, 5));
    auto ht = homogeneity_vector(at);
    REQUIRE(ht);
    for (size_t i = 0; i < at.cols(); ++i) CHECK(dot(*ht, at.column(i)) == 1);
  }
}

TEST_CASE("integer solving") {
  IntMatrix m{{2, 4}, {0, 3}};
  auto x = solve_integer(m, vec({6, 3}));
  REQUIRE(x);
  CHECK(m.apply(*x) == vec({6, 3}));
  CHECK_FALSE(solve_integer(m, vec({1, 0})).has_value());
  CHECK(same_column_lattice(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}}));
  CHECK_FALSE(same_column_lattice(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}));
}
