#include <doctest.h>

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "gkz/polyhedral.hpp"
#include "oracles.hpp"

using namespace gkz;
using oracle::vec;

namespace {

const IntMatrix kGapMatrix{{3, 2, 0}, {1, 1, 1}};
const IntMatrix kAtilde{{1, 1, 1}, {0, 1, -1}};

std::vector<std::vector<size_t>> column_sets(const std::vector<Face>& faces) {
  std::vector<std::vector<size_t>> out;
  for (const auto& f : faces) out.push_back(f.columns);
  return out;
}

void check_certificates(const IntMatrix& a, const FaceLattice& fl) {
  for (const auto& f : fl.faces) {
    for (size_t i = 0; i < a.cols(); ++i) {
      Integer v = oracle::dot(f.certificate, a.column(i));
      if (f.contains(i))
        CHECK(v == 0);
      else
        CHECK(v > 0);
    }
    CHECK(f.dim == oracle::rank(a.select_columns(f.columns)));
  }
}

RationalVector rat(const IntVector& v) { return to_rational(v); }

}  // namespace

TEST_CASE("face lattice examples") {
  SUBCASE("three columns with a gap") {
    auto fl = face_lattice(kGapMatrix);
    CHECK(column_sets(fl.proper_faces) ==
          std::vector<std::vector<size_t>>{{}, {0}, {2}});
    CHECK(fl.pointed);
    CHECK(fl.minimal().dim == 0);
    CHECK(fl.faces.back().columns == std::vector<size_t>{0, 1, 2});
    check_certificates(kGapMatrix, fl);
  }
  SUBCASE("single ray") {
    auto fl = face_lattice(IntMatrix{{1}});
    CHECK(column_sets(fl.proper_faces) == std::vector<std::vector<size_t>>{{}});
    CHECK(fl.pointed);
  }
  SUBCASE("homogenized interval") {
    auto fl = face_lattice(kAtilde);
    CHECK(column_sets(fl.proper_faces) == std::vector<std::vector<size_t>>{{}, {1}, {2}});
    check_certificates(kAtilde, fl);
  }
  SUBCASE("half plane is not pointed") {
    IntMatrix a{{1, -1, 0}, {0, 0, 1}};
    auto fl = face_lattice(a);
    CHECK_FALSE(fl.pointed);
    CHECK(fl.minimal().columns == std::vector<size_t>{0, 1});
    CHECK(fl.minimal().dim == 1);
    check_certificates(a, fl);
  }
}

TEST_CASE("face lattice agrees with facet-intersection enumeration") {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 80) {
    size_t d = 1 + rng() % 3, n = d + rng() % (6 - d);
    IntMatrix a = oracle::random_matrix(rng, d, n, 2);
    if (oracle::rank(a) < d) continue;
    auto fl = face_lattice(a);
    auto got = column_sets(fl.faces);
    std::set<std::vector<size_t>> got_set(got.begin(), got.end());
    CHECK(got_set.size() == got.size());
    CHECK(got_set == oracle::face_column_sets(a));
    check_certificates(a, fl);
    // Closed under intersection.
    for (const auto& f : fl.faces)
      for (const auto& g : fl.faces) {
        std::vector<size_t> meet;
        std::set_intersection(f.columns.begin(), f.columns.end(), g.columns.begin(),
                              g.columns.end(), std::back_inserter(meet));
        CHECK(got_set.count(meet) == 1);
      }
    CHECK(fl.pointed == (fl.minimal().dim == 0));
    ++tested;
  }
}

TEST_CASE("support functions") {
  auto check_props = [](const IntMatrix& a, const std::vector<SupportFunction>& sf) {
    for (const auto& s : sf) {
      Integer g = 0;
      for (size_t i = 0; i < a.cols(); ++i) {
        Integer v = oracle::dot(s.functional, a.column(i));
        CHECK(v >= 0);
        CHECK((v == 0) == s.facet.contains(i));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      }
      CHECK(g == 1);
    }
  };
  auto f1 = support_functions(IntMatrix{{1}});
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].functional == vec({1}));

  auto f2 = support_functions(kAtilde);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].functional == vec({1, -1}));
  CHECK(f2[1].functional == vec({1, 1}));
  check_props(kAtilde, f2);

  auto f3 = support_functions(kGapMatrix);
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].functional == vec({-1, 3}));
  CHECK(f3[1].functional == vec({1, 0}));
  check_props(kGapMatrix, f3);

  CHECK_THROWS_AS(support_functions(IntMatrix{{1, 2}, {1, 2}}), Error);
}

TEST_CASE("semigroup membership examples") {
  CHECK(semigroup_contains(kGapMatrix, vec({2, 1})));
  CHECK_FALSE(semigroup_contains(kGapMatrix, vec({1, 1})));
  CHECK(semigroup_contains(kGapMatrix, vec({5, 2})));
  auto w = semigroup_witness(kGapMatrix, vec({5, 2}));
  REQUIRE(w);
  CHECK(kGapMatrix.apply(*w) == vec({5, 2}));
  for (const auto& x : *w) CHECK(x >= 0);

  try {
    semigroup_contains(IntMatrix{{1, -1}}, vec({0}));
    FAIL("expected NotPointed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPointed);
  }
}

TEST_CASE("semigroup membership agrees with enumeration") {
  // Every point of the box has second coordinate <= 5, so 5 copies of each
  // column suffice.
  auto pts = oracle::semigroup_points(kGapMatrix, 5);
  for (const auto& b : oracle::box({-1, -1}, {9, 5}))
    CHECK(semigroup_contains(kGapMatrix, b) == (pts.count(b) == 1));

  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    size_t d = 1 + rng() % 2, n = 1 + rng() % 3;
    IntMatrix at = homogenize(oracle::random_matrix(rng, d, n, 3));
    auto sp = oracle::semigroup_points(at, 4);
    SemigroupOracle orc(at);
    std::vector<long> lo(d + 1, -12), hi(d + 1, 12);
    lo[0] = 0;
    hi[0] = 4;
    for (const auto& b : oracle::box(lo, hi)) CHECK(orc.contains(b) == (sp.count(b) == 1));
  }
}

TEST_CASE("saturation") {
  CHECK(saturation_contains(kGapMatrix, vec({1, 1})));
  CHECK_FALSE(saturation_contains(kGapMatrix, vec({-1, 0})));
  CHECK(saturation_contains(kGapMatrix, vec({1, 100})));

  CHECK_FALSE(is_saturated(kGapMatrix));
  CHECK(is_saturated(IntMatrix{{1}}));
  CHECK(is_saturated(kAtilde));
  CHECK(is_saturated(IntMatrix{{1, 1}, {0, 1}}));
  CHECK_FALSE(is_saturated(IntMatrix{{2, 5}}));

  auto gap = saturation_gap(kGapMatrix);
  REQUIRE(gap);
  CHECK(saturation_contains(kGapMatrix, *gap));
  CHECK_FALSE(semigroup_contains(kGapMatrix, *gap));

  auto cone = cone_description(kGapMatrix);
  CHECK(cone.contains(rat(vec({1, 1}))));
  CHECK(cone.contains_relative_interior(rat(vec({1, 1}))));
  CHECK_FALSE(cone.contains_relative_interior(rat(vec({3, 1}))));
  CHECK_FALSE(cone.contains(rat(vec({1, 0}))));
}

TEST_CASE("classification of (3 2 0; 1 1 1) on [-1,9]x[-1,5]") {
  // Cone: -x + 3y >= 0 and x >= 0.
  auto pts = oracle::semigroup_points(kGapMatrix, 5);
  for (const auto& b : oracle::box({-1, -1}, {9, 5})) {
    bool in_cone = -b[0] + 3 * b[1] >= 0 && b[0] >= 0;
    bool in_semigroup = pts.count(b) == 1;
    CHECK(saturation_contains(kGapMatrix, b) == in_cone);
    if (in_semigroup) CHECK(in_cone);
    // The gap is the column x = 1 above the origin.
    bool gap = in_cone && !in_semigroup;
    CHECK(gap == (b[0] == 1 && b[1] >= 1));
  }
}

TEST_CASE("positive grading") {
  auto fl = face_lattice(kGapMatrix);
  auto w = positive_grading(kGapMatrix, fl);
  for (size_t i = 0; i < kGapMatrix.cols(); ++i) CHECK(oracle::dot(w, kGapMatrix.column(i)) > 0);
  IntMatrix np{{1, -1}};
  CHECK_THROWS_AS(positive_grading(np, face_lattice(np)), Error);
}
