#include <doctest.h>

#include <map>

#include "gkz/errors.hpp"
#include "gkz/lattice.hpp"
#include "gkz/toric.hpp"
#include "oracles.hpp"

using namespace gkz;
using oracle::vec;

namespace {

const IntMatrix kGapMatrix{{3, 2, 0}, {1, 1, 1}};
const IntMatrix kAtilde{{1, 1, 1}, {0, 1, -1}};

IntVector degree_of(const IntMatrix& a, const std::vector<long>& u) {
  IntVector out(a.rows(), Integer(0));
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t i = 0; i < u.size(); ++i) out[r] += a(r, i) * u[i];
  return out;
}

Polynomial monomial_of(const std::vector<long>& u, const TermOrder& o) {
  Exponent e(u.begin(), u.end());
  return Polynomial::from_terms(u.size(), {{e, Rational(1)}}, o);
}

// Exponent vectors in [0, k]^n.
std::vector<std::vector<long>> exponents(size_t n, long k) {
  std::vector<std::vector<long>> out;
  for (const auto& p : oracle::box(std::vector<long>(n, 0), std::vector<long>(n, k))) {
    std::vector<long> u;
    for (const auto& x : p) u.push_back(x.get_si());
    out.push_back(u);
  }
  return out;
}

void check_lattice_soundness(const IntMatrix& a, long k) {
  auto ideal = toric_ideal(a);
  for (const auto& g : ideal.generators) CHECK(is_multihomogeneous(a, g));
  auto es = exponents(a.cols(), k);
  std::map<IntVector, std::vector<Polynomial>> by_degree;
  std::map<std::string, IntVector> nf_degree;
  for (const auto& u : es) {
    auto nf = normal_form(monomial_of(u, ideal.order), ideal);
    by_degree[degree_of(a, u)].push_back(nf);
    auto key = nf.to_string();
    auto [it, fresh] = nf_degree.emplace(key, degree_of(a, u));
    // Equal normal forms force equal degrees.
    if (!fresh) CHECK(it->second == degree_of(a, u));
  }
  for (const auto& [deg, nfs] : by_degree)
    for (const auto& nf : nfs) CHECK(nf == nfs.front());
}

// u - offset in N F, by enumeration with k copies of each face column.
bool in_translate(const IntMatrix& a, const DegreePair& c, const IntVector& u, long k) {
  IntVector diff(u.size());
  for (size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - c.offset[i];
  if (c.face.columns.empty()) {
    for (const auto& x : diff)
      if (x != 0) return false;
    return true;
  }
  return oracle::semigroup_points(a.select_columns(c.face.columns), k).count(diff) == 1;
}

void check_box_oracle(const IntMatrix& a, long k, long lo, long hi) {
  auto sp = oracle::semigroup_points(a, k);
  auto fl = face_lattice(a);
  for (size_t j = 0; j < a.cols(); ++j) {
    auto q = quasi_degrees(a, j);
    CHECK(q.j == j);
    for (const auto& c : q.components) {
      CHECK_FALSE(c.face.contains(j));
      CHECK(fl.find(c.face.columns) != nullptr);
      CHECK(c.face.columns != fl.faces.back().columns);
      CHECK(true_degree_contains(a, j, c.offset));
    }
    for (const auto& u : oracle::box(std::vector<long>(a.rows(), lo), std::vector<long>(a.rows(), hi))) {
      IntVector shifted(u.size());
      for (size_t r = 0; r < u.size(); ++r) shifted[r] = u[r] - a(r, j);
      bool truth = sp.count(u) == 1 && sp.count(shifted) == 0;
      bool in_union = false;
      for (const auto& c : q.components) in_union = in_union || in_translate(a, c, u, k);
      CHECK(in_union == truth);
      CHECK(quasi_degree_union_contains(a, q, u) == truth);
      CHECK(true_degree_contains(a, j, u) == truth);
    }
  }
}

}  // namespace

TEST_CASE("toric ideal examples") {
  CHECK(toric_ideal(IntMatrix{{1, 1}, {0, 1}}).generators.empty());

  auto it = toric_ideal(kAtilde);
  REQUIRE(it.generators.size() == 1);
  CHECK(it.generators[0].to_string() == "d0^2 - d1*d2");
  CHECK(it.is_groebner);

  auto e2 = toric_ideal(kGapMatrix);
  REQUIRE(e2.generators.size() == 1);
  CHECK(e2.generators[0].to_string() == "d1^3 - d0^2*d2");
  CHECK(is_multihomogeneous(kGapMatrix, e2.generators[0]));

  // The relation (3,-5,2) is not a kernel vector of this matrix.
  CHECK(kGapMatrix.apply(vec({3, -5, 2})) == vec({-1, 0}));
}

TEST_CASE("toric ideal grading oracle on (3 2 0; 1 1 1)") {
  auto ideal = toric_ideal(kGapMatrix);
  std::mt19937 rng(29);
  const std::vector<long> l{2, -3, 1};
  int equal_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<long> u(3), v(3);
    for (auto& x : u) x = static_cast<long>(rng() % 6);
    if (t % 2 == 0) {
      long k = static_cast<long>(rng() % 3) - 1;
      for (size_t i = 0; i < 3; ++i) v[i] = u[i] + k * l[i];
      if (*std::min_element(v.begin(), v.end()) < 0) v = u;
    } else {
      for (auto& x : v) x = static_cast<long>(rng() % 6);
    }
    bool same = degree_of(kGapMatrix, u) == degree_of(kGapMatrix, v);
    equal_pairs += same;
    auto nu = normal_form(monomial_of(u, ideal.order), ideal);
    auto nv = normal_form(monomial_of(v, ideal.order), ideal);
    CHECK((nu == nv) == same);
  }
  CHECK(equal_pairs > 50);
}

TEST_CASE("toric ideal soundness on small matrices") {
  check_lattice_soundness(kAtilde, 3);
  check_lattice_soundness(kGapMatrix, 3);
  check_lattice_soundness(IntMatrix{{2, 5}}, 5);
  check_lattice_soundness(IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}, 2);
  check_lattice_soundness(IntMatrix{{1, 2, 3, 4}}, 2);
  // Not pointed: saturation by elimination.
  check_lattice_soundness(IntMatrix{{1, -1, 2}}, 3);
  std::mt19937 rng(31);
  for (int t = 0; t < 8; ++t) {
    IntMatrix a = homogenize(oracle::random_matrix(rng, 1 + rng() % 2, 2 + rng() % 2, 2));
    check_lattice_soundness(a, 2);
  }
}

TEST_CASE("normal forms") {
  auto it = toric_ideal(kAtilde);
  auto one = Polynomial::constant(3, 1);
  CHECK(normal_form(one, it) == one);
  CHECK(normal_form(monomial_of({2, 0, 0}, it.order), it).to_string() == "d1*d2");

  auto e2 = toric_ideal(kGapMatrix);
  auto nf = normal_form(monomial_of({0, 3, 0}, e2.order), e2);
  REQUIRE(nf.size() == 1);
  CHECK(multidegree(kGapMatrix, nf.leading().exp) == vec({6, 3}));
  CHECK(normal_form(nf, e2) == nf);
}

TEST_CASE("true degrees") {
  CHECK(true_degree_contains(kGapMatrix, 0, vec({2, 1})));
  CHECK_FALSE(true_degree_contains(kGapMatrix, 0, vec({3, 1})));
  CHECK(true_degree_contains(kGapMatrix, 0, vec({0, 0})));
}

TEST_CASE("quasi-degree examples") {
  auto offsets_and_faces = [](const QuasiDegreeSet& q) {
    std::vector<std::pair<IntVector, std::vector<size_t>>> out;
    for (const auto& c : q.components) out.emplace_back(c.offset, c.face.columns);
    std::sort(out.begin(), out.end());
    return out;
  };
  using Expected = std::vector<std::pair<IntVector, std::vector<size_t>>>;
  CHECK(offsets_and_faces(quasi_degrees(kGapMatrix, 0)) ==
        Expected{{vec({0, 0}), {2}}, {vec({2, 1}), {2}}, {vec({4, 2}), {2}}});
  CHECK(offsets_and_faces(quasi_degrees(IntMatrix{{1}}, 0)) == Expected{{vec({0}), {}}});
  CHECK(offsets_and_faces(quasi_degrees(IntMatrix{{2, 5}}, 0)) ==
        Expected{{vec({0}), {}}, {vec({5}), {}}});

  CHECK_THROWS_AS(quasi_degrees(IntMatrix{{1, -1}}, 0), Error);
  try {
    quasi_degrees(kGapMatrix, 0, 1);
    FAIL("bound should be exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FiltrationBoundExceeded);
  }
}

TEST_CASE("quasi-degree box oracle") {
  check_box_oracle(kGapMatrix, 10, -2, 10);
  check_box_oracle(IntMatrix{{2, 5}}, 6, -2, 10);
  check_box_oracle(IntMatrix{{1}}, 10, -2, 10);
  check_box_oracle(kAtilde, 10, -2, 10);
  check_box_oracle(IntMatrix{{1, 1}, {0, 1}}, 10, -2, 10);
  check_box_oracle(IntMatrix{{1, 1, 1, 1}, {0, 1, 3, 4}}, 10, -2, 10);
}
