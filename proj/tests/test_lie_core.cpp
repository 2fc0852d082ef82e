#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hlgeo/catalog.hpp"
#include "hlgeo/verify.hpp"

using namespace hlgeo;
using Q = Rational;

namespace {

Vec<Q> e(std::size_t n, std::size_t one_based) { return basis_vector<Q>(n, one_based - 1); }

Vec<Q> vec(std::initializer_list<int> xs) {
  Vec<Q> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

/// Coordinates of a traceless 2x2 matrix [[a, b], [c, -a]] in the basis
/// X1 = diag(1,-1), X2 = [[0,1],[1,0]], X3 = [[0,1],[-1,0]]: (a, (b+c)/2, (b-c)/2).
Vec<Q> sl2_coords(const Q& a, const Q& b, const Q& c) { return {a, (b + c) / 2, (b - c) / 2}; }

/// [x, y] in sl(2,R) computed with 2x2 matrix products, independent of the
/// structure-constant tables.
Vec<Q> sl2_matrix_bracket(const Vec<Q>& x, const Vec<Q>& y) {
  const auto mat = [](const Vec<Q>& v) {
    // a X1 + b X2 + c X3 = [[a, b + c], [b - c, -a]]
    return std::array<Q, 4>{v[0], v[1] + v[2], v[1] - v[2], -v[0]};
  };
  const auto m = mat(x), n = mat(y);
  const auto mul = [](const std::array<Q, 4>& p, const std::array<Q, 4>& q) {
    return std::array<Q, 4>{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
                            p[2] * q[1] + p[3] * q[3]};
  };
  const auto ab = mul(m, n), ba = mul(n, m);
  return sl2_coords(ab[0] - ba[0], ab[1] - ba[1], ab[2] - ba[2]);
}

}  // namespace

TEST_CASE("sl(2,R) brackets agree with 2x2 matrix commutators") {
  const LieAlgebra p = catalog::sl2();
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) CHECK(bracket(p, e(3, i), e(3, j)) == sl2_matrix_bracket(e(3, i), e(3, j)));
  std::mt19937_64 gen(3);
  for (int t = 0; t < 50; ++t) {
    const Vec<Q> x = random_rational_vector(gen, 3), y = random_rational_vector(gen, 3);
    CHECK(bracket(p, x, y) == sl2_matrix_bracket(x, y));
  }
}

TEST_CASE("bracket values on catalog algebras") {
  const auto s = catalog::build("sl2_x_sl2");
  CHECK(bracket(s.alg, e(6, 1), e(6, 2)) == scale(Q(2), e(6, 3)));
  const auto n = catalog::build("n_sl2");
  CHECK(bracket(n.alg, e(6, 2), e(6, 3)) == scale(Q(-2), e(6, 4)));
  std::mt19937_64 gen(5);
  const Vec<Q> x = random_rational_vector(gen, 6);
  CHECK(is_zero(bracket(s.alg, x, x)));
}

TEST_CASE("bracket rejects vectors of the wrong length") {
  const LieAlgebra p = catalog::sl2();
  CHECK_THROWS_AS(bracket(p, e(3, 1), e(4, 1)), DimensionError);
  CHECK_THROWS_AS(ad_matrix(p, e(2, 1)), DimensionError);
}

TEST_CASE("structure constants are stored for i < j only") {
  CHECK_THROWS_AS(LieAlgebra(LieAlgebra::default_labels(3), {{1, 0, vec({0, 0, 1})}}), DimensionError);
  CHECK_THROWS_AS(LieAlgebra(LieAlgebra::default_labels(3), {{0, 1, vec({0, 0, 1})}, {0, 1, vec({0, 1, 0})}}),
                  DimensionError);
  const LieAlgebra a(LieAlgebra::default_labels(3), {{0, 1, vec({0, 0, 1})}});
  CHECK(a.basis_bracket(1, 0) == vec({0, 0, -1}));
}

TEST_CASE("Jacobi defect") {
  for (const auto& entry : catalog::entries()) CHECK(sgn(jacobi_defect(catalog::build(entry.name).alg).defect) == 0);
  // [E1,E2] = E1, [E1,E3] = E2, [E2,E3] = 0: the cyclic sum on (E1,E2,E3) is
  // [[E1,E2],E3] + [[E2,E3],E1] + [[E3,E1],E2] = [E1,E3] + 0 - [E2,E2] = E2.
  const LieAlgebra bad(LieAlgebra::default_labels(3), {{0, 1, vec({1, 0, 0})}, {0, 2, vec({0, 1, 0})}});
  const auto r = jacobi_defect(bad);
  CHECK(r.defect == Q(1));
  REQUIRE(r.witness);
  CHECK(*r.witness == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("ad matrices") {
  const LieAlgebra p = catalog::sl2();
  const Matrix<Q> ad3 = ad_matrix(p, e(3, 3));
  CHECK(ad3 * e(3, 1) == scale(Q(-2), e(3, 2)));
  CHECK(ad3 * e(3, 2) == scale(Q(2), e(3, 1)));
  CHECK(is_zero(ad3 * e(3, 3)));
  CHECK(is_zero(ad_matrix(p, zeros<Q>(3))));
  CHECK(is_zero(ad_matrix(catalog::build("n_sl2").alg, e(6, 4))));
  std::mt19937_64 gen(9);
  for (int t = 0; t < 10; ++t) {
    const Vec<Q> x = random_rational_vector(gen, 3), y = random_rational_vector(gen, 3);
    CHECK(ad_matrix(p, x) * y == bracket(p, x, y));
    CHECK(ad_matrix(p, x + y) == ad_matrix(p, x) + ad_matrix(p, y));
  }
}

TEST_CASE("Killing forms") {
  CHECK(killing_form(catalog::sl2()) == Matrix<Q>::diagonal({Q(8), Q(8), Q(-8)}));
  CHECK(is_zero(killing_form(LieAlgebra::abelian(3))));
  CHECK(is_zero(killing_form(catalog::build("n_sl2").alg)));
  CHECK(is_semisimple(catalog::build("sl2_c").alg));
  CHECK_FALSE(is_semisimple(catalog::build("sl2_semidirect_r3").alg));
}

TEST_CASE("Killing form is ad-invariant on every catalog algebra") {
  for (const auto& entry : catalog::entries()) {
    const LieAlgebra alg = catalog::build(entry.name).alg;
    const std::size_t n = alg.dim();
    const Matrix<Q> k = killing_form(alg);
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b)
        for (std::size_t c = 1; c <= n; ++c) {
          const Vec<Q> xy = bracket(alg, e(n, a), e(n, b)), xz = bracket(alg, e(n, a), e(n, c));
          CHECK((k * xy)[c - 1] + (k * xz)[b - 1] == Q(0));
        }
  }
}

TEST_CASE("ad* is the metric adjoint of ad") {
  std::mt19937_64 gen(13);
  for (const auto& entry : catalog::entries()) {
    const auto s = catalog::build(entry.name);
    const std::size_t n = s.alg.dim();
    for (int t = 0; t < 10; ++t) {
      const Vec<Q> x = random_rational_vector(gen, n), y = random_rational_vector(gen, n),
                   w = random_rational_vector(gen, n);
      CHECK(s.metric.inner(ad_star(s.alg, s.metric, x, y), w) == s.metric.inner(y, bracket(s.alg, x, w)));
    }
    CHECK(is_zero(ad_star(s.alg, s.metric, zeros<Q>(n), random_rational_vector(gen, n))));
  }
}

TEST_CASE("ad* = -ad for the trace form on sl(2,R)") {
  const auto s = catalog::build("sl2r_biinvariant");
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      CHECK(ad_star(s.alg, s.metric, e(3, a), e(3, b)) == -bracket(s.alg, e(3, a), e(3, b)));
  std::mt19937_64 gen(17);
  const Vec<Q> x = random_rational_vector(gen, 3);
  CHECK(is_zero(ad_star(s.alg, s.metric, x, x)));
}

TEST_CASE("ad*_x x on sl(2,C) is (0, 2[v,u])") {
  const auto s = catalog::build("sl2_c");
  std::mt19937_64 gen(19);
  for (int t = 0; t < 20; ++t) {
    const Vec<Q> u = random_rational_vector(gen, 3), v = random_rational_vector(gen, 3);
    Vec<Q> x = u;
    x.insert(x.end(), v.begin(), v.end());
    Vec<Q> want = zeros<Q>(3);
    const Vec<Q> vu = scale(Q(2), sl2_matrix_bracket(v, u));
    want.insert(want.end(), vu.begin(), vu.end());
    CHECK(ad_star(s.alg, s.metric, x, x) == want);
  }
}

TEST_CASE("degenerate Gram matrices are rejected") {
  Matrix<Q> g(2, 2);
  g(0, 0) = 1;
  CHECK_THROWS_AS(Metric{g}, DegenerateMetricError);
  Matrix<Q> asym = Matrix<Q>::identity(2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(Metric{asym}, DegenerateMetricError);
}

TEST_CASE("derivation defects") {
  const auto s = catalog::build("sl2_x_sl2");
  const Matrix<Q> ad1 = ad_matrix(catalog::sl2(), e(3, 1));
  CHECK(sgn(derivation_defect(s.alg, catalog::block_diagonal(ad1, ad1)).defect) == 0);

  const auto n = catalog::build("n_sl2");
  const Matrix<Q> ad2 = ad_matrix(catalog::sl2(), e(3, 2));
  CHECK(sgn(derivation_defect(n.alg, catalog::block_diagonal(ad2, ad2)).defect) == 0);

  // Swapping E1 and E4: on (E1,E2) both sides equal 2E3. On (E2,E3) the map
  // sends [E2,E3] = -2E1 to -2E4 while the Leibniz side is 2[E2,E3] = -4E1.
  Matrix<Q> swap = Matrix<Q>::identity(6);
  swap(0, 0) = 0;
  swap(3, 3) = 0;
  swap(0, 3) = 1;
  swap(3, 0) = 1;
  const Vec<Q> on_12 = swap * s.alg.basis_bracket(0, 1) - bracket(s.alg, swap * e(6, 1), e(6, 2)) -
                       bracket(s.alg, e(6, 1), swap * e(6, 2));
  CHECK(is_zero(on_12));
  const Vec<Q> on_23 = swap * s.alg.basis_bracket(1, 2) - bracket(s.alg, swap * e(6, 2), e(6, 3)) -
                       bracket(s.alg, e(6, 2), swap * e(6, 3));
  CHECK(on_23 == vec({4, 0, 0, -2, 0, 0}));
  const auto r = derivation_defect(s.alg, swap);
  CHECK(r.defect == Q(4));
  REQUIRE(r.witness);
  const auto [i, j] = *r.witness;
  const Vec<Q> at_witness = swap * s.alg.basis_bracket(i, j) - bracket(s.alg, swap * e(6, i + 1), e(6, j + 1)) -
                            bracket(s.alg, e(6, i + 1), swap * e(6, j + 1));
  CHECK(max_norm(at_witness) == r.defect);
}
