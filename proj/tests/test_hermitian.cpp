#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hlgeo/catalog.hpp"
#include "hlgeo/verify.hpp"

using namespace hlgeo;
using Q = Rational;

namespace {

Vec<Q> e(std::size_t n, std::size_t one_based) { return basis_vector<Q>(n, one_based - 1); }

const char* const kGroups[] = {"sl2_x_sl2", "sl2_c", "sl2_semidirect_r3", "n_sl2"};

}  // namespace

TEST_CASE("almost complex structures are validated") {
  const AlmostComplex j = AlmostComplex::standard(6);
  CHECK(j.apply(e(6, 1)) == e(6, 4));
  CHECK(j.apply(e(6, 6)) == -e(6, 3));
  CHECK(is_zero(j.matrix() * j.matrix() + Matrix<Q>::identity(6)));
  CHECK_THROWS_AS(AlmostComplex::standard(3), DimensionError);
  try {
    AlmostComplex bad(Matrix<Q>::identity(2));
    FAIL("identity accepted as J");
  } catch (const ValidityError& err) {
    CHECK(err.invariant() == "J_squared");
    CHECK(err.witness() == std::vector<std::size_t>{1});
  }
}

TEST_CASE("compatibility of J with the catalog metrics") {
  for (const auto& entry : catalog::entries()) {
    const auto s = catalog::build(entry.name);
    if (!s.acs) continue;
    INFO(entry.name);
    CHECK_FALSE(compatibility_violation(s.metric, *s.acs));
  }
  // Swapping the signs of a J-pair breaks <Jx, Jy> = <x, y>.
  const Metric mixed = Metric::from_signature({Q(1), Q(1), Q(1), Q(-1), Q(1), Q(-1)});
  const auto bad = compatibility_violation(mixed, AlmostComplex::standard(6));
  REQUIRE(bad);
  CHECK(*bad == std::array<std::size_t, 2>{0, 0});
}

TEST_CASE("Kahler form is antisymmetric and nondegenerate") {
  for (const auto& entry : catalog::entries()) {
    const auto s = catalog::build(entry.name);
    if (!s.acs) continue;
    INFO(entry.name);
    const Matrix<Q> w = kahler_form(s.metric, *s.acs);
    CHECK(is_zero(w + w.transpose()));
    CHECK(sgn(pfaffian(w)) != 0);
    CHECK(omega(s.metric, *s.acs, e(6, 1), e(6, 4)) == -omega(s.metric, *s.acs, e(6, 4), e(6, 1)));
  }
}

TEST_CASE("Nijenhuis tensor values") {
  const auto x = catalog::build("sl2_x_sl2");
  CHECK(nijenhuis(x.alg, *x.acs, e(6, 1), e(6, 2)) == scale(Q(2), e(6, 6)) - scale(Q(2), e(6, 3)));

  const auto c = catalog::build("sl2_c");
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b) CHECK(is_zero(nijenhuis(c.alg, *c.acs, e(6, a), e(6, b))));

  const auto r3 = catalog::build("sl2_semidirect_r3");
  CHECK(nijenhuis(r3.alg, *r3.acs, e(6, 1), e(6, 2)) == scale(Q(2), e(6, 3)));

  // Verbatim formula without a prefactor on the nilpotent group.
  const auto n = catalog::build("n_sl2");
  CHECK(nijenhuis(n.alg, *n.acs, e(6, 1), e(6, 2)) == scale(Q(-2), e(6, 6)));

  CHECK_THROWS_AS(nijenhuis(x.alg, *x.acs, e(3, 1), e(6, 2)), DimensionError);
}

TEST_CASE("Nijenhuis tensor algebraic properties") {
  std::mt19937_64 gen(37);
  for (const char* name : kGroups) {
    INFO(name);
    const auto s = catalog::build(name);
    const AlmostComplex& j = *s.acs;
    for (int t = 0; t < 10; ++t) {
      const Vec<Q> x = random_rational_vector(gen, 6), y = random_rational_vector(gen, 6),
                   z = random_rational_vector(gen, 6);
      const Q a = random_rational(gen);
      CHECK(nijenhuis(s.alg, j, x, y) == -nijenhuis(s.alg, j, y, x));
      CHECK(nijenhuis(s.alg, j, scale(a, x) + z, y) ==
            scale(a, nijenhuis(s.alg, j, x, y)) + nijenhuis(s.alg, j, z, y));
      CHECK(nijenhuis(s.alg, j, j.apply(x), j.apply(y)) == -nijenhuis(s.alg, j, x, y));
      CHECK(nijenhuis(s.alg, j, j.apply(x), y) == -j.apply(nijenhuis(s.alg, j, x, y)));
    }
  }
}

TEST_CASE("d omega values") {
  const auto x = catalog::build("sl2_x_sl2");
  CHECK(d_omega(x.alg, x.metric, *x.acs, e(6, 1), e(6, 2), e(6, 6)) == Q(2, 3));
  const auto c = catalog::build("sl2_c");
  CHECK(d_omega(c.alg, c.metric, *c.acs, e(6, 1), e(6, 2), e(6, 6)) == Q(-2, 3));
  const auto r3 = catalog::build("sl2_semidirect_r3");
  CHECK(d_omega(r3.alg, r3.metric, *r3.acs, e(6, 2), e(6, 3), e(6, 4)) == Q(-2, 3));
  const auto n = catalog::build("n_sl2");
  CHECK(d_omega(n.alg, n.metric, *n.acs, e(6, 1), e(6, 2), e(6, 3)) == Q(-2));
}

TEST_CASE("d omega is totally antisymmetric") {
  for (const char* name : kGroups) {
    INFO(name);
    const auto s = catalog::build(name);
    const auto dw = [&](std::size_t a, std::size_t b, std::size_t c) {
      return d_omega(s.alg, s.metric, *s.acs, e(6, a), e(6, b), e(6, c));
    };
    for (std::size_t a = 1; a <= 6; ++a)
      for (std::size_t b = 1; b <= 6; ++b)
        for (std::size_t c = 1; c <= 6; ++c) {
          const Q v = dw(a, b, c);
          CHECK(dw(b, a, c) == -v);
          CHECK(dw(a, c, b) == -v);
          CHECK(dw(c, a, b) == v);
        }
  }
}

TEST_CASE("covariant derivative of J") {
  const auto r3 = catalog::build("sl2_semidirect_r3");
  const Connection c3 = connection_general(r3.alg, r3.metric);
  CHECK(nabla_j(c3, *r3.acs, e(6, 1), e(6, 2)) == e(6, 6));

  const auto flat = catalog::build("flat_c3");
  const Connection cf = connection_general(flat.alg, flat.metric);
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b) CHECK(is_zero(nabla_j(cf, *flat.acs, e(6, a), e(6, b))));

  // On sl2 (+) sl2 the connection is 1/2 the bracket, so by hand
  // (nabla_E1 J)E2 = 1/2 [E1, E5] - 1/2 J[E1, E2] = 0 - J E3 = -E6.
  const auto x = catalog::build("sl2_x_sl2");
  const Connection cx = connection_general(x.alg, x.metric);
  CHECK(nabla_j(cx, *x.acs, e(6, 1), e(6, 2)) == -e(6, 6));

  std::mt19937_64 gen(41);
  for (const char* name : kGroups) {
    INFO(name);
    const auto s = catalog::build(name);
    const Connection c = connection_general(s.alg, s.metric);
    const AlmostComplex& j = *s.acs;
    for (int t = 0; t < 10; ++t) {
      const Vec<Q> u = random_rational_vector(gen, 6), v = random_rational_vector(gen, 6);
      CHECK(nabla_j(c, j, u, j.apply(v)) == -j.apply(nabla_j(c, j, u, v)));
    }
  }
}

TEST_CASE("integrability and almost-Kahler verdicts") {
  const auto c = catalog::build("sl2_c");
  CHECK(is_integrable(c.alg, *c.acs).integrable);

  const auto x = catalog::build("sl2_x_sl2");
  const auto vx = is_integrable(x.alg, *x.acs);
  CHECK_FALSE(vx.integrable);
  REQUIRE(vx.witness);
  CHECK(*vx.witness == std::array<std::size_t, 2>{0, 1});

  const auto n = catalog::build("n_sl2");
  const auto vn = is_integrable(n.alg, *n.acs);
  CHECK_FALSE(vn.integrable);
  REQUIRE(vn.witness);
  CHECK(*vn.witness == std::array<std::size_t, 2>{0, 1});

  const auto kx = is_almost_kahler(x.alg, x.metric, *x.acs);
  CHECK_FALSE(kx.almost_kahler);
  REQUIRE(kx.witness);
  CHECK(*kx.witness == std::array<std::size_t, 3>{0, 1, 5});

  const auto r3 = catalog::build("sl2_semidirect_r3");
  const auto kr = is_almost_kahler(r3.alg, r3.metric, *r3.acs);
  CHECK_FALSE(kr.almost_kahler);
  REQUIRE(kr.witness);
  const auto [a, b, cc] = *kr.witness;
  CHECK(sgn(d_omega(r3.alg, r3.metric, *r3.acs, e(6, a + 1), e(6, b + 1), e(6, cc + 1))) != 0);
  CHECK(sgn(d_omega(r3.alg, r3.metric, *r3.acs, e(6, 2), e(6, 3), e(6, 4))) != 0);

  const auto flat = catalog::build("flat_c3");
  CHECK(is_almost_kahler(flat.alg, flat.metric, *flat.acs).almost_kahler);
  CHECK(is_integrable(flat.alg, *flat.acs).integrable);
}

TEST_CASE("verdict matrix over the four groups") {
  for (const char* name : kGroups) {
    INFO(name);
    const auto s = catalog::build(name);
    CHECK(is_integrable(s.alg, *s.acs).integrable == (std::string(name) == "sl2_c"));
    CHECK_FALSE(is_almost_kahler(s.alg, s.metric, *s.acs).almost_kahler);
  }
}

TEST_CASE("isotropy structure checks") {
  const Matrix<Q> ad1 = ad_matrix(catalog::sl2(), e(3, 1));
  const auto c = catalog::build("sl2_c");
  const auto dc = isotropy_structure_check(c.alg, c.metric, &*c.acs, catalog::block_diagonal(ad1, ad1));
  CHECK(dc.all_zero());
  REQUIRE(dc.j_commutation);

  const Matrix<Q> ad3 = ad_matrix(catalog::sl2(), e(3, 3));
  const auto n = catalog::build("n_sl2");
  CHECK(isotropy_structure_check(n.alg, n.metric, &*n.acs, catalog::block_diagonal(ad3, ad3)).all_zero());

  // The identity commutes with J, so only the first two defects are nonzero.
  const auto x = catalog::build("sl2_x_sl2");
  const auto di = isotropy_structure_check(x.alg, x.metric, &*x.acs, Matrix<Q>::identity(6));
  CHECK(sgn(di.derivation) > 0);
  CHECK(di.metric_skew == Q(2));
  REQUIRE(di.j_commutation);
  CHECK(sgn(*di.j_commutation) == 0);
  CHECK_FALSE(di.all_zero());

  const auto without_j = isotropy_structure_check<Q>(x.alg, x.metric, nullptr, Matrix<Q>::identity(6));
  CHECK_FALSE(without_j.j_commutation);
}

TEST_CASE("catalog isotropy generators are so(1,2) symmetries") {
  for (const char* name : kGroups) {
    INFO(name);
    const auto s = catalog::build(name);
    REQUIRE(s.isotropy.size() == 3);
    for (const auto& d : s.isotropy) CHECK(isotropy_structure_check(s.alg, s.metric, &*s.acs, d).all_zero());
    const auto& d = s.isotropy;
    CHECK(commutator(d[0], d[1]) == Q(2) * d[2]);
    CHECK(commutator(d[0], d[2]) == Q(2) * d[1]);
    CHECK(commutator(d[1], d[2]) == Q(-2) * d[0]);
  }
}
