#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hlgeo/linalg.hpp"
#include "hlgeo/verify.hpp"

using namespace hlgeo;
using Q = Rational;

TEST_CASE("rationals print in lowest terms with a positive denominator") {
  CHECK(to_string(Q(1, 6) + Q(1, 2)) == "2/3");
  CHECK(to_string(Q(-3)) == "-3");
  CHECK(to_string(Q(1, 3) - Q(1, 3)) == "0");
  Q q(6, -4);
  q.canonicalize();
  CHECK(to_string(q) == "-3/2");
}

TEST_CASE("parse_rational accepts only the canonical spelling") {
  CHECK(parse_rational("2/3") == Q(2, 3));
  CHECK(parse_rational("-7") == Q(-7));
  CHECK(parse_rational("0") == Q(0));
  for (const char* bad : {"2/4", "+1", "-0", "3/1", "1/0", "", "1/", "/2", "1.5", "a", "1/-2", " 1", "01"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("parse and print are inverse on random rationals") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const Q q = random_rational(gen) * random_rational(gen) + random_rational(gen);
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("exact determinant, inverse and solve") {
  Matrix<Q> a(3, 3);
  const int v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = v[r][c];
  CHECK(determinant(a) == Q(18));
  CHECK(a * inverse(a) == Matrix<Q>::identity(3));
  const Vec<Q> b = {Q(1), Q(2), Q(3)};
  CHECK(a * solve(a, b) == b);
  Matrix<Q> singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK(determinant(singular) == Q(0));
  CHECK_THROWS_AS(inverse(singular), SingularOperatorError);
}

TEST_CASE("pfaffian squares to the determinant of a skew matrix") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 20; ++t) {
    Matrix<Q> a(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = r + 1; c < 4; ++c) {
        a(r, c) = random_rational(gen);
        a(c, r) = -a(r, c);
      }
    const Q pf = pfaffian(a);
    CHECK(pf * pf == determinant(a));
  }
  Matrix<Q> j(2, 2);
  j(0, 1) = 1;
  j(1, 0) = -1;
  CHECK(pfaffian(j) == Q(1));
}
