#include <doctest.h>

#include "lctkit/criterion.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/oracle.hpp"
#include "lctkit/parse.hpp"

using namespace lctkit;

namespace {
Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}
MPoly P(const char* text) { return parse_mpoly(text); }
PSeries X(int k) { return PSeries::monomial("x", 1, k); }
}  // namespace

TEST_CASE("monomial ideals") {
  CHECK(lct_monomial_ideal({{2, 0}, {0, 3}}, 2) == q(5, 6));
  CHECK(lct_monomial_ideal({{1, 0}, {0, 1}}, 2) == 2);
  for (int k = 1; k <= 6; ++k) CHECK(lct_monomial_ideal({{k}}, 1) == q(1, k));
  CHECK(lct_monomial_ideal({{1, 1}}, 2) == 1);
  CHECK(lct_monomial_ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3) == 3);
  // (x^a, y^b, z^c): 1/a + 1/b + 1/c
  CHECK(lct_monomial_ideal({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}, 3) == q(13, 12));
  // interior points do not matter
  CHECK(lct_monomial_ideal({{4, 0}, {0, 4}, {3, 3}}, 2) == q(1, 2));
  // mixed faces: (x^4, x y, y^4) has vertex (1,1) on the diagonal
  CHECK(lct_monomial_ideal({{4, 0}, {1, 1}, {0, 4}}, 2) == 1);
}

TEST_CASE("plane curves") {
  CHECK(lct_plane_nondegenerate(P("y^3 + x^2")).lct == q(5, 6));
  CHECK(lct_plane_nondegenerate(P("y^2 + x^2")).lct == 1);
  auto r = lct_plane_nondegenerate(P("y^3 + x^2*y + x^4"));
  CHECK(r.lct == q(2, 3));
  CHECK(r.compact_faces == 2);
  CHECK(lct_plane_nondegenerate(P("y - x^5")).lct == 1);
  CHECK_THROWS_AS(lct_plane_nondegenerate(P("(y - x)^2")), NotApplicableError);
  CHECK_THROWS_AS(lct_plane_nondegenerate(P("(y^2 - x^3)^2 + x^7")), NotApplicableError);
  CHECK_THROWS_AS(lct_plane_nondegenerate(P("1 + x")), DomainError);
}

TEST_CASE("binomial curves") {
  CHECK(lct_binomial_curve(3, 2) == q(5, 6));
  CHECK(lct_binomial_curve(2, 2) == 1);
  for (int k = 1; k <= 6; ++k) CHECK(lct_binomial_curve(1, k) == 1);
  for (int d = 1; d <= 6; ++d)
    for (int k = 1; k <= 6; ++k) {
      auto f = MPoly::monomial({"x", "y"}, {0, d}) + MPoly::monomial({"x", "y"}, {k, 0});
      CHECK(lct_plane_nondegenerate(f).lct == lct_binomial_curve(d, k));
    }
}

TEST_CASE("criterion matches the plane oracle on trinomials") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      MPoly f = P("y^3") + MPoly::monomial({"x", "y"}, {a, 1}) + MPoly::monomial({"x", "y"}, {b, 0});
      Rational lct;
      try {
        lct = lct_plane_nondegenerate(f).lct;
      } catch (const NotApplicableError&) {
        continue;
      }
      for (long num = 5; num <= 12; ++num) {
        Rational c(num, 12);
        bool expected = c <= lct;
        CHECK_MESSAGE((lct_ge(3, c, {PSeries(), X(a), X(b)}).verdict == Verdict::Yes) == expected,
                      "a=" << a << " b=" << b << " c=" << c.get_str());
        CHECK_MESSAGE((degree3_test(X(a), X(b), c) == Verdict::Yes) == expected,
                      "a=" << a << " b=" << b << " c=" << c.get_str());
      }
    }
}
