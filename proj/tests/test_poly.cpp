#include <doctest.h>

#include "lctkit/errors.hpp"
#include "lctkit/mpoly.hpp"
#include "lctkit/parse.hpp"
#include "lctkit/qpoly.hpp"
#include "lctkit/symmetric.hpp"
#include "lctkit/upoly.hpp"

using namespace lctkit;

namespace {
MPoly P(const char* text) { return parse_mpoly(text); }
PSeries S(const char* text) { return parse_series(text, std::nullopt); }
bool same(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

// prod (y - r) over the given roots, as a monic polynomial over MPoly.
UPoly<MPoly> from_roots(const std::vector<MPoly>& roots) {
  DensePoly<MPoly> acc{MPoly::constant(1)};
  for (const auto& r : roots) acc = dense_mul(acc, DensePoly<MPoly>{-r, MPoly::constant(1)});
  return UPoly<MPoly>::from_dense(acc);
}

void check_same_poly(const UPoly<MPoly>& a, const UPoly<MPoly>& b) {
  REQUIRE(a.degree() == b.degree());
  for (int i = 1; i <= a.degree(); ++i) CHECK_MESSAGE(same(a.a(i), b.a(i)), "coefficient " << i);
}

std::vector<MPoly> root_vars(int d) {
  std::vector<MPoly> r;
  for (int i = 1; i <= d; ++i) r.push_back(MPoly::variable("r" + std::to_string(i)));
  return r;
}
}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(same(P("(x + y)^2"), P("x^2 + 2*x*y + y^2")));
  CHECK(same(P("(x - 1)*(x + 1)"), P("x^2 - 1")));
  CHECK(P("x*y - y*x").is_zero());
  CHECK(P("3*x^2*y + y").total_degree() == 3);
  CHECK(P("3*x^2*y + y").degree_in("x") == 2);
  auto sub = P("x^2 + y").substitute({{"x", P("y + 1")}});
  CHECK(same(sub, P("y^2 + 3*y + 1")));
}

TEST_CASE("taylor shift") {
  auto w = MPoly::variable("w");
  auto h = generic_upoly(2);
  auto s = taylor_shift(h, w);
  CHECK(same(s.a(1), P("z1 + 2*w")));
  CHECK(same(s.a(2), P("w^2 + z1*w + z2")));

  UPoly<PSeries> cusp({PSeries(), S("-t^3")});
  auto s0 = taylor_shift(cusp, PSeries());
  CHECK(s0.a(1).is_exact_zero());
  CHECK(s0.a(2) == S("-t^3"));

  UPoly<MPoly> cube({MPoly(), MPoly(), MPoly()});
  auto c = taylor_shift(cube, w);
  CHECK(same(c.a(1), P("3*w")));
  CHECK(same(c.a(2), P("3*w^2")));
  CHECK(same(c.a(3), P("w^3")));
}

TEST_CASE("resultant") {
  auto a = MPoly::variable("a"), y = MPoly::variable("y"), one = MPoly::constant(1);
  auto r = resultant(DensePoly<MPoly>{a, MPoly(), one}, DensePoly<MPoly>{y, -one});
  CHECK(same(r, P("y^2 + a")));

  auto zero = resultant(DensePoly<MPoly>{-one, one}, DensePoly<MPoly>{-one, one});
  CHECK(zero.is_zero());

  auto f = DensePoly<PSeries>{S("-t^3"), PSeries(), S("1")};
  auto g = DensePoly<PSeries>{S("-t^3 + t^10"), PSeries(), S("1")};
  auto res = resultant(f, g);
  CHECK(res.ord() == OrderVal::exact(20));
  CHECK(res == S("t^20"));

  // Res(f, g) = prod g(roots of f) for explicit roots
  auto r1 = resultant(DensePoly<MPoly>{P("2"), P("-3"), one}, DensePoly<MPoly>{P("-5"), one});
  CHECK(r1.constant_term() == Rational(12));  // (1 - 5)(2 - 5)
}

TEST_CASE("symmetric reduction") {
  std::vector<std::string> r2{"r1", "r2"};
  CHECK(same(symmetric_reduce(P("r1^2 + r2^2"), r2), P("e1^2 - 2*e2")));
  CHECK(same(symmetric_reduce(P("r1*r2"), r2), P("e2")));
  CHECK(same(symmetric_reduce(P("(r1 - r2)^2"), r2), P("e1^2 - 4*e2")));
  CHECK_THROWS_AS(symmetric_reduce(P("r1"), r2), DomainError);

  std::vector<std::string> r3{"r1", "r2", "r3"};
  auto disc = P("(r1 - r2)^2*(r1 - r3)^2*(r2 - r3)^2");
  auto red = symmetric_reduce(disc, r3);
  // classical discriminant of y^3 - e1 y^2 + e2 y - e3
  CHECK(same(red, P("e1^2*e2^2 - 4*e2^3 - 4*e1^3*e3 + 18*e1*e2*e3 - 27*e3^2")));

  // round trip through the elementary symmetric polynomials
  std::map<std::string, MPoly> back;
  for (int k = 1; k <= 3; ++k) back.emplace("e" + std::to_string(k), elementary_symmetric(r3, k));
  CHECK(same(red.substitute(back), disc));
}

TEST_CASE("elementary to coefficients") {
  // e1 = -z1, e2 = z2
  CHECK(same(elementary_to_coefficients(P("e1^2 - 4*e2"), 2), P("z1^2 - 4*z2")));
}

TEST_CASE("compound polynomial") {
  auto h2 = generic_upoly(2);
  auto c22 = compound_poly(h2, 2);
  REQUIRE(c22.degree() == 1);
  CHECK(same(c22.a(1), -P("z2")));
  check_same_poly(compound_poly(h2, 1), h2);

  auto r = root_vars(3);
  auto h3 = from_roots(r);
  check_same_poly(compound_poly(h3, 3), from_roots({r[0] * r[1] * r[2]}));
  check_same_poly(compound_poly(h3, 2), from_roots({r[0] * r[1], r[0] * r[2], r[1] * r[2]}));
  auto g3 = compound_poly(generic_upoly(3), 3);
  CHECK(same(g3.a(1), P("z3")));
}

TEST_CASE("difference polynomial") {
  auto d2 = difference_poly(generic_upoly(2));
  REQUIRE(d2.degree() == 2);
  CHECK(d2.a(1).is_zero());
  CHECK(same(d2.a(2), -P("z1^2 - 4*z2")));

  UPoly<PSeries> cusp({PSeries(), S("-t^3")});
  auto dc = difference_poly(cusp);
  CHECK(dc.a(1).is_exact_zero());
  CHECK(dc.a(2) == S("-4*t^3"));

  UPoly<PSeries> split({S("-t - t^2"), S("t^3")});
  auto ds = difference_poly(split);
  CHECK(ds.a(2) == -(S("t - t^2") * S("t - t^2")));

  auto r = root_vars(3);
  std::vector<MPoly> diffs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) diffs.push_back(r[i] - r[j]);
  check_same_poly(difference_poly(from_roots(r)), from_roots(diffs));

  CHECK_THROWS_AS(difference_poly(generic_upoly(5)), BudgetError);
}

TEST_CASE("value polynomial") {
  auto w = MPoly::variable("w");
  auto h2 = generic_upoly(2);
  check_same_poly(value_poly(h2, w), h2);

  UPoly<MPoly> pure({MPoly(), -P("z2")});
  auto sq = value_poly(pure, P("w^2"));
  CHECK(same(sq.a(1), -P("2*z2")));
  CHECK(same(sq.a(2), P("z2^2")));

  // derivative values of a depressed cubic: y^3 + 3a y^2 - (4a^3 + 27b^2)
  UPoly<MPoly> cubic({MPoly(), P("a"), P("b")});
  auto dv = value_poly(cubic, P("z2 + 3*w^2"));
  CHECK(same(dv.a(1), P("3*a")));
  CHECK(dv.a(2).is_zero());
  CHECK(same(dv.a(3), -P("4*a^3 + 27*b^2")));

  auto r = root_vars(3);
  auto h3 = from_roots(r);
  auto G = P("w^2 + z1*w");
  std::vector<MPoly> vals;
  for (const auto& root : r) vals.push_back(root * root + h3.a(1) * root);
  check_same_poly(value_poly(h3, G), from_roots(vals));
}

TEST_CASE("rational polynomial helpers") {
  QPoly p{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
  QPoly q{Rational(1), Rational(1)};                // x + 1
  CHECK(qpoly_gcd(p, q) == q);
  auto sq = squarefree_decomposition(qpoly_mul(qpoly_mul(q, q), QPoly{Rational(-2), Rational(1)}));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 1);
  CHECK(sq[1].second == 2);
  CHECK(sq[1].first == q);
}
