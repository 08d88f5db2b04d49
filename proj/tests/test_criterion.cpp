#include <doctest.h>

#include "lctkit/criterion.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/oracle.hpp"
#include "lctkit/parse.hpp"
#include "lctkit/random_gen.hpp"

using namespace lctkit;

namespace {
PSeries S(const char* text) { return parse_series(text, std::nullopt); }
PSeries X(int k) { return PSeries::monomial("x", 1, k); }
Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}
OrderVal E(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return OrderVal::exact(r);
}
}  // namespace

TEST_CASE("choice of p") {
  auto a = choose_p(3, q(5, 6));
  CHECK(a.p == 2);
  CHECK(a.c1 == q(1, 6));
  CHECK(a.c2 == q(2, 3));
  auto b = choose_p(3, q(1, 2));
  CHECK(b.p == 1);
  CHECK(b.c1 == 0);
  CHECK(b.c2 == q(1, 2));
  auto c = choose_p(5, 1);
  CHECK(c.p == 4);
  CHECK(c.c1 == 0);  // 1 - (d - p) c
  CHECK(c.c2 == 1);
  CHECK_THROWS_AS(choose_p(3, q(1, 3)), DomainError);
  CHECK_THROWS_AS(choose_p(3, q(5, 4)), DomainError);

  // window and signs for every c with small denominator
  for (int d = 2; d <= 6; ++d)
    for (long den = 1; den <= 30; ++den)
      for (long num = 1; num <= den; ++num) {
        Rational cc(num, den);
        if (cc * d <= 1) continue;
        auto ctx = choose_p(d, cc);
        CHECK(ctx.p >= 1);
        CHECK(ctx.p <= d - 1);
        CHECK(cc * (d - ctx.p + 1) > 1);
        CHECK(cc * (d - ctx.p) <= 1);
        CHECK(ctx.c1 >= 0);
        CHECK(ctx.c2 > 0);
      }
}

TEST_CASE("criterion value") {
  std::vector<PSeries> cusp{PSeries(), PSeries(), X(2)};
  CHECK(eval_criterion_value(choose_p(3, q(5, 6)), cusp) == E(1));
  CHECK(eval_criterion_value(choose_p(3, q(11, 12)), cusp) == E(7, 6));
}

TEST_CASE("lct decision") {
  std::vector<PSeries> cusp{PSeries(), PSeries(), X(2)};
  auto yes = lct_ge(3, q(5, 6), cusp);
  CHECK(yes.verdict == Verdict::Yes);
  REQUIRE(yes.V.has_value());
  CHECK(*yes.V == E(1));
  CHECK(lct_ge(3, q(11, 12), cusp).verdict == Verdict::No);
  CHECK(lct_ge(2, q(1, 2), {S("x^3"), S("x + x^2")}).verdict == Verdict::Yes);
  CHECK(lct_ge(2, q(3, 2), {PSeries(), X(2)}).verdict == Verdict::No);
  CHECK_THROWS_AS(lct_ge(2, q(3, 4), {PSeries(), S("1 + x")}), DomainError);

  // unknown data below the threshold stays undecided
  std::vector<PSeries> vague{PSeries(), PSeries("x", {}, Rational(1))};
  CHECK(lct_ge(2, q(3, 4), vague).verdict == Verdict::Unknown);
}

TEST_CASE("depressed cubic") {
  auto [a, b] = depress_cubic(S("3*x"), S("x^2"), S("x^3"));
  // y -> y - x
  CHECK(a == S("-2*x^2"));
  CHECK(b == S("2*x^3"));
  auto [ma, mb] = depress_cubic(parse_mpoly("z1"), parse_mpoly("z2"), parse_mpoly("z3"));
  CHECK((ma - parse_mpoly("z2 - 1/3*z1^2")).is_zero());
  CHECK((mb - parse_mpoly("z3 - 1/3*z1*z2 + 2/27*z1^3")).is_zero());
}

TEST_CASE("explicit degree three test") {
  CHECK(degree3_test(PSeries(), X(2), q(5, 6)) == Verdict::Yes);
  CHECK(degree3_test(PSeries(), X(2), q(9, 10)) == Verdict::No);
  CHECK(degree3_test(PSeries(), X(2), q(1, 2)) == Verdict::Yes);
  CHECK(degree3_test(X(1), X(1), q(1)) == Verdict::Yes);  // smooth curve
}

TEST_CASE("closed forms agree with the direct evaluation") {
  Rng rng(11);
  for (int d = 2; d <= 3; ++d)
    for (Rational c : {q(2, 5), q(1, 2), q(3, 5), q(2, 3), q(3, 4), q(5, 6), q(1)}) {
      if (c * d <= 1) continue;
      auto ctx = choose_p(d, c);
      auto ideals = build_p_plus_minus(ctx);
      for (int trial = 0; trial < 15; ++trial) {
        auto h = random_weierstrass(rng, d, "x");
        auto direct = eval_criterion_value(ctx, h.coeffs());
        auto closed = eval_p_plus_minus(ideals, h.coeffs());
        REQUIRE(closed.has_value());
        CHECK(*closed == direct);
        CHECK(containment_check(ctx, h.coeffs()).passed);
      }
    }
  CHECK_THROWS_AS(build_p_plus_minus(choose_p(4, q(1, 2))), BudgetError);
}

TEST_CASE("explicit bound for a vanishing linear coefficient") {
  CHECK(trace_free_test(2, q(3, 4), {X(2)}) == Verdict::Yes);
  CHECK(lct_binomial_curve(2, 2) >= q(3, 4));
  CHECK(trace_free_test(3, q(5, 12), {PSeries(), X(4)}) == Verdict::Yes);
  CHECK(lct_binomial_curve(3, 4) == q(7, 12));
  CHECK(trace_free_test(3, q(1, 2), {PSeries(), X(8)}) == Verdict::No);
  CHECK(lct_binomial_curve(3, 8) < q(1, 2));
  CHECK_THROWS_AS(trace_free_test(3, q(3, 4), {PSeries(), X(8)}), DomainError);
}

TEST_CASE("integrality pack") {
  auto pack = build_integrality_pack(2);
  CHECK(pack.m == 2);
  REQUIRE(pack.bases.size() == 2);
  auto polys = pack.polys();
  REQUIRE_FALSE(polys.empty());
  // the discriminant is among the generators
  auto disc = parse_mpoly("z1^2 - 4*z2");
  bool found = false;
  for (const auto& p : polys)
    if ((p - disc).is_zero() || (p + disc).is_zero()) found = true;
  CHECK(found);

  CHECK(integrality_pack_test(pack, {PSeries(), S("-t^4")}) == Verdict::Yes);
  CHECK(integrality_pack_test(pack, {PSeries(), S("-t^3")}) == Verdict::No);
  CHECK(integrality_pack_test_all(pack, {PSeries(), S("-t^4")}) == Verdict::Yes);
  CHECK(integrality_pack_test(pack, {S("-t - t^2"), S("t^3")}) == Verdict::Yes);

  auto pack3 = build_integrality_pack(3);
  CHECK(pack3.d == 3);
  CHECK(pack3.groups.size() == 6);
  CHECK(integrality_pack_test(pack3, {S("-t - t^2 - t^3"), S("t^3 + t^4 + t^5"), S("-t^6")}) == Verdict::Yes);
  CHECK(integrality_pack_test(pack3, {PSeries(), PSeries(), S("-t^2")}) == Verdict::No);
  CHECK_THROWS_AS(build_integrality_pack(5), BudgetError);
}
