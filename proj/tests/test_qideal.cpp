#include <doctest.h>

#include "lctkit/errors.hpp"
#include "lctkit/ideals.hpp"
#include "lctkit/json_io.hpp"
#include "lctkit/parse.hpp"
#include "lctkit/qideal.hpp"
#include "lctkit/random_gen.hpp"
#include "lctkit/rootdata.hpp"

using namespace lctkit;

namespace {
MPoly P(const char* text) { return parse_mpoly(text); }
PSeries S(const char* text) { return parse_series(text, std::nullopt); }
Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}
using Arc = std::map<std::string, PSeries>;

OrderVal ord(const PolyIdeal& a, const Arc& arc) { return qi_ord_along_arc(a, arc); }

SeriesIdeal sx(const char* text, Rational e = 1) { return SeriesIdeal::principal(S(text), e); }

std::vector<PSeries> coeffs(const UPoly<PSeries>& h) { return h.coeffs(); }
}  // namespace

TEST_CASE("products of Q-ideals") {
  Arc arc{{"x", S("t")}};
  auto half = PolyIdeal::principal(P("x"), q(1, 2));
  auto third = PolyIdeal::principal(P("x"), q(1, 3));
  auto prod = qi_product<MPoly>({half, third});
  CHECK(prod.exponent() == q(1, 6));
  CHECK(ord(prod, arc) == OrderVal::exact(q(5, 6)));
  CHECK(ord(prod, arc) == ord(PolyIdeal::principal(P("x"), q(5, 6)), arc));

  auto a = PolyIdeal::generated({P("x^2"), P("x^3")});
  CHECK(ord(qi_product<MPoly>({a, PolyIdeal::unit()}), arc) == ord(a, arc));
  CHECK(ord(qi_product<MPoly>({a, qi_power(PolyIdeal::unit(), q(7, 3))}), arc) == ord(a, arc));
  CHECK(ord(qi_product<MPoly>({a, PolyIdeal::principal(P("x"))}), arc) == OrderVal::exact(3));
  CHECK(qi_product<MPoly>({a, PolyIdeal::zero()}).is_zero());
}

TEST_CASE("sums of Q-ideals") {
  Arc arc{{"x", S("t")}};
  auto s = qi_sum<MPoly>({PolyIdeal::principal(P("x^3")), PolyIdeal::principal(P("x^5"))});
  CHECK(ord(s, arc) == OrderVal::exact(3));

  auto b3 = build_b(3);
  CHECK_FALSE(b3.is_zero());
  CHECK(b3.exponent() == q(1, 6));
  CHECK(b3.gens().size() == 3);

  auto a = PolyIdeal::generated({P("x^2 + x^3"), P("x^4")}, q(2, 3));
  CHECK(ord(qi_sum<MPoly>({a, a}), arc) == ord(a, arc));
  CHECK(ord(qi_sum<MPoly>({a, PolyIdeal::zero()}), arc) == ord(a, arc));
  CHECK(qi_sum<MPoly>({PolyIdeal::zero(), PolyIdeal::zero()}).is_zero());
}

TEST_CASE("powers of Q-ideals") {
  Arc arc{{"x", S("t")}, {"y", S("t^2")}};
  auto x = PolyIdeal::principal(P("x"), q(1, 2));
  CHECK(ord(qi_power(x, 2), arc) == OrderVal::exact(1));
  CHECK(ord(qi_power(x, 1), arc) == ord(x, arc));
  auto xy = PolyIdeal::generated({P("x^3"), P("y^2")}, q(1, 6));
  auto cubed = qi_power(xy, 3);
  CHECK(cubed.exponent() == q(1, 2));
  CHECK(ord(cubed, arc) == OrderVal::exact(q(3, 2)));
  CHECK_THROWS_AS(qi_power(xy, -1), DomainError);
}

TEST_CASE("order along arcs") {
  CHECK(ord(PolyIdeal::principal(P("x"), q(5, 6)), {{"x", S("t^2")}}) == OrderVal::exact(q(5, 3)));
  for (int k = 1; k <= 9; ++k) {
    auto a = PolyIdeal::generated({P("z1^3"), P("z2^2")}, q(1, 6));
    auto v = qi_ord_at(a, {PSeries(), parse_series("x^" + std::to_string(k), std::nullopt)});
    CHECK(v == OrderVal::exact(q(k, 3)));
  }
  CHECK(ord(PolyIdeal::zero(), {{"x", S("t")}}).is_infinite());
  CHECK_THROWS_AS(ord(PolyIdeal::principal(P("x")), {{"x", S("1 + t")}}), DomainError);

  // truncated arcs give lower bounds
  Arc tr{{"x", parse_series("t", Rational(3))}};
  CHECK(ord(PolyIdeal::principal(P("x^2 - x^2")), tr).is_infinite());
  auto bound = ord(PolyIdeal::principal(P("x - x^2")), {{"x", parse_series("t + O(t^2)", std::nullopt)}});
  CHECK(bound == OrderVal::exact(1));
}

TEST_CASE("one-variable pair test") {
  CHECK(lc_dim1({sx("x^2"), sx("x")}) == Verdict::Yes);
  CHECK(lc_dim1({sx("x^3"), sx("x")}) == Verdict::No);
  CHECK(lc_dim1({sx("x", q(1, 2)), SeriesIdeal::unit()}) == Verdict::Yes);
  CHECK_THROWS_AS(lc_dim1({SeriesIdeal::zero(), sx("x")}), DomainError);
  CHECK_THROWS_AS(lc_dim1({sx("x"), SeriesIdeal::zero()}), DomainError);

  SeriesIdeal unknown = SeriesIdeal::principal(PSeries("x", {}, Rational(1)));
  CHECK(lc_dim1({unknown, SeriesIdeal::unit()}) == Verdict::Unknown);
  SeriesIdeal big = SeriesIdeal::principal(PSeries("x", {}, Rational(5)));
  CHECK(lc_dim1({big, SeriesIdeal::unit()}) == Verdict::No);
}

TEST_CASE("order is a semigroup morphism") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto random_poly = [&] {
      MPoly p;
      int terms = static_cast<int>(rng.uniform(1, 3));
      for (int i = 0; i < terms; ++i)
        p = p + MPoly::monomial({"x", "y"}, {static_cast<int>(rng.uniform(0, 4)), static_cast<int>(rng.uniform(0, 4))},
                                rng.nonzero(3));
      if (p.constant_term() != 0) p = p - MPoly::constant(p.constant_term());
      if (p.is_zero()) p = P("x*y");
      return p;
    };
    auto random_ideal = [&] {
      std::vector<MPoly> gens;
      int n = static_cast<int>(rng.uniform(1, 3));
      for (int i = 0; i < n; ++i) gens.push_back(random_poly());
      return PolyIdeal::generated(gens, rng.rational_in(0, 3, 6));
    };
    Arc arc{{"x", random_series(rng, "t", 1, 4, 2)}, {"y", random_series(rng, "t", 1, 4, 2)}};
    if (arc["x"].is_exact_zero()) arc["x"] = S("t");
    if (arc["y"].is_exact_zero()) arc["y"] = S("t^2");
    auto a = random_ideal(), b = random_ideal();
    Rational c = rng.rational_in(0, 4, 5);
    auto oa = ord(a, arc), ob = ord(b, arc);
    CHECK(ord(qi_product<MPoly>({a, b}), arc) == oa + ob);
    CHECK(ord(qi_sum<MPoly>({a, b}), arc) == min(oa, ob));
    CHECK(ord(qi_power(a, c), arc) == scale(c, oa));
    // the same Q-ideal written with a larger common denominator
    std::vector<FactoredGen<MPoly>> squares;
    for (const auto& g : a.gens()) squares.push_back(g.pow(2));
    CHECK(ord(PolyIdeal(squares, a.exponent() / 2), arc) == oa);
  }
}

TEST_CASE("pair test is invariant under common factors") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = SeriesIdeal::principal(random_series(rng, "x", 1, 6, 2), rng.rational_in(0, 3, 4));
    auto d = SeriesIdeal::principal(random_series(rng, "x", 1, 6, 2), rng.rational_in(0, 2, 4));
    if (n.gens().empty() || d.gens().empty() || qi_ord(n).is_infinite() || qi_ord(d).is_infinite()) continue;
    auto common = SeriesIdeal::principal(random_series(rng, "x", 1, 5, 1) + S("x"), rng.rational_in(0, 2, 3));
    Verdict base = lc_dim1({n, d});
    CHECK(lc_dim1({qi_product<PSeries>({n, common}), qi_product<PSeries>({d, common})}) == base);
  }
}

TEST_CASE("least root order ideal") {
  auto b2 = build_b(2);
  CHECK(qi_ord_at(b2, {PSeries(), S("-t^3")}) == OrderVal::exact(q(3, 2)));
  auto b1 = build_b(1);
  CHECK(qi_ord_at(b1, {S("t^2")}) == OrderVal::exact(2));
  CHECK(qi_ord_at(build_b(2), {S("-t - t^2"), S("t^3")}) == OrderVal::exact(1));
  CHECK(qi_ord_at(build_b(3), {PSeries(), S("t^2"), S("t^3")}) == OrderVal::exact(1));
}

TEST_CASE("partial sum ideals") {
  std::vector<PSeries> a{S("-t - t^2"), S("t^3")};
  CHECK(qi_ord_at(build_bk(2, 2), a) == OrderVal::exact(3));
  CHECK(qi_ord_at(build_bk(2, 1), a) == qi_ord_at(build_b(2), a));
  for (int k = 1; k <= 2; ++k) {
    auto tilde = build_tilde_bk(2, k);
    CHECK(qi_ord_at(tilde, {a[0], a[1], PSeries()}) == qi_ord_at(build_bk(2, k), a));
  }
  CHECK(qi_ord_at(build_bbar_k(3, 2), {PSeries(), S("t^2"), S("t^3")}) == OrderVal::exact(2));
  CHECK(qi_ord_at(build_bbar_k(2, 2), a) == OrderVal::exact(3));

  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int d = static_cast<int>(rng.uniform(2, 3));
    auto h = random_weierstrass(rng, d);
    auto v = coeffs(h);
    CHECK(qi_ord_at(build_bbar_k(d, 1), v) == qi_ord_at(build_b(d), v));
    for (int k = 1; k <= d; ++k) {
      auto expected = partial_sums_from_slopes(h, k);
      CHECK(qi_ord_at(build_bbar_k(d, k), v) == expected);
      CHECK(qi_ord_at(build_bk(d, k), v) == expected);
    }
  }
}

TEST_CASE("largest root order ideal") {
  CHECK(qi_ord_at(build_c(2), {S("-t - t^2"), S("t^3")}) == OrderVal::exact(1));
  CHECK(qi_ord_at(build_c(1), {S("t^4")}) == OrderVal::exact(0));
  auto c2 = build_c(2);
  CHECK(c2.gens().size() == 2);
}

TEST_CASE("Q-ideal JSON") {
  auto j = qideal_to_json(PolyIdeal::generated({P("z1^3"), P("z2^2")}, q(1, 6)));
  CHECK(j["exp"] == "1/6");
  CHECK(j["gens"].size() == 2);
  auto back = poly_qideal_from_json(j);
  CHECK(qi_ord_at(back, {PSeries(), S("x^4")}) == OrderVal::exact(q(4, 3)));
  CHECK(qideal_to_json(PolyIdeal::zero())["gens"].empty());
}
