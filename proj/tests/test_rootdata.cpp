#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lctkit/errors.hpp"
#include "lctkit/newton_polygon.hpp"
#include "lctkit/parse.hpp"
#include "lctkit/puiseux.hpp"
#include "lctkit/random_gen.hpp"
#include "lctkit/rootdata.hpp"

using namespace lctkit;

namespace {
UPoly<PSeries> H(const char* text) { return parse_upoly(text, std::nullopt); }
PSeries S(const char* text) { return parse_series(text, std::nullopt); }
OrderVal E(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return OrderVal::exact(r);
}

std::vector<std::pair<OrderVal, int>> slopes(const char* text) { return newton_polygon(H(text)).slopes(); }

std::vector<OrderVal> sorted_copy(std::vector<OrderVal> v) {
  std::sort(v.begin(), v.end(), sort_less);
  return v;
}
}  // namespace

TEST_CASE("newton polygon slopes") {
  using V = std::vector<std::pair<OrderVal, int>>;
  CHECK(slopes("y^2 - t^3") == V{{E(3, 2), 2}});
  CHECK(slopes("(y - t)*(y - t^2)") == V{{E(1), 1}, {E(2), 1}});
  CHECK(slopes("y^3 + t^2*y + t^3") == V{{E(1), 3}});
  auto np = newton_polygon(H("y*(y - t)"));
  CHECK(np.zero_roots == 1);
  CHECK(np.root_orders().back().is_infinite());
}

TEST_CASE("truncated data and ambiguous polygons") {
  // a_2 entirely unknown below 2: the second root is only bounded
  UPoly<PSeries> h({S("t"), PSeries("t", {}, Rational(2))});
  auto np = newton_polygon(h);
  CHECK(np.ambiguous());
  CHECK_THROWS_AS(require_unambiguous(np), TruncationError);
  try {
    require_unambiguous(np);
  } catch (const TruncationError& e) {
    CHECK_FALSE(e.hint().empty());
  }
  // enough data: the hull does not depend on the unknown part
  UPoly<PSeries> ok({PSeries("t", {{Rational(1), Rational(1)}}, Rational(10)),
                     PSeries("t", {{Rational(3), Rational(1)}}, Rational(10))});
  CHECK_FALSE(newton_polygon(ok).ambiguous());
}

TEST_CASE("root orders") {
  CHECK(root_orders(H("y^2 - t^3")) == std::vector<OrderVal>{E(3, 2), E(3, 2)});
  CHECK(root_orders(H("(y - t)*(y - t^2)")).front() == E(1));
  CHECK(root_orders(H("y^3 + t^2*y + t^3")) == std::vector<OrderVal>{E(1), E(1), E(1)});
}

TEST_CASE("partial sums") {
  CHECK(partial_sums(H("y^2 - t^3"), 2) == E(3));
  CHECK(partial_sums(H("(y - t)*(y - t^2)"), 1) == E(1));
  CHECK(partial_sums(H("y^3 + t^2*y + t^3"), 2) == E(2));
  auto h = H("(y - t)*(y - t^2)*(y - t^5)");
  for (int k = 1; k <= 3; ++k) CHECK(partial_sums_from_formula(h, k) == partial_sums_from_slopes(h, k));
  CHECK(partial_sums(h, 3) == E(8));
}

TEST_CASE("largest root order") {
  CHECK(max_root_order(H("(y - t)*(y - t^2)")) == E(2));
  CHECK(max_root_order(H("y^2 - t^3")) == E(3, 2));
  CHECK(max_root_order(H("y*(y - t)")).is_infinite());
  CHECK(max_root_order_from_formula(H("y^3 + t^2*y + t^3")) == E(1));
}

TEST_CASE("puiseux roots") {
  auto cusp = puiseux_expand(H("y^2 - t^3"), Rational(3));
  REQUIRE(cusp.roots.size() == 2);
  for (const auto& r : cusp.roots) {
    REQUIRE_FALSE(r.terms.empty());
    CHECK(r.terms.front().exponent == Rational(3, 2));
    CHECK(std::abs(abs(r.terms.front().coeff).to_double() - 1.0) < 1e-12);
  }
  auto split = puiseux_expand(H("(y - t)*(y - t^2)"), Rational(4));
  std::vector<Rational> leading;
  for (const auto& r : split.roots) leading.push_back(r.terms.front().exponent);
  std::sort(leading.begin(), leading.end());
  CHECK(leading == std::vector<Rational>{1, 2});

  // leading coefficients of y^3 + t^2 y + t^3 solve u^3 + u + 1 = 0
  auto three = puiseux_expand(H("y^3 + t^2*y + t^3"), Rational(2));
  REQUIRE(three.roots.size() == 3);
  for (const auto& r : three.roots) {
    CHECK(r.terms.front().exponent == 1);
    auto u = r.terms.front().coeff;
    auto val = u * u * u + u + BigComplex(1, u.precision());
    CHECK(abs(val).to_double() < 1e-30);
  }
}

TEST_CASE("difference order table") {
  auto cusp = diff_orders(H("y^2 - t^3"));
  CHECK(cusp.off_diagonal() == std::vector<OrderVal>{E(3, 2), E(3, 2)});
  CHECK(cusp.entries[0][0].is_infinite());

  auto three = diff_orders(H("y^3 + t^2*y + t^3"));
  CHECK(three.off_diagonal() == std::vector<OrderVal>(6, E(1)));

  auto dbl = diff_orders(H("(y - t)*(y - t)"));
  CHECK(dbl.entries[0][1].is_infinite());
  CHECK(dbl.entries[1][0].is_infinite());

  // nested clusters: y^2 = t^3 +- t^(7/2)
  auto nested = diff_orders(H("(y^2 - t^3)^2 - t^7"));
  CHECK(nested.off_diagonal() == sorted_copy({E(3, 2), E(3, 2), E(3, 2), E(3, 2), E(3, 2), E(3, 2), E(3, 2), E(3, 2),
                                              E(2), E(2), E(2), E(2)}));
  for (const auto& row : nested.sorted) {
    CHECK(row.size() == 4);
    CHECK(row.back().is_infinite());
  }
}

TEST_CASE("difference table agrees with the difference polynomial") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto h = random_weierstrass(rng, static_cast<int>(rng.uniform(2, 4)));
    auto table = diff_orders(h);
    CHECK(table.off_diagonal() == sorted_copy(difference_orders_exact(h)));
  }
}

TEST_CASE("integrality") {
  CHECK_FALSE(integrality_test(H("y^2 - t^3")).integral);
  CHECK(integrality_test(H("y^2 - t^4")).integral);
  CHECK(integrality_test(H("(y - t)*(y - t^2)*(y - t^3)")).integral);
  auto r = integrality_test(H("y^2 - t^3"));
  CHECK(r.violation.find("3/2") != std::string::npos);
  CHECK_FALSE(integrality_test(H("(y^2 - t^4)^2 - t^9")).integral);
  CHECK(integrality_test(H("(y - t)^2*(y + t)")).integral);
}

TEST_CASE("contact order identity") {
  auto r = contact_order_identity_check(H("y^2 - t^3"), S("t"));
  CHECK(r.passed);
  CHECK(r.value_order == E(2));
  for (const auto& b : r.bound) CHECK(b == E(2));

  auto z = contact_order_identity_check(H("(y - t)*(y - t^2)"), PSeries());
  CHECK(z.passed);
  CHECK(z.value_order == E(3));

  // w agrees with a root up to t^2
  auto close = contact_order_identity_check(H("(y - t - t^2 - t^4)*(y + t)"), S("t + t^2"));
  CHECK(close.passed);
  CHECK(close.value_order == E(5));
  CHECK(close.bound[close.maximizer] == E(5));

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto h = random_weierstrass(rng, static_cast<int>(rng.uniform(2, 3)));
    auto w = random_series(rng, "t", 1, 6, 3);
    CHECK(contact_order_identity_check(h, w).passed);
  }
}

TEST_CASE("perturbation bound") {
  auto f = H("y^2 - t^4");
  auto r = perturbation_check(f, H("y^2 - t^4 + t^10"), Rational(10));
  CHECK(r.passed);
  CHECK(r.bound == 5);
  for (const auto& m : r.best_match) CHECK(certainly_ge(m, E(5)));

  auto same = perturbation_check(f, f, Rational(10));
  CHECK(same.passed);
  for (const auto& m : same.best_match) CHECK(m.is_infinite());

  auto g = perturbation_check(H("y^2 - t^2"), H("y^2 - t^2 + t^6"), Rational(6));
  CHECK(g.passed);
  CHECK(g.bound == 3);

  CHECK_THROWS_AS(perturbation_check(f, H("y^2 - t^4 + t^3"), Rational(10)), DomainError);
}

TEST_CASE("reconcile") {
  CHECK(reconcile(E(2), OrderVal::at_least(1), "x") == E(2));
  CHECK(reconcile(OrderVal::at_least(3), OrderVal::at_least(1), "x") == OrderVal::at_least(3));
  CHECK_THROWS_AS(reconcile(E(2), E(3), "x"), ConsistencyError);
  CHECK_THROWS_AS(reconcile(E(2), OrderVal::at_least(3), "x"), ConsistencyError);
}
