#include <doctest.h>

#include "lctkit/errors.hpp"
#include "lctkit/json_io.hpp"
#include "lctkit/orderval.hpp"
#include "lctkit/parse.hpp"
#include "lctkit/series.hpp"

using namespace lctkit;

namespace {
PSeries ex(const char* text) { return parse_series(text, std::nullopt); }
PSeries tr(const char* text, long trunc) { return parse_series(text, Rational(trunc)); }
Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("series addition") {
  auto s = tr("t + t^2", 10) + tr("-t", 10);
  CHECK(s == tr("t^2", 10));
  CHECK(s.trunc() == Rational(10));

  auto mixed = ex("t^(3/2)") + ex("t");
  CHECK(mixed.ram() == 2);
  CHECK(mixed.terms().size() == 2);
  CHECK(mixed.coefficient(1) == 1);
  CHECK(mixed.coefficient(q(3, 2)) == 1);

  auto a = tr("2*t - t^3", 7);
  CHECK(a + PSeries() == a);
}

TEST_CASE("truncation is the minimum of the operands") {
  auto s = tr("t", 5) + tr("t^2", 9);
  CHECK(s.trunc() == Rational(5));
  auto p = tr("t", 5) * tr("t^2 + t^3", 9);
  // (t + O(t^5)) (t^2 + O(t^9)): known below 2 + 5 = 7
  CHECK(p.trunc() == Rational(7));
  CHECK(p.coefficient(3) == 1);
  CHECK(p.coefficient(4) == 1);
}

TEST_CASE("series multiplication") {
  CHECK(ex("t") * ex("t^2") == ex("t^3"));
  CHECK(ex("1 + t") * ex("1 - t") == ex("1 - t^2"));
  auto h = ex("t^(1/2)") * ex("t^(1/2)");
  CHECK(h == ex("t"));
  CHECK(h.ram() == 1);
  CHECK(ps_pow(ex("1 + t"), 3) == ex("1 + 3*t + 3*t^2 + t^3"));
}

TEST_CASE("series order") {
  CHECK(ex("3*t^2 + t^5").ord() == OrderVal::exact(2));
  PSeries unknown("t", {}, Rational(64));
  CHECK(unknown.ord() == OrderVal::at_least(64));
  CHECK(ex("t^(3/2)").ord() == OrderVal::exact(q(3, 2)));
  CHECK(PSeries().ord().is_infinite());
}

TEST_CASE("series substitution") {
  auto x2 = parse_series("x^2", std::nullopt);
  CHECK(ps_substitute(x2, ex("t^3")) == ex("t^6"));
  CHECK(ps_substitute(parse_series("x + x^2", std::nullopt), ex("t")) == ex("t + t^2"));
  CHECK(ps_substitute(parse_series("1 + x", std::nullopt), ex("t^2")) == ex("1 + t^2"));
  CHECK_THROWS_AS(ps_substitute(x2, ex("1 + t")), DomainError);
}

TEST_CASE("order arithmetic with interval semantics") {
  auto e2 = OrderVal::exact(2);
  auto l3 = OrderVal::at_least(3);
  auto inf = OrderVal::infinite();
  CHECK(min(e2, l3) == e2);
  CHECK(min(OrderVal::exact(5), l3) == OrderVal::at_least(3));
  CHECK(e2 + l3 == OrderVal::at_least(5));
  CHECK((e2 + inf).is_infinite());
  CHECK(scale(0, inf) == OrderVal::exact(0));
  CHECK(sum_of_smallest({inf, OrderVal::exact(1), OrderVal::exact(3)}, 2) == OrderVal::exact(4));
  CHECK(compare_le(OrderVal::exact(1), 1) == Verdict::Yes);
  CHECK(compare_le(OrderVal::at_least(2), 1) == Verdict::No);
  CHECK(compare_le(OrderVal::at_least(1), 2) == Verdict::Unknown);
  CHECK(compare_le(inf, 100) == Verdict::No);
  CHECK(difference(inf, inf)->is_infinite());
  auto gap = difference(l3, e2);
  CHECK((!gap || !gap->is_exact()));
}

TEST_CASE("series JSON round trip") {
  auto j = Json::parse(R"({"var":"t","ram":2,"trunc":"64","terms":[{"e":"3/2","c":"-4/1"}]})");
  auto s = series_from_json(j);
  CHECK(s.var() == "t");
  CHECK(s.ram() == 2);
  CHECK(s.trunc() == Rational(64));
  CHECK(s.coefficient(q(3, 2)) == -4);
  CHECK(series_to_json(s) == j);
  CHECK(series_from_json(series_to_json(s)) == s);

  auto exact = ex("t^2 - 4*t^(3/2)");
  CHECK(series_to_json(exact)["trunc"] == "inf");
  CHECK(series_from_json(series_to_json(exact)) == exact);
}

TEST_CASE("series JSON validation") {
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"var":"t","ram":1,"trunc":"4","terms":[{"e":"1/2","c":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"var":"t","ram":1,"trunc":"4","terms":[{"e":"5","c":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"var":"t","ram":1,"trunc":"4","terms":[{"e":"1","c":"1/0"}]})")),
                  ParseError);
}

TEST_CASE("text parsing") {
  auto s = ex("t^2 - 4*t^(3/2)");
  CHECK(s.terms().size() == 2);
  CHECK(s.ram() == 2);
  CHECK(s.coefficient(q(3, 2)) == -4);

  auto o = parse_series("t + t^3 + O(t^5)", Rational(64));
  CHECK(o.trunc() == Rational(5));

  auto h = parse_upoly("y^3 + x^2", std::nullopt);
  CHECK(h.degree() == 3);
  CHECK(h.a(3) == parse_series("x^2", std::nullopt));
  CHECK(h.a(1).is_exact_zero());

  CHECK_THROWS_AS(parse_series("1/0", std::nullopt), ParseError);
  CHECK_THROWS_AS(parse_series("t^", std::nullopt), ParseError);
  CHECK_THROWS_AS(parse_upoly("2*y^2 + t", std::nullopt), ParseError);
  CHECK_THROWS_AS(parse_mpoly("x^(1/2)"), ParseError);
  try {
    parse_series("t + * 2", std::nullopt);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}
