#include "lctkit/criterion.hpp"

#include <map>
#include <set>

#include "lctkit/config.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/ideals.hpp"
#include "lctkit/upoly.hpp"

namespace lctkit {

CriterionContext choose_p(int d, const Rational& c) {
  if (d < 2) throw DomainError("choose_p needs d >= 2");
  if (c <= Rational(1, d) || c > 1) throw DomainError("c must satisfy 1/d < c <= 1");
  CriterionContext ctx;
  ctx.d = d;
  ctx.c = c;
  const Integer q = floor_rational(Rational(1) / c).get_num();  // d - p
  ctx.p = d - static_cast<int>(q.get_si());
  ctx.c1 = 1 - Rational(q) * c;
  ctx.c2 = Rational(q + 1) * c - 1;
  return ctx;
}

std::pair<PSeries, PSeries> depress_cubic(const PSeries& a1, const PSeries& a2, const PSeries& a3) {
  PSeries u = a2 - (a1 * a1).scaled(Rational(1, 3));
  PSeries v = a3 - (a1 * a2).scaled(Rational(1, 3)) + (a1 * a1 * a1).scaled(Rational(2, 27));
  return {u, v};
}

std::pair<MPoly, MPoly> depress_cubic(const MPoly& a1, const MPoly& a2, const MPoly& a3) {
  MPoly u = a2 - Rational(1, 3) * (a1 * a1);
  MPoly v = a3 - Rational(1, 3) * (a1 * a2) + Rational(2, 27) * (a1 * a1 * a1);
  return {u, v};
}

namespace {

template <class Base>
QIdeal<Base> cube_square(const Base& u, const Base& v, const Rational& exponent) {
  return QIdeal<Base>({FactoredGen<Base>::of(u, 3), FactoredGen<Base>::of(v, 2)}, exponent);
}

void require_positive_orders(const std::vector<PSeries>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto lb = a[i].ord_lower_bound();
    if (lb && *lb <= 0)
      throw DomainError("coefficient a_" + std::to_string(i + 1) + " must have positive order");
  }
}

UPoly<PSeries> monic_from(const std::vector<PSeries>& a, int d) {
  if (static_cast<int>(a.size()) != d) throw DomainError("expected " + std::to_string(d) + " coefficients");
  return UPoly<PSeries>(a);
}

}  // namespace

CriterionIdeals build_p_plus_minus(const CriterionContext& ctx) {
  CriterionIdeals out;
  out.context = ctx;
  const auto vars = z_vars(ctx.d);
  auto z = [&](int i) { return MPoly::variable(vars, static_cast<std::size_t>(i - 1)); };
  if (ctx.d == 2) {
    MPoly disc = z(1) * z(1) - Rational(4) * z(2);
    out.p_plus = PolyIdeal::principal(disc, ctx.c2 / 2);
    return out;
  }
  if (ctx.d != 3) throw BudgetError("closed-form criterion ideals exist only for d <= 3; use the numeric evaluator");
  auto [u, v] = depress_cubic(z(1), z(2), z(3));
  MPoly delta = Rational(4) * u.pow(3) + Rational(27) * v.pow(2);
  if (ctx.p == 1) {
    out.p_plus = cube_square(u, v, ctx.c2 / 6);
    return out;
  }
  PolyIdeal disc_part = PolyIdeal::principal(delta, ctx.c2 / 2);
  if (ctx.c2 > ctx.c1) {
    out.p_plus = disc_part;
    out.p_minus = cube_square(u, v, (ctx.c2 - ctx.c1) / 6);
  } else if (ctx.c2 == ctx.c1) {
    out.p_plus = disc_part;
  } else {
    out.p_plus = qi_product(std::vector<PolyIdeal>{disc_part, cube_square(u, v, (ctx.c1 - ctx.c2) / 6)});
  }
  return out;
}

std::optional<OrderVal> eval_p_plus_minus(const CriterionIdeals& ideals, const std::vector<PSeries>& a) {
  return difference(qi_ord_at(ideals.p_plus, a), qi_ord_at(ideals.p_minus, a));
}

OrderVal row_partial_sum(const DiffOrderTable& table, int i, int k) {
  if (k == 0) return OrderVal::exact(0);
  return sum_of_smallest(table.sorted.at(static_cast<std::size_t>(i)), static_cast<std::size_t>(k));
}

std::vector<OrderVal> center_values(const CriterionContext& ctx, const DiffOrderTable& table) {
  std::vector<OrderVal> v;
  for (int i = 0; i < table.degree; ++i)
    v.push_back(scale(ctx.c1, row_partial_sum(table, i, ctx.p - 1)) + scale(ctx.c2, row_partial_sum(table, i, ctx.p)));
  return v;
}

OrderVal eval_criterion_value(const CriterionContext& ctx, const std::vector<PSeries>& a, std::optional<Rational> depth) {
  require_positive_orders(a);
  DiffOrderTable table = diff_orders(monic_from(a, ctx.d), depth);
  return max_of(center_values(ctx, table));
}

LctDecision lct_ge(int d, const Rational& c, const std::vector<PSeries>& a) {
  if (d < 1) throw DomainError("degree must be positive");
  if (static_cast<int>(a.size()) != d) throw DomainError("expected " + std::to_string(d) + " coefficients");
  require_positive_orders(a);
  LctDecision out;
  if (c <= Rational(1, d)) {
    out.verdict = Verdict::Yes;
    out.reason = "c <= 1/d";
    return out;
  }
  if (c > 1) {
    out.verdict = Verdict::No;
    out.reason = "c > 1";
    return out;
  }
  out.context = choose_p(d, c);
  out.V = eval_criterion_value(*out.context, a);
  out.verdict = compare_le(*out.V, 1);
  if (out.verdict == Verdict::Unknown)
    out.reason = "V is only bounded below by " + out.V->str() + "; increase the coefficient truncation";
  return out;
}

Verdict degree3_test(const PSeries& a, const PSeries& b, const Rational& c) {
  if (c <= Rational(1, 3) || c > 1) throw DomainError("degree3_test needs 1/3 < c <= 1");
  const PSeries delta = (a * a * a).scaled(4) + (b * b).scaled(27);
  QIdealFrac<PSeries> pair{SeriesIdeal::unit(), SeriesIdeal::unit()};
  if (c <= Rational(1, 2)) {
    pair.numer = cube_square(a, b, (3 * c - 1) / 6);
  } else {
    std::vector<SeriesIdeal> numer{SeriesIdeal::principal(delta, c - Rational(1, 2))};
    const Rational rest = (2 - 3 * c) / 6;
    if (rest > 0) numer.push_back(cube_square(a, b, rest));
    if (rest < 0) pair.denom = cube_square(a, b, -rest);
    pair.numer = qi_product(numer);
  }
  // A numerator of infinite order is never log canonical, whatever the denominator.
  if (qi_ord(pair.numer).is_infinite()) return Verdict::No;
  if (qi_ord(pair.denom).is_infinite()) return Verdict::Unknown;
  return lc_dim1(pair);
}

ContainmentReport containment_check(const CriterionContext& ctx, const std::vector<PSeries>& a) {
  ContainmentReport rep;
  const int d = ctx.d;
  DiffOrderTable table = diff_orders(monic_from(a, d));
  std::vector<OrderVal> v = center_values(ctx, table);
  rep.lambda_next = sum_of_smallest(v, static_cast<std::size_t>(d - 1));
  rep.lambda_top = sum_of_smallest(v, static_cast<std::size_t>(d));
  OrderVal rhs = scale(Rational(d, d - 1), rep.lambda_next);
  if (rhs.is_infinite()) {
    rep.passed = rep.lambda_top.is_infinite();
  } else if (rep.lambda_top.is_infinite()) {
    rep.passed = true;
  } else if (rep.lambda_top.is_exact() && rhs.is_exact()) {
    rep.passed = rep.lambda_top.value() >= rhs.value();
  } else {
    rep.detail = "orders only bounded below";
    return rep;
  }
  if (!rep.passed) rep.detail = "lambda_d = " + rep.lambda_top.str() + " < " + rhs.str();
  return rep;
}

Verdict trace_free_test(int d, const Rational& c, const std::vector<PSeries>& rest) {
  if (d < 2) throw DomainError("trace_free_test needs d >= 2");
  if (c <= Rational(1, d) || c > Rational(1, d - 1)) throw DomainError("c must satisfy 1/d < c <= 1/(d-1)");
  if (static_cast<int>(rest.size()) != d - 1) throw DomainError("expected a_2..a_d");
  std::vector<PSeries> values{PSeries()};
  values.insert(values.end(), rest.begin(), rest.end());
  require_positive_orders(rest);
  OrderVal ord = qi_ord_at(build_trace_free_ideal(d), values);
  if (ord.is_infinite()) return Verdict::No;
  return compare_le(scale(c * d - 1, ord), 1);
}

std::vector<MPoly> IntegralityPack::polys() const {
  std::vector<MPoly> out;
  for (const auto& group : groups)
    for (const auto& g : group) out.push_back(expand(g));
  return out;
}

IntegralityPack build_integrality_pack(int d) {
  if (d < 2) throw DomainError("integrality pack needs d >= 2");
  if (d > symbolic_budget().max_degree_pack)
    throw BudgetError("integrality pack exceeds the symbolic budget; use integrality_test");
  IntegralityPack pack;
  pack.d = d;
  pack.bases = difference_poly(generic_upoly(d)).coeffs();
  const int D = static_cast<int>(pack.bases.size());
  std::vector<std::set<std::vector<Rational>>> exponent_sets(D);
  for (int k = 1; k <= D; ++k) {
    for (const auto& tuple : bbar_tuples(D, k)) {
      auto j = bbar_exponents(tuple, k);
      std::vector<Rational> exps(D, Rational(0));
      for (int m = 0; m < k; ++m) exps[tuple[m] - 1] += j[m];
      bool vanishes = false;
      for (int i = 0; i < D; ++i)
        if (exps[i] > 0 && pack.bases[i].is_zero()) vanishes = true;
      if (!vanishes) exponent_sets[k - 1].insert(exps);
    }
  }
  for (const auto& set : exponent_sets)
    for (const auto& exps : set)
      for (const auto& e : exps) pack.m = lcm(pack.m, e.get_den());
  for (const auto& set : exponent_sets) {
    std::vector<FactoredGen<MPoly>> group;
    for (const auto& exps : set) {
      FactoredGen<MPoly> g;
      for (int i = 0; i < D; ++i) {
        if (exps[i] == 0) continue;
        Rational power = exps[i] * Rational(pack.m);
        g.factors.emplace_back(pack.bases[i], static_cast<unsigned>(power.get_num().get_ui()));
      }
      group.push_back(g);
    }
    pack.groups.push_back(group);
  }
  return pack;
}

namespace {

// Orders of each generator in each group at a.
std::vector<std::vector<OrderVal>> pack_orders(const IntegralityPack& pack, const std::vector<PSeries>& a) {
  if (static_cast<int>(a.size()) != pack.d) throw DomainError("wrong number of coefficients");
  std::map<std::string, PSeries> values;
  const auto names = z_vars(pack.d);
  for (int i = 0; i < pack.d; ++i) values.emplace(names[i], a[i]);
  std::vector<OrderVal> base_ord;
  for (const auto& b : pack.bases) base_ord.push_back(ps_ord(evaluate(b, values)));
  std::vector<std::vector<OrderVal>> out;
  for (const auto& group : pack.groups) {
    std::vector<OrderVal> row;
    for (const auto& g : group) {
      OrderVal total = OrderVal::exact(0);
      for (const auto& [base, e] : g.factors) {
        std::size_t idx = 0;
        while (!(pack.bases[idx] == base)) ++idx;
        total = total + scale(Rational(e), base_ord[idx]);
      }
      row.push_back(total);
    }
    out.push_back(row);
  }
  return out;
}

// Yes if m divides the order, No if it certainly does not, Unknown for a bare lower bound.
Verdict divisible(const OrderVal& v, const Integer& m) {
  if (v.is_infinite()) return Verdict::Yes;
  if (v.is_at_least()) return Verdict::Unknown;
  if (!is_integer(v.value())) return Verdict::No;
  return v.value().get_num() % m == 0 ? Verdict::Yes : Verdict::No;
}

Verdict combine(Verdict acc, Verdict next) {
  if (acc == Verdict::No || next == Verdict::No) return Verdict::No;
  if (acc == Verdict::Unknown || next == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

}  // namespace

Verdict integrality_pack_test(const IntegralityPack& pack, const std::vector<PSeries>& a) {
  Verdict out = Verdict::Yes;
  for (const auto& row : pack_orders(pack, a)) {
    OrderVal least = OrderVal::infinite();
    for (const auto& v : row) least = min(least, v);
    out = combine(out, divisible(least, pack.m));
  }
  return out;
}

Verdict integrality_pack_test_all(const IntegralityPack& pack, const std::vector<PSeries>& a) {
  Verdict out = Verdict::Yes;
  for (const auto& row : pack_orders(pack, a))
    for (const auto& v : row) out = combine(out, divisible(v, pack.m));
  return out;
}

}  // namespace lctkit
