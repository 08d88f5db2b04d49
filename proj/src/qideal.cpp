#include "lctkit/qideal.hpp"

#include "lctkit/errors.hpp"

namespace lctkit {

OrderVal generator_order(const FactoredGen<PSeries>& g) {
  OrderVal total = OrderVal::exact(0);
  for (const auto& [b, e] : g.factors) total = total + scale(Rational(e), b.ord());
  return total;
}

OrderVal generator_order(const FactoredGen<MPoly>& g, const std::map<std::string, PSeries>& arc) {
  OrderVal total = OrderVal::exact(0);
  for (const auto& [b, e] : g.factors) total = total + scale(Rational(e), evaluate(b, arc).ord());
  return total;
}

namespace {

void check_arc(const std::map<std::string, PSeries>& arc) {
  for (const auto& [name, s] : arc) {
    auto lb = s.ord_lower_bound();
    if (lb && *lb <= 0) throw DomainError("arc component '" + name + "' must have positive order");
  }
}

OrderVal ord_unchecked(const PolyIdeal& a, const std::map<std::string, PSeries>& arc) {
  if (a.is_zero()) return OrderVal::infinite();
  OrderVal best = OrderVal::infinite();
  for (const auto& g : a.gens()) best = min(best, generator_order(g, arc));
  return scale(a.exponent(), best);
}

}  // namespace

OrderVal qi_ord_along_arc(const PolyIdeal& a, const std::map<std::string, PSeries>& arc) {
  check_arc(arc);
  return ord_unchecked(a, arc);
}

OrderVal qi_ord_at(const PolyIdeal& a, const std::vector<PSeries>& values) {
  std::map<std::string, PSeries> arc;
  auto names = z_vars(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) arc.emplace(names[i], values[i]);
  return ord_unchecked(a, arc);
}

OrderVal qi_ord(const SeriesIdeal& a) {
  if (a.is_zero()) return OrderVal::infinite();
  OrderVal best = OrderVal::infinite();
  for (const auto& g : a.gens()) best = min(best, generator_order(g));
  return scale(a.exponent(), best);
}

Verdict lc_dim1(const QIdealFrac<PSeries>& pair) {
  OrderVal num = qi_ord(pair.numer);
  OrderVal den = qi_ord(pair.denom);
  if (pair.numer.is_zero() || pair.denom.is_zero() || num.is_infinite() || den.is_infinite())
    throw DomainError("log canonicity test needs nonzero numerator and denominator");
  auto diff = difference(num, den);
  if (!diff) {
    // numer known exactly or from below, denom only from below: the difference is bounded above only.
    if (num.is_exact() && den.is_at_least() && num.value() - den.value() <= 1) return Verdict::Yes;
    return Verdict::Unknown;
  }
  return compare_le(*diff, 1);
}

SeriesIdeal specialise(const PolyIdeal& a, const std::vector<PSeries>& values) {
  if (a.is_zero()) return SeriesIdeal::zero();
  std::map<std::string, PSeries> arc;
  auto names = z_vars(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) arc.emplace(names[i], values[i]);
  std::vector<FactoredGen<PSeries>> gens;
  for (const auto& g : a.gens()) {
    FactoredGen<PSeries> s;
    for (const auto& [b, e] : g.factors) s.factors.emplace_back(evaluate(b, arc), e);
    gens.push_back(std::move(s));
  }
  return SeriesIdeal(std::move(gens), a.exponent());
}

MPoly expand(const FactoredGen<MPoly>& g) {
  MPoly r = MPoly::constant(1);
  for (const auto& [b, e] : g.factors) r = r * b.pow(e);
  return r;
}

PSeries expand(const FactoredGen<PSeries>& g) {
  PSeries r = PSeries::constant(1);
  for (const auto& [b, e] : g.factors) r = ps_mul(r, ps_pow(b, e));
  return r;
}

}  // namespace lctkit
