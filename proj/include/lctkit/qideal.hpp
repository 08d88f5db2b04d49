#pragma once

#include <map>
#include <string>
#include <vector>

#include "lctkit/errors.hpp"
#include "lctkit/mpoly.hpp"
#include "lctkit/orderval.hpp"
#include "lctkit/rational.hpp"
#include "lctkit/series.hpp"

namespace lctkit {

// Product of powers of base elements, kept unexpanded. No factors means 1.
template <class Base>
struct FactoredGen {
  std::vector<std::pair<Base, unsigned>> factors;

  static FactoredGen one() { return {}; }
  static FactoredGen of(Base b, unsigned power = 1) {
    FactoredGen g;
    if (power > 0) g.factors.emplace_back(std::move(b), power);
    return g;
  }
  FactoredGen pow(unsigned n) const {
    FactoredGen g;
    if (n == 0) return g;
    for (const auto& [b, e] : factors) g.factors.emplace_back(b, e * n);
    return g;
  }
  friend FactoredGen operator*(const FactoredGen& a, const FactoredGen& b) {
    FactoredGen g = a;
    g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
    return g;
  }
  // Sum of exponents; the product degree for linear bases.
  unsigned long weight() const {
    unsigned long w = 0;
    for (const auto& [b, e] : factors) w += e;
    return w;
  }
};

// The Q-ideal J^q with J generated by `gens`. A zero Q-ideal carries no generators.
// Powers of ideals are represented up to integral closure: (g_1,...,g_r)^n by (g_1^n,...,g_r^n).
template <class Base>
class QIdeal {
 public:
  static QIdeal zero() {
    QIdeal q;
    q.zero_ = true;
    return q;
  }
  static QIdeal unit() { return QIdeal({FactoredGen<Base>::one()}, Rational(1)); }
  static QIdeal principal(Base g, Rational exponent = 1) {
    return QIdeal({FactoredGen<Base>::of(std::move(g))}, std::move(exponent));
  }
  static QIdeal generated(const std::vector<Base>& gens, Rational exponent = 1) {
    std::vector<FactoredGen<Base>> fg;
    for (const auto& g : gens) fg.push_back(FactoredGen<Base>::of(g));
    return QIdeal(std::move(fg), std::move(exponent));
  }

  QIdeal(std::vector<FactoredGen<Base>> gens, Rational exponent) : gens_(std::move(gens)), exponent_(std::move(exponent)) {
    if (exponent_ < 0) throw DomainError("Q-ideal exponent must be nonnegative");
    if (gens_.empty()) zero_ = true;
  }

  bool is_zero() const { return zero_; }
  const std::vector<FactoredGen<Base>>& gens() const { return gens_; }
  const Rational& exponent() const { return exponent_; }

 private:
  QIdeal() = default;
  std::vector<FactoredGen<Base>> gens_;
  Rational exponent_ = 1;
  bool zero_ = false;
};

using PolyIdeal = QIdeal<MPoly>;
using SeriesIdeal = QIdeal<PSeries>;

// Formal fraction numer * denom^{-1}.
template <class Base>
struct QIdealFrac {
  QIdeal<Base> numer;
  QIdeal<Base> denom;
};

namespace detail {

inline Integer common_denominator(const std::vector<Rational>& qs) {
  Integer m = 1;
  for (const auto& q : qs) m = lcm(m, q.get_den());
  return m;
}

inline unsigned to_power(const Rational& q) {
  if (!is_integer(q) || q < 0 || !q.get_num().fits_uint_p()) throw BudgetError("Q-ideal power too large");
  return static_cast<unsigned>(q.get_num().get_ui());
}

}  // namespace detail

// Sum over the list with the minimal common denominator m of the exponents.
template <class Base>
QIdeal<Base> qi_sum(const std::vector<QIdeal<Base>>& parts) {
  std::vector<Rational> exps;
  for (const auto& p : parts)
    if (!p.is_zero()) exps.push_back(p.exponent());
  if (exps.empty()) return QIdeal<Base>::zero();
  Integer m = detail::common_denominator(exps);
  std::vector<FactoredGen<Base>> gens;
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    unsigned power = detail::to_power(p.exponent() * Rational(m));
    for (const auto& g : p.gens()) gens.push_back(g.pow(power));
  }
  return QIdeal<Base>(std::move(gens), Rational(1, m));
}

// Product with the minimal common denominator; generators are all cross products.
template <class Base>
QIdeal<Base> qi_product(const std::vector<QIdeal<Base>>& parts) {
  std::vector<Rational> exps;
  for (const auto& p : parts) {
    if (p.is_zero()) return QIdeal<Base>::zero();
    exps.push_back(p.exponent());
  }
  if (exps.empty()) return QIdeal<Base>::unit();
  Integer m = detail::common_denominator(exps);
  std::vector<FactoredGen<Base>> gens{FactoredGen<Base>::one()};
  for (const auto& p : parts) {
    unsigned power = detail::to_power(p.exponent() * Rational(m));
    std::vector<FactoredGen<Base>> next;
    for (const auto& a : gens)
      for (const auto& g : p.gens()) next.push_back(a * g.pow(power));
    gens = std::move(next);
  }
  return QIdeal<Base>(std::move(gens), Rational(1, m));
}

template <class Base>
QIdeal<Base> qi_power(const QIdeal<Base>& a, const Rational& q) {
  if (q < 0) throw DomainError("negative Q-ideal power");
  if (a.is_zero()) return a;
  return QIdeal<Base>(a.gens(), a.exponent() * q);
}

// Order of each generator along the arc; arc maps variable names to series of positive order.
OrderVal qi_ord_along_arc(const PolyIdeal& a, const std::map<std::string, PSeries>& arc);
// Same, with z1..zd bound to the given values (any nonnegative order, e.g. coefficients of h).
OrderVal qi_ord_at(const PolyIdeal& a, const std::vector<PSeries>& values);
// One-variable ideal: order of its generators directly.
OrderVal qi_ord(const SeriesIdeal& a);

// Order of a single factored generator.
OrderVal generator_order(const FactoredGen<PSeries>& g);
OrderVal generator_order(const FactoredGen<MPoly>& g, const std::map<std::string, PSeries>& arc);

// Log canonicity of a one-variable pair: ord(numer) - ord(denom) <= 1.
// Throws DomainError for a zero part.
Verdict lc_dim1(const QIdealFrac<PSeries>& pair);

// Specialise a polynomial ideal at series values of z1..zd, preserving the factored form.
SeriesIdeal specialise(const PolyIdeal& a, const std::vector<PSeries>& values);

// Expand a factored generator (may be large).
MPoly expand(const FactoredGen<MPoly>& g);
PSeries expand(const FactoredGen<PSeries>& g);

}  // namespace lctkit
