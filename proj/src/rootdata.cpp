#include "lctkit/rootdata.hpp"

#include <algorithm>

#include "lctkit/config.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/ideals.hpp"
#include "lctkit/qideal.hpp"

namespace lctkit {

namespace {

bool determined(const OrderVal& v) { return !v.is_at_least(); }

Rational lower_bound(const OrderVal& v, const Rational& if_infinite) {
  return v.is_infinite() ? if_infinite : v.value();
}

// Largest finite lower bound in the list, or nullopt if every entry is infinite.
std::optional<Rational> max_finite(const std::vector<OrderVal>& values) {
  std::optional<Rational> best;
  for (const auto& v : values)
    if (v.is_finite() && (!best || v.value() > *best)) best = v.value();
  return best;
}

}  // namespace

OrderVal reconcile(const OrderVal& a, const OrderVal& b, const char* what) {
  if (determined(a) && determined(b)) {
    if (a != b) throw ConsistencyError(std::string(what) + ": " + a.str() + " vs " + b.str());
    return a;
  }
  if (determined(a) || determined(b)) {
    const OrderVal& known = determined(a) ? a : b;
    const OrderVal& bound = determined(a) ? b : a;
    if (known.is_finite() && known.value() < bound.value())
      throw ConsistencyError(std::string(what) + ": " + known.str() + " below bound " + bound.str());
    return known;
  }
  return a.value() >= b.value() ? a : b;
}

std::vector<OrderVal> root_orders(const UPoly<PSeries>& h) {
  std::vector<OrderVal> orders = newton_polygon(h).root_orders();
  OrderVal least = qi_ord_at(build_b(h.degree()), h.coeffs());
  reconcile(orders.front(), least, "least root order");
  return orders;
}

OrderVal partial_sums_from_slopes(const UPoly<PSeries>& h, int k) {
  if (k < 1 || k > h.degree()) throw DomainError("k out of range");
  return sum_of_smallest(newton_polygon(h).root_orders(), static_cast<std::size_t>(k));
}

OrderVal partial_sums_from_formula(const UPoly<PSeries>& h, int k) {
  const int d = h.degree();
  if (k < 1 || k > d) throw DomainError("k out of range");
  OrderVal prev = OrderVal::exact(0);
  OrderVal cur = prev;
  for (int level = 1; level <= k; ++level) {
    std::optional<OrderVal> best;
    for (int i = level; i <= d; ++i) {
      const Rational span(i - level + 1);
      OrderVal term = scale(Rational(1) / span, ps_ord(h.a(i))) + scale(Rational(i - level) / span, prev);
      best = best ? min(*best, term) : term;
    }
    cur = *best;
    prev = cur;
  }
  return cur;
}

OrderVal partial_sums(const UPoly<PSeries>& h, int k) {
  return reconcile(partial_sums_from_slopes(h, k), partial_sums_from_formula(h, k), "partial sum of root orders");
}

OrderVal max_root_order_from_formula(const UPoly<PSeries>& h) {
  const int d = h.degree();
  const PSeries& last = h.a(d);
  if (last.is_exact_zero()) return OrderVal::infinite();
  OrderVal c = qi_ord_at(build_c(d), h.coeffs());
  auto diff = difference(ps_ord(last), c);
  return diff ? *diff : OrderVal::at_least(0);
}

OrderVal max_root_order(const UPoly<PSeries>& h) {
  return reconcile(max_of(newton_polygon(h).root_orders()), max_root_order_from_formula(h), "largest root order");
}

std::vector<OrderVal> DiffOrderTable::off_diagonal() const {
  std::vector<OrderVal> out;
  for (int i = 0; i < degree; ++i)
    for (int j = 0; j < degree; ++j)
      if (i != j) out.push_back(entries[i][j]);
  std::sort(out.begin(), out.end(), sort_less);
  return out;
}

std::vector<OrderVal> difference_orders_exact(const UPoly<PSeries>& h) {
  if (h.degree() < 2) return {};
  return newton_polygon(difference_poly(h)).root_orders();
}

namespace {

// Matches the numeric off-diagonal multiset against the exact one. Returns false on conflict;
// otherwise sets `all_infinite` when every undetermined numeric entry is certified infinite.
bool certify(const std::vector<OrderVal>& numeric, const std::vector<OrderVal>& exact, bool& all_infinite) {
  std::vector<Rational> num_exact, cert_exact, cert_bounds;
  std::size_t num_infinite = 0, cert_infinite = 0;
  for (const auto& v : numeric) {
    if (v.is_exact()) num_exact.push_back(v.value());
    else if (v.is_infinite()) ++num_infinite;
  }
  for (const auto& v : exact) {
    if (v.is_exact()) cert_exact.push_back(v.value());
    else if (v.is_infinite()) ++cert_infinite;
    else cert_bounds.push_back(v.value());
  }
  std::sort(num_exact.begin(), num_exact.end());
  std::vector<Rational> extra;
  for (const auto& v : cert_exact) {
    auto it = std::lower_bound(num_exact.begin(), num_exact.end(), v);
    if (it == num_exact.end() || *it != v) return false;
    num_exact.erase(it);
  }
  // Leftover numeric exact values must sit above distinct truncation bounds of the certificate.
  if (num_exact.size() > cert_bounds.size()) return false;
  std::sort(cert_bounds.begin(), cert_bounds.end());
  for (std::size_t i = 0; i < num_exact.size(); ++i)
    if (cert_bounds[i] > num_exact[i]) return false;
  if (num_infinite > cert_infinite) return false;
  all_infinite = cert_bounds.empty();
  return true;
}

}  // namespace

DiffOrderTable diff_orders(const UPoly<PSeries>& h, std::optional<Rational> depth) {
  const int d = h.degree();
  DiffOrderTable table;
  table.degree = d;
  if (d == 1) {
    table.entries = {{OrderVal::infinite()}};
    table.sorted = {{OrderVal::infinite()}};
    table.depth = depth.value_or(Rational(1));
    table.precision = default_precision();
    return table;
  }
  table.certificate = difference_orders_exact(h);
  Rational need = max_finite(table.certificate).value_or(Rational(0)) + 1;
  table.depth = depth && *depth > need ? *depth : need;

  long precision = default_precision();
  for (int attempt = 0;; ++attempt) {
    try {
      PuiseuxRootSet set = puiseux_roots(h, table.depth, ExpansionMode::Separate, precision);
      std::vector<std::vector<OrderVal>> entries(d, std::vector<OrderVal>(d, OrderVal::infinite()));
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) entries[i][j] = entries[j][i] = set.difference_order(i, j);
      std::vector<OrderVal> numeric;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) numeric.push_back(entries[i][j]);
      bool all_infinite = false;
      if (!certify(numeric, table.certificate, all_infinite))
        throw PrecisionError("difference orders disagree with the difference polynomial");
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j && !entries[i][j].is_exact() && all_infinite) entries[i][j] = OrderVal::infinite();
      table.entries = entries;
      table.sorted.clear();
      for (int i = 0; i < d; ++i) {
        auto row = entries[i];
        std::sort(row.begin(), row.end(), sort_less);
        table.sorted.push_back(row);
      }
      table.precision = precision;
      return table;
    } catch (const PrecisionError& e) {
      if (attempt >= kPrecisionRetries)
        throw ConsistencyError(std::string("difference-order certification failed: ") + e.what());
      precision *= 2;
    }
  }
}

IntegralityReport integrality_test(const UPoly<PSeries>& h) {
  IntegralityReport rep;
  NewtonPolygon np = newton_polygon(h);
  require_unambiguous(np);
  rep.root_orders = np.root_orders();
  if (h.degree() >= 2) {
    NewtonPolygon hp = newton_polygon(difference_poly(h));
    require_unambiguous(hp);
    rep.difference_orders = hp.root_orders();
  }
  auto check = [&](const std::vector<OrderVal>& list, const char* label) {
    for (const auto& v : list) {
      if (v.is_exact() && !is_integer(v.value())) {
        rep.integral = false;
        rep.violation = std::string(label) + " " + v.str();
        return;
      }
    }
  };
  check(rep.difference_orders, "difference order");
  if (rep.integral) check(rep.root_orders, "root order");
  return rep;
}

ContactReport contact_order_identity_check(const UPoly<PSeries>& h, const PSeries& w) {
  ContactReport rep;
  const int d = h.degree();
  rep.value_order = ps_ord(evaluate_at(h, w));
  if (rep.value_order.is_infinite()) {
    // w is a root: both sides are infinite at its center, every other bound is finite or infinite
    rep.passed = true;
    rep.detail = "w is a root of h";
    return rep;
  }
  if (!rep.value_order.is_exact()) {
    rep.detail = "ord h(w) is " + rep.value_order.str();
    return rep;
  }
  const Rational& value = rep.value_order.value();
  Rational depth = std::max(value, max_finite(difference_orders_exact(h)).value_or(Rational(0))) + 1;
  PuiseuxRootSet set = puiseux_roots_adaptive(h, depth, ExpansionMode::Full);

  OrderVal total = OrderVal::exact(0);
  for (int i = 0; i < d; ++i) {
    rep.contact.push_back(contact_order(set.roots[i], w, set.precision));
    total = total + rep.contact.back();
  }
  if (!certainly_equal(total, rep.value_order)) {
    rep.detail = "sum of contact orders " + total.str() + " differs from ord h(w)";
    return rep;
  }
  for (int i = 0; i < d; ++i) {
    OrderVal sum = OrderVal::exact(0);
    for (int j = 0; j < d; ++j) sum = sum + min(rep.contact[i], set.difference_order(i, j));
    rep.bound.push_back(sum);
    if (sort_less(rep.contact[rep.maximizer], rep.contact[i])) rep.maximizer = static_cast<std::size_t>(i);
  }
  for (int i = 0; i < d; ++i) {
    const OrderVal& b = rep.bound[i];
    if (!b.is_exact() || b.value() > value) {
      rep.detail = "bound " + b.str() + " at center " + std::to_string(i) + " exceeds ord h(w) = " + value.get_str();
      return rep;
    }
  }
  if (!certainly_equal(rep.bound[rep.maximizer], rep.value_order)) {
    rep.detail = "no equality at the closest root";
    return rep;
  }
  rep.passed = true;
  return rep;
}

PerturbationReport perturbation_check(const UPoly<PSeries>& f, const UPoly<PSeries>& g, const Rational& N) {
  const int d = f.degree();
  if (g.degree() != d) throw DomainError("perturbation must keep the degree");
  for (int i = 1; i <= d; ++i) {
    OrderVal gap = ps_ord(f.a(i) - g.a(i));
    if (gap.is_finite() && gap.value() < N)
      throw DomainError("coefficient " + std::to_string(i) + " differs below order " + N.get_str());
  }
  PerturbationReport rep;
  rep.bound = N / Rational(d);
  const Rational depth = rep.bound + 1;
  PuiseuxRootSet roots_f = puiseux_roots_adaptive(f, depth, ExpansionMode::Full);
  PuiseuxRootSet roots_g = puiseux_roots_adaptive(g, depth, ExpansionMode::Full);
  const long precision = std::max(roots_f.precision, roots_g.precision);
  rep.passed = true;
  for (std::size_t b = 0; b < roots_g.roots.size(); ++b) {
    std::optional<OrderVal> best;
    for (const auto& alpha : roots_f.roots) {
      OrderVal c = contact_order(roots_g.roots[b], alpha, precision);
      if (!best || sort_less(*best, c)) best = c;
    }
    rep.best_match.push_back(*best);
    if (lower_bound(*best, rep.bound) < rep.bound) {
      rep.passed = false;
      rep.detail = "root " + std::to_string(b) + " only matches to order " + best->str();
    }
  }
  return rep;
}

}  // namespace lctkit
