#include "lctkit/orderval.hpp"

#include <algorithm>

#include "lctkit/errors.hpp"

namespace lctkit {

std::string OrderVal::str() const {
  switch (kind_) {
    case Kind::Exact:
      return to_string(value_);
    case Kind::AtLeast:
      return ">=" + to_string(value_);
    case Kind::Infinite:
      break;
  }
  return "inf";
}

OrderVal operator+(const OrderVal& a, const OrderVal& b) {
  if (a.is_infinite() || b.is_infinite()) return OrderVal::infinite();
  Rational s = a.value() + b.value();
  if (a.is_exact() && b.is_exact()) return OrderVal::exact(s);
  return OrderVal::at_least(s);
}

OrderVal operator+(const OrderVal& a, const Rational& q) {
  if (a.is_infinite()) return a;
  Rational s = a.value() + q;
  return a.is_exact() ? OrderVal::exact(s) : OrderVal::at_least(s);
}

OrderVal scale(const Rational& factor, const OrderVal& a) {
  if (factor < 0) throw DomainError("negative scale factor for an order");
  if (factor == 0) return OrderVal::exact(0);
  if (a.is_infinite()) return a;
  Rational s = factor * a.value();
  return a.is_exact() ? OrderVal::exact(s) : OrderVal::at_least(s);
}

OrderVal min(const OrderVal& a, const OrderVal& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.is_exact() && b.is_exact()) return a.value() <= b.value() ? a : b;
  if (a.is_exact()) return a.value() < b.value() ? a : OrderVal::at_least(b.value());
  if (b.is_exact()) return b.value() < a.value() ? b : OrderVal::at_least(a.value());
  return OrderVal::at_least(std::min(a.value(), b.value()));
}

OrderVal max(const OrderVal& a, const OrderVal& b) {
  if (a.is_infinite() || b.is_infinite()) return OrderVal::infinite();
  if (a.is_exact() && b.is_exact()) return a.value() >= b.value() ? a : b;
  // At least one lower bound: the maximum is at least the larger lower bound.
  return OrderVal::at_least(std::max(a.value(), b.value()));
}

std::optional<OrderVal> difference(const OrderVal& a, const OrderVal& b) {
  if (a.is_infinite()) return OrderVal::infinite();
  if (b.is_infinite()) return std::nullopt;
  if (b.is_at_least()) return std::nullopt;
  Rational d = a.value() - b.value();
  return a.is_exact() ? OrderVal::exact(d) : OrderVal::at_least(d);
}

bool sort_less(const OrderVal& a, const OrderVal& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  if (a.value() != b.value()) return a.value() < b.value();
  return a.is_exact() && b.is_at_least();
}

OrderVal sum_of_smallest(std::vector<OrderVal> values, std::size_t k) {
  if (k > values.size()) throw DomainError("sum_of_smallest: k exceeds the number of values");
  std::stable_sort(values.begin(), values.end(), sort_less);
  OrderVal total = OrderVal::exact(0);
  bool chosen_exact = true;
  Rational largest_chosen = 0;
  for (std::size_t i = 0; i < k; ++i) {
    total = total + values[i];
    if (values[i].is_infinite()) return OrderVal::infinite();
    if (!values[i].is_exact()) chosen_exact = false;
    largest_chosen = std::max(largest_chosen, values[i].value());
  }
  if (!chosen_exact) return total;
  // Unchosen lower bounds that could still undercut the chosen entries make the sum uncertain.
  for (std::size_t i = k; i < values.size(); ++i) {
    if (values[i].is_at_least() && values[i].value() < largest_chosen)
      return OrderVal::at_least(total.value());
  }
  return total;
}

OrderVal max_of(const std::vector<OrderVal>& values) {
  if (values.empty()) throw DomainError("max_of: empty list");
  OrderVal m = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) m = max(m, values[i]);
  return m;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

Verdict compare_le(const OrderVal& value, const Rational& bound) {
  if (value.is_infinite()) return Verdict::No;
  if (value.is_exact()) return value.value() <= bound ? Verdict::Yes : Verdict::No;
  return value.value() > bound ? Verdict::No : Verdict::Unknown;
}

bool certainly_ge(const OrderVal& a, const OrderVal& b) {
  if (a.is_infinite()) return true;
  if (b.is_infinite()) return false;
  if (b.is_at_least()) return false;
  return a.value() >= b.value();
}

bool certainly_equal(const OrderVal& a, const OrderVal& b) {
  if (a.is_infinite() && b.is_infinite()) return true;
  return a.is_exact() && b.is_exact() && a.value() == b.value();
}

}  // namespace lctkit
