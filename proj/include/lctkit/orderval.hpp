#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lctkit/rational.hpp"

namespace lctkit {

// Order of vanishing: an exact rational, a lower bound coming from truncation, or infinity.
class OrderVal {
 public:
  enum class Kind { Exact, AtLeast, Infinite };

  static OrderVal exact(Rational q) { return OrderVal(Kind::Exact, std::move(q)); }
  static OrderVal at_least(Rational q) { return OrderVal(Kind::AtLeast, std::move(q)); }
  static OrderVal infinite() { return OrderVal(Kind::Infinite, Rational(0)); }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_at_least() const { return kind_ == Kind::AtLeast; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_finite() const { return kind_ != Kind::Infinite; }

  // Exact value or lower bound. Undefined for Infinite.
  const Rational& value() const { return value_; }

  // "3/2", ">=64", "inf"
  std::string str() const;

  friend bool operator==(const OrderVal& a, const OrderVal& b) {
    return a.kind_ == b.kind_ && (a.kind_ == Kind::Infinite || a.value_ == b.value_);
  }
  friend bool operator!=(const OrderVal& a, const OrderVal& b) { return !(a == b); }

 private:
  OrderVal(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}
  Kind kind_;
  Rational value_;
};

OrderVal operator+(const OrderVal& a, const OrderVal& b);
OrderVal operator+(const OrderVal& a, const Rational& q);
// Multiplication by a nonnegative rational; 0 times anything is Exact(0).
OrderVal scale(const Rational& factor, const OrderVal& a);
OrderVal min(const OrderVal& a, const OrderVal& b);
OrderVal max(const OrderVal& a, const OrderVal& b);

// a - b with the convention inf - inf = inf. nullopt when the difference is not determined
// or would be negative infinity.
std::optional<OrderVal> difference(const OrderVal& a, const OrderVal& b);

// Total preorder used for sorting: by lower bound, Exact before AtLeast at equal bound,
// Infinite last.
bool sort_less(const OrderVal& a, const OrderVal& b);

// Sum of the k smallest entries with interval semantics.
OrderVal sum_of_smallest(std::vector<OrderVal> values, std::size_t k);

// Maximum with interval semantics.
OrderVal max_of(const std::vector<OrderVal>& values);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

// Decides value <= bound. AtLeast values can only produce No or Unknown.
Verdict compare_le(const OrderVal& value, const Rational& bound);

// Certainly a >= b; false when undetermined.
bool certainly_ge(const OrderVal& a, const OrderVal& b);
// Certainly a == b as orders (both Exact and equal, or both Infinite).
bool certainly_equal(const OrderVal& a, const OrderVal& b);

}  // namespace lctkit
