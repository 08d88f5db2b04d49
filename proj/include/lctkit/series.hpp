#pragma once

#include <map>
#include <optional>
#include <string>

#include "lctkit/orderval.hpp"
#include "lctkit/rational.hpp"

namespace lctkit {

// Truncated Puiseux series in one variable with rational coefficients.
// Terms at exponents >= trunc are unknown. An absent trunc marks exact data (trunc = infinity).
// The empty variable name is reserved for constants, which combine with any variable.
class PSeries {
 public:
  using Terms = std::map<Rational, Rational>;

  PSeries() = default;  // exact zero constant
  PSeries(std::string var, Terms terms, std::optional<Rational> trunc);

  static PSeries exact(std::string var, Terms terms) {
    return PSeries(std::move(var), std::move(terms), std::nullopt);
  }
  static PSeries constant(const Rational& c) { return exact("", c == 0 ? Terms{} : Terms{{0, c}}); }
  static PSeries monomial(std::string var, const Rational& coeff, const Rational& exponent,
                          std::optional<Rational> trunc = std::nullopt);

  const std::string& var() const { return var_; }
  long ram() const { return ram_; }
  const Terms& terms() const { return terms_; }
  const std::optional<Rational>& trunc() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  // No known nonzero terms (may still be nonzero above trunc).
  bool has_no_terms() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && is_exact(); }

  Rational coefficient(const Rational& exponent) const;
  OrderVal ord() const;
  // Least stored exponent, trunc if there are none, nullopt for the exact zero.
  std::optional<Rational> ord_lower_bound() const;

  PSeries truncated(const std::optional<Rational>& new_trunc) const;
  PSeries with_var(std::string var) const;

  PSeries operator-() const;
  PSeries scaled(const Rational& factor) const;

  friend bool operator==(const PSeries& a, const PSeries& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_ && a.trunc_ == b.trunc_;
  }

  std::string str() const;

 private:
  void normalize();

  std::string var_;
  Terms terms_;
  std::optional<Rational> trunc_;
  long ram_ = 1;
};

PSeries ps_add(const PSeries& a, const PSeries& b);
PSeries ps_sub(const PSeries& a, const PSeries& b);
PSeries ps_mul(const PSeries& a, const PSeries& b);
PSeries ps_pow(const PSeries& a, unsigned long n);
OrderVal ps_ord(const PSeries& a);
// f(g): f in some variable x, g in t. Fractional exponents of f need g = t^q exactly.
PSeries ps_substitute(const PSeries& f, const PSeries& g);

inline PSeries operator+(const PSeries& a, const PSeries& b) { return ps_add(a, b); }
inline PSeries operator-(const PSeries& a, const PSeries& b) { return ps_sub(a, b); }
inline PSeries operator*(const PSeries& a, const PSeries& b) { return ps_mul(a, b); }
inline PSeries operator*(const Rational& q, const PSeries& a) { return a.scaled(q); }

// Ring helpers shared with the polynomial templates.
inline PSeries ring_zero(const PSeries&) { return PSeries(); }
inline PSeries ring_constant(const PSeries&, const Rational& c) { return PSeries::constant(c); }
inline bool ring_is_zero(const PSeries& a) { return a.is_exact_zero(); }
inline bool ring_is_one(const PSeries& a) {
  return a.is_exact() && a.terms().size() == 1 && a.terms().begin()->first == 0 &&
         a.terms().begin()->second == 1;
}

// Common variable of two series, ignoring constants. Throws DomainError on mismatch.
std::string merge_var(const std::string& a, const std::string& b);

std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b);

}  // namespace lctkit
