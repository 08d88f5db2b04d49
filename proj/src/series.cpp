#include "lctkit/series.hpp"

#include <sstream>
#include <vector>

#include "lctkit/errors.hpp"

namespace lctkit {

std::string merge_var(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  throw DomainError("series variable mismatch: '" + a + "' vs '" + b + "'");
}

std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

PSeries::PSeries(std::string var, Terms terms, std::optional<Rational> trunc)
    : var_(std::move(var)), terms_(std::move(terms)), trunc_(std::move(trunc)) {
  normalize();
}

PSeries PSeries::monomial(std::string var, const Rational& coeff, const Rational& exponent,
                          std::optional<Rational> trunc) {
  return PSeries(std::move(var), Terms{{exponent, coeff}}, std::move(trunc));
}

void PSeries::normalize() {
  Integer ram = 1;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0) throw DomainError("negative exponent " + to_string(it->first) + " in series");
    if (it->second == 0 || (trunc_ && it->first >= *trunc_)) {
      it = terms_.erase(it);
      continue;
    }
    ram = lcm(ram, it->first.get_den());
    ++it;
  }
  if (!ram.fits_slong_p()) throw DomainError("ramification index too large");
  ram_ = ram.get_si();
}

Rational PSeries::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

OrderVal PSeries::ord() const {
  if (!terms_.empty()) return OrderVal::exact(terms_.begin()->first);
  if (trunc_) return OrderVal::at_least(*trunc_);
  return OrderVal::infinite();
}

std::optional<Rational> PSeries::ord_lower_bound() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return trunc_;
}

PSeries PSeries::truncated(const std::optional<Rational>& new_trunc) const {
  return PSeries(var_, terms_, min_trunc(trunc_, new_trunc));
}

PSeries PSeries::with_var(std::string var) const { return PSeries(std::move(var), terms_, trunc_); }

PSeries PSeries::operator-() const {
  PSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

PSeries PSeries::scaled(const Rational& factor) const {
  if (factor == 0) return PSeries(var_, {}, trunc_);
  PSeries r = *this;
  for (auto& [e, c] : r.terms_) c *= factor;
  return r;
}

std::string PSeries::str() const {
  std::ostringstream out;
  bool first = true;
  const std::string v = var_.empty() ? "t" : var_;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << v;
    if (e != 1) {
      if (is_integer(e))
        out << "^" << to_string(e);
      else
        out << "^(" << to_string(e) << ")";
    }
  }
  if (first) out << "0";
  if (trunc_) out << " + O(" << v << "^" << (is_integer(*trunc_) ? "" : "(") << to_string(*trunc_)
                  << (is_integer(*trunc_) ? "" : ")") << ")";
  return out.str();
}

PSeries ps_add(const PSeries& a, const PSeries& b) {
  std::string var = merge_var(a.var(), b.var());
  PSeries::Terms terms = a.terms();
  for (const auto& [e, c] : b.terms()) {
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) it->second += c;
  }
  return PSeries(std::move(var), std::move(terms), min_trunc(a.trunc(), b.trunc()));
}

PSeries ps_sub(const PSeries& a, const PSeries& b) { return ps_add(a, -b); }

PSeries ps_mul(const PSeries& a, const PSeries& b) {
  std::string var = merge_var(a.var(), b.var());
  if (a.is_exact_zero() || b.is_exact_zero()) return PSeries(var, {}, std::nullopt);
  // Unknown tail of a times b starts at T_a + ord(b), and symmetrically.
  std::optional<Rational> trunc;
  if (a.trunc()) trunc = *a.trunc() + *b.ord_lower_bound();
  if (b.trunc()) trunc = min_trunc(trunc, *b.trunc() + *a.ord_lower_bound());

  std::vector<std::pair<Rational, Rational>> bt(b.terms().begin(), b.terms().end());
  PSeries::Terms terms;
  Rational e, c;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : bt) {
      e = ea + eb;
      if (trunc && e >= *trunc) break;  // b's exponents increase
      c = ca * cb;
      auto [it, inserted] = terms.emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  return PSeries(std::move(var), std::move(terms), std::move(trunc));
}

PSeries ps_pow(const PSeries& a, unsigned long n) {
  PSeries result = PSeries::constant(1);
  PSeries base = a;
  while (n > 0) {
    if (n & 1UL) result = ps_mul(result, base);
    n >>= 1;
    if (n > 0) base = ps_mul(base, base);
  }
  return result;
}

OrderVal ps_ord(const PSeries& a) { return a.ord(); }

PSeries ps_substitute(const PSeries& f, const PSeries& g) {
  const std::string& var = g.var().empty() ? f.var() : g.var();
  std::optional<Rational> lower = g.ord_lower_bound();
  if (lower && *lower <= 0) throw DomainError("substitution requires a series of positive order");

  bool integral = true;
  for (const auto& [e, c] : f.terms()) integral = integral && is_integer(e);

  if (!lower) {
    // g is exactly zero: only the constant term survives.
    if (f.trunc() && *f.trunc() <= 0) return PSeries(var, {}, Rational(0));
    return PSeries(var, {{0, f.coefficient(0)}}, std::nullopt);
  }

  if (!integral) {
    const auto& gt = g.terms();
    if (!g.is_exact() || gt.size() != 1 || gt.begin()->second != 1)
      throw DomainError("fractional exponents can only be substituted by an exact monomial t^q");
    const Rational& q = gt.begin()->first;
    PSeries::Terms terms;
    for (const auto& [e, c] : f.terms()) terms.emplace(e * q, c);
    std::optional<Rational> trunc;
    if (f.trunc()) trunc = *f.trunc() * q;
    return PSeries(var, std::move(terms), std::move(trunc));
  }

  std::optional<Rational> bound;
  if (f.trunc()) bound = *f.trunc() * *lower;
  PSeries result(var, {}, bound);
  PSeries power = PSeries::constant(1);
  unsigned long power_exp = 0;
  for (const auto& [e, c] : f.terms()) {
    if (bound && e * *lower >= *bound) break;
    unsigned long target = e.get_num().get_ui();
    while (power_exp < target) {
      power = ps_mul(power, g);
      if (bound) power = power.truncated(bound);
      ++power_exp;
    }
    result = ps_add(result, power.scaled(c));
  }
  return result.with_var(var);
}

}  // namespace lctkit
