#include "lctkit/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <memory>

#include "lctkit/errors.hpp"

namespace lctkit {

BigFloat::BigFloat(long precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& q, long precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, long precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

long BigFloat::exponent2() const {
  if (mpfr_zero_p(value_)) return LONG_MIN / 2;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string BigFloat::str(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
  std::string s(buffer);
  mpfr_free_str(buffer);
  return s;
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& b) {
  widen(value_, b.value_);
  mpfr_add(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& b) {
  widen(value_, b.value_);
  mpfr_sub(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& b) {
  widen(value_, b.value_);
  mpfr_mul(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& b) {
  widen(value_, b.value_);
  mpfr_div(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow2(long exponent, long precision) {
  BigFloat r(precision);
  mpfr_set_ui_2exp(r.raw(), 1, exponent, MPFR_RNDN);
  return r;
}

BigFloat pi(long precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat root_n(const BigFloat& x, unsigned long n) {
  BigFloat r(x);
  mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

std::string BigComplex::str(int digits) const { return re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i"; }

BigComplex& BigComplex::operator+=(const BigComplex& b) {
  re += b.re;
  im += b.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& b) {
  BigFloat r = re * b.re - im * b.im;
  BigFloat i = re * b.im + im * b.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& b) {
  BigFloat den = b.re * b.re + b.im * b.im;
  if (den.is_zero()) throw PrecisionError("complex division by zero");
  BigFloat r = (re * b.re + im * b.im) / den;
  BigFloat i = (im * b.re - re * b.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& b) {
  re *= b;
  im *= b;
  return *this;
}

BigFloat abs(const BigComplex& z) {
  BigFloat r(std::max(z.re.precision(), z.im.precision()));
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

BigComplex polar(const BigFloat& radius, const BigFloat& angle) {
  BigFloat s(angle.precision()), c(angle.precision());
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return {radius * c, radius * s};
}

BigComplex complex_pow(const BigComplex& z, unsigned long n) {
  BigComplex result(Rational(1), z.precision());
  BigComplex base = z;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::vector<BigComplex> polynomial_roots(const std::vector<BigComplex>& coeffs_in, long precision) {
  std::vector<BigComplex> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  std::vector<BigComplex> roots;
  // Exact zero roots.
  std::size_t shift = 0;
  while (coeffs[shift].is_zero()) ++shift;
  for (std::size_t i = 0; i < shift; ++i) roots.emplace_back(precision);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(shift));

  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return roots;
  const BigComplex lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  if (n == 1) {
    roots.push_back(-coeffs[0]);
    return roots;
  }

  // Start on a circle whose radius matches the geometric mean of the root moduli.
  BigFloat radius = root_n(abs(coeffs[0]), n);
  if (radius.is_zero()) radius = BigFloat(1, precision);
  BigFloat two_pi = pi(precision) * BigFloat(2, precision);
  std::vector<BigComplex> z;
  for (std::size_t k = 0; k < n; ++k) {
    BigFloat angle = two_pi * BigFloat(Rational(static_cast<long>(k), static_cast<long>(n)), precision) +
                     BigFloat(Rational(7, 10), precision);
    z.push_back(polar(radius, angle));
  }

  const BigFloat tight = pow2(-precision + 12, precision);
  const BigFloat loose = pow2(-precision / (2 * static_cast<long>(n)), precision);
  const int max_iterations = 600 + 40 * static_cast<int>(n);
  BigFloat best_max_step(precision);
  int stalled = 0;
  bool first = true;

  for (int iteration = 0; iteration < max_iterations; ++iteration) {
    BigFloat max_step(precision);
    for (std::size_t k = 0; k < n; ++k) {
      BigComplex p = coeffs[n], dp(precision);
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + coeffs[i];
      }
      if (p.is_zero()) continue;
      if (dp.is_zero()) {
        z[k] += BigComplex(Rational(1, 1000), precision);
        continue;
      }
      BigComplex newton = p / dp;
      BigComplex repulsion(precision);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        BigComplex diff = z[k] - z[j];
        if (diff.is_zero()) diff = BigComplex(Rational(1, 1000000), precision);
        repulsion += BigComplex(Rational(1), precision) / diff;
      }
      BigComplex denom = BigComplex(Rational(1), precision) - newton * repulsion;
      BigComplex step = denom.is_zero() ? newton : newton / denom;
      z[k] -= step;
      BigFloat scale = max(BigFloat(1, precision), abs(z[k]));
      BigFloat rel = abs(step) / scale;
      if (max_step < rel) max_step = rel;
    }
    if (max_step <= tight) break;
    if (first || max_step < best_max_step) {
      best_max_step = max_step;
      stalled = 0;
      first = false;
    } else if (++stalled >= 25 && best_max_step <= loose) {
      break;  // limited by rounding noise around a multiple root
    }
    if (iteration + 1 == max_iterations && !(best_max_step <= loose))
      throw PrecisionError("root finder did not converge");
  }
  for (auto& r : z) roots.push_back(std::move(r));
  return roots;
}

}  // namespace lctkit
