#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "lctkit/rational.hpp"

namespace lctkit {

// Owning wrapper around an mpfr_t. Results of binary operations use the larger precision.
class BigFloat {
 public:
  explicit BigFloat(long precision = 256);
  BigFloat(const Rational& q, long precision);
  BigFloat(long value, long precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long exponent2() const;  // floor(log2|x|)+1, or LONG_MIN/2 for zero
  std::string str(int digits = 20) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& b);
  BigFloat& operator-=(const BigFloat& b);
  BigFloat& operator*=(const BigFloat& b);
  BigFloat& operator/=(const BigFloat& b);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat pow2(long exponent, long precision);  // 2^exponent
BigFloat pi(long precision);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat root_n(const BigFloat& x, unsigned long n);  // x^(1/n), x >= 0

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(long precision = 256) : re(precision), im(precision) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(const Rational& q, long precision) : re(q, precision), im(precision) {}

  long precision() const { return re.precision(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string str(int digits = 20) const;

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& b);
  BigComplex& operator-=(const BigComplex& b);
  BigComplex& operator*=(const BigComplex& b);
  BigComplex& operator/=(const BigComplex& b);
  BigComplex& operator*=(const BigFloat& b);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
};

BigFloat abs(const BigComplex& z);
BigComplex polar(const BigFloat& radius, const BigFloat& angle);
BigComplex complex_pow(const BigComplex& z, unsigned long n);

// All complex roots of sum coeffs[i] z^i (leading coefficient nonzero), by Aberth iteration.
// Throws PrecisionError when the iteration fails to settle.
std::vector<BigComplex> polynomial_roots(const std::vector<BigComplex>& coeffs, long precision);

}  // namespace lctkit
