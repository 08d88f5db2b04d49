#pragma once

#include <map>
#include <string>
#include <vector>

#include "lctkit/rational.hpp"
#include "lctkit/series.hpp"

namespace lctkit {

// Sparse polynomial over Q in named variables. Exponent vectors are ordered lexicographically
// in the variable order, so the last term is the lex-leading one.
class MPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  MPoly() = default;  // zero with no variables
  MPoly(std::vector<std::string> vars, Terms terms);

  static MPoly constant(const Rational& c, std::vector<std::string> vars = {});
  static MPoly variable(const std::string& name);
  static MPoly variable(const std::vector<std::string>& vars, std::size_t index);
  static MPoly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(const std::string& var) const;
  int var_index(const std::string& var) const;  // -1 when absent

  // Same polynomial over a superset of variables (in the given order).
  MPoly with_vars(const std::vector<std::string>& vars) const;
  // Drops variables that do not occur.
  MPoly compacted() const;
  MPoly renamed(const std::vector<std::string>& new_names) const;

  MPoly operator-() const;
  MPoly scaled(const Rational& q) const;
  MPoly pow(unsigned n) const;

  // Coefficients of powers of `var`, index = exponent; remaining variables unchanged.
  std::vector<MPoly> coefficients_in(const std::string& var) const;

  // Replace each variable by a polynomial; missing names are kept.
  MPoly substitute(const std::map<std::string, MPoly>& values) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  std::string str() const;

 private:
  void normalize();
  std::vector<std::string> vars_;
  Terms terms_;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
inline MPoly operator*(const Rational& q, const MPoly& a) { return a.scaled(q); }

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Generic variable names z1..zn.
std::vector<std::string> z_vars(int n);

// Evaluate at series values (one per variable, in variable order).
PSeries evaluate(const MPoly& p, const std::vector<PSeries>& values);
// Evaluate with named values; every variable of p must be bound.
PSeries evaluate(const MPoly& p, const std::map<std::string, PSeries>& values);

inline MPoly ring_zero(const MPoly&) { return MPoly(); }
inline MPoly ring_constant(const MPoly&, const Rational& c) { return MPoly::constant(c); }
inline bool ring_is_zero(const MPoly& a) { return a.is_zero(); }
inline bool ring_is_one(const MPoly& a) { return a.is_constant() && a.constant_term() == 1; }

}  // namespace lctkit
