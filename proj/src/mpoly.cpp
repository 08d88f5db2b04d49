#include "lctkit/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "lctkit/errors.hpp"

namespace lctkit {

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

std::vector<std::string> z_vars(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("z" + std::to_string(i));
  return out;
}

MPoly::MPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  normalize();
}

void MPoly::normalize() {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable '" + vars_[i] + "'");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != vars_.size()) throw DomainError("exponent vector arity mismatch");
    for (int e : it->first)
      if (e < 0) throw DomainError("negative exponent in polynomial");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MPoly MPoly::constant(const Rational& c, std::vector<std::string> vars) {
  Terms t;
  if (c != 0) t.emplace(Exponents(vars.size(), 0), c);
  return MPoly(std::move(vars), std::move(t));
}

MPoly MPoly::variable(const std::string& name) { return MPoly({name}, Terms{{{1}, Rational(1)}}); }

MPoly MPoly::variable(const std::vector<std::string>& vars, std::size_t index) {
  Exponents e(vars.size(), 0);
  e.at(index) = 1;
  return MPoly(vars, Terms{{e, Rational(1)}});
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
  Terms t;
  t.emplace(std::move(exps), c);
  return MPoly(std::move(vars), std::move(t));
}

bool MPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int k : e)
      if (k != 0) return false;
  return true;
}

Rational MPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    best = std::max(best, s);
  }
  return best;
}

int MPoly::var_index(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int MPoly::degree_in(const std::string& var) const {
  int idx = var_index(var);
  if (idx < 0) return terms_.empty() ? -1 : 0;
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[idx]);
  return best;
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      // Variables that never occur may be dropped.
      bool used = false;
      for (const auto& [e, c] : terms_) used = used || e[i] != 0;
      if (used) throw DomainError("with_vars: variable '" + vars_[i] + "' would be lost");
      pos[i] = -1;
    } else {
      pos[i] = static_cast<int>(it - vars.begin());
    }
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (pos[i] >= 0) ne[pos[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return MPoly(vars, std::move(out));
}

MPoly MPoly::compacted() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool u = false;
    for (const auto& [e, c] : terms_) u = u || e[i] != 0;
    if (u) used.push_back(vars_[i]);
  }
  return with_vars(used);
}

MPoly MPoly::renamed(const std::vector<std::string>& new_names) const {
  if (new_names.size() != vars_.size()) throw DomainError("renamed: arity mismatch");
  return MPoly(new_names, terms_);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::scaled(const Rational& q) const {
  if (q == 0) return MPoly({}, {});
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= q;
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result = MPoly::constant(1, vars_);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<MPoly> MPoly::coefficients_in(const std::string& var) const {
  int idx = var_index(var);
  if (idx < 0) return {*this};
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (static_cast<int>(i) != idx) rest.push_back(vars_[i]);
  std::vector<Terms> parts(std::max(degree_in(var), 0) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != idx) ne.push_back(e[i]);
    parts[e[idx]].emplace(std::move(ne), c);
  }
  std::vector<MPoly> out;
  for (auto& t : parts) out.emplace_back(rest, std::move(t));
  return out;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& values) const {
  std::vector<std::string> kept;
  for (const auto& v : vars_)
    if (!values.count(v)) kept.push_back(v);
  std::vector<std::string> out_vars = kept;
  for (const auto& [name, value] : values) out_vars = union_vars(out_vars, value.vars());

  std::vector<std::vector<MPoly>> powers(vars_.size());
  MPoly result = MPoly::constant(0, out_vars);
  for (const auto& [e, c] : terms_) {
    Exponents keep_exp(out_vars.size(), 0);
    MPoly term = MPoly::constant(1, out_vars);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = values.find(vars_[i]);
      if (it == values.end()) {
        auto pos = std::find(out_vars.begin(), out_vars.end(), vars_[i]) - out_vars.begin();
        keep_exp[pos] = e[i];
        continue;
      }
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MPoly::constant(1, out_vars));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * it->second);
      term = term * cache[e[i]];
    }
    result = result + MPoly::monomial(out_vars, keep_exp, c) * term;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  auto vars = union_vars(a.vars(), b.vars());
  return a.with_vars(vars).terms() == b.with_vars(vars).terms();
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.vars() == b.vars()) {
    MPoly::Terms t = a.terms();
    for (const auto& [e, c] : b.terms()) {
      auto [it, inserted] = t.emplace(e, c);
      if (!inserted) it->second += c;
    }
    return MPoly(a.vars(), std::move(t));
  }
  auto vars = union_vars(a.vars(), b.vars());
  return a.with_vars(vars) + b.with_vars(vars);
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.vars() != b.vars()) {
    auto vars = union_vars(a.vars(), b.vars());
    return a.with_vars(vars) * b.with_vars(vars);
  }
  MPoly::Terms t;
  const std::size_t n = a.vars().size();
  MPoly::Exponents e(n);
  Rational c;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      auto [it, inserted] = t.emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  return MPoly(a.vars(), std::move(t));
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << vars_[i];
      if (e[i] != 1) mono << "^" << e[i];
    }
    if (!any)
      out << to_string(mag);
    else if (mag == 1)
      out << mono.str();
    else
      out << to_string(mag) << "*" << mono.str();
  }
  return out.str();
}

namespace {

PSeries evaluate_impl(const MPoly& p, const std::vector<const PSeries*>& values) {
  std::vector<std::vector<PSeries>> powers(values.size());
  PSeries result;
  for (const auto& [e, c] : p.terms()) {
    PSeries term = PSeries::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(PSeries::constant(1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(ps_mul(cache.back(), *values[i]));
      term = ps_mul(term, cache[e[i]]);
    }
    result = ps_add(result, term);
  }
  return result;
}

}  // namespace

PSeries evaluate(const MPoly& p, const std::vector<PSeries>& values) {
  if (values.size() != p.vars().size()) throw DomainError("evaluate: expected one value per variable");
  std::vector<const PSeries*> ptrs;
  for (const auto& v : values) ptrs.push_back(&v);
  return evaluate_impl(p, ptrs);
}

PSeries evaluate(const MPoly& p, const std::map<std::string, PSeries>& values) {
  std::vector<const PSeries*> ptrs;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = values.find(p.vars()[i]);
    if (it == values.end()) {
      bool used = false;
      for (const auto& [e, c] : p.terms()) used = used || e[i] != 0;
      if (used) throw DomainError("evaluate: no value for variable '" + p.vars()[i] + "'");
      static const PSeries zero;
      ptrs.push_back(&zero);
    } else {
      ptrs.push_back(&it->second);
    }
  }
  return evaluate_impl(p, ptrs);
}

}  // namespace lctkit
