#include "lctkit/ideals.hpp"

#include "lctkit/errors.hpp"

namespace lctkit {

namespace {

MPoly z(int d, int i) { return MPoly::variable(z_vars(d), static_cast<std::size_t>(i - 1)); }

PolyIdeal coefficient_ideal(const UPoly<MPoly>& p) {
  std::vector<PolyIdeal> parts;
  for (int l = 1; l <= p.degree(); ++l) {
    if (p.a(l).is_zero()) continue;
    parts.push_back(PolyIdeal::principal(p.a(l), Rational(1, l)));
  }
  return qi_sum(parts);
}

}  // namespace

PolyIdeal build_b(int d) {
  if (d < 1) throw DomainError("degree must be positive");
  std::vector<PolyIdeal> parts;
  for (int i = 1; i <= d; ++i) parts.push_back(PolyIdeal::principal(z(d, i), Rational(1, i)));
  return qi_sum(parts);
}

PolyIdeal build_bk(int d, int k) {
  if (k < 1 || k > d) throw DomainError("build_bk: need 1 <= k <= d");
  return coefficient_ideal(compound_poly(generic_upoly(d), k));
}

PolyIdeal build_tilde_bk(int d, int k) {
  if (k < 1 || k > d) throw DomainError("build_tilde_bk: need 1 <= k <= d");
  auto vars = z_vars(d + 1);
  UPoly<MPoly> h = generic_upoly(d);
  std::vector<MPoly> a;
  for (const auto& c : h.coeffs()) a.push_back(c.with_vars(vars));
  MPoly w = MPoly::variable(vars, static_cast<std::size_t>(d));
  return coefficient_ideal(compound_poly(taylor_shift(UPoly<MPoly>(a), w), k));
}

std::vector<Rational> bbar_exponents(const std::vector<int>& indices, int k) {
  std::vector<Rational> j;
  Rational carry = 1;
  for (int m = 1; m <= k; ++m) {
    const int i = indices[m - 1];
    j.push_back(carry / Rational(i - k + m));
    carry *= Rational(i - k + m - 1, i - k + m);
  }
  return j;
}

std::vector<std::vector<int>> bbar_tuples(int d, int k) {
  if (k < 1 || k > d) throw DomainError("build_bbar_k: need 1 <= k <= d");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  auto lower = [&](int m) { return std::max(1, k - m + 1); };  // m is 1-based
  for (int m = 1; m <= k; ++m) cur[m - 1] = lower(m);
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == d) {
      cur[pos] = lower(pos + 1);
      --pos;
    }
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

PolyIdeal build_bbar_k(int d, int k) {
  std::vector<PolyIdeal> parts;
  for (const auto& tuple : bbar_tuples(d, k)) {
    auto j = bbar_exponents(tuple, k);
    std::vector<PolyIdeal> factors;
    for (int m = 0; m < k; ++m)
      if (j[m] != 0) factors.push_back(PolyIdeal::principal(z(d, tuple[m]), j[m]));
    parts.push_back(qi_product(factors));
  }
  return qi_sum(parts);
}

PolyIdeal build_c(int d) {
  if (d < 1) throw DomainError("degree must be positive");
  std::vector<PolyIdeal> parts;
  for (int i = 1; i <= d; ++i) {
    std::vector<PolyIdeal> factors;
    if (d - i >= 1) factors.push_back(PolyIdeal::principal(z(d, d - i), Rational(1, i)));
    if (i > 1) factors.push_back(PolyIdeal::principal(z(d, d), Rational(i - 1, i)));
    parts.push_back(qi_product(factors));
  }
  return qi_sum(parts);
}

PolyIdeal build_trace_free_ideal(int d) {
  if (d < 2) throw DomainError("degree must be at least 2");
  std::vector<PolyIdeal> parts;
  for (int i = 2; i <= d; ++i) parts.push_back(PolyIdeal::principal(z(d, i), Rational(1, i)));
  return qi_sum(parts);
}

}  // namespace lctkit
