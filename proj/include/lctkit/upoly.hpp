#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "lctkit/config.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/mpoly.hpp"
#include "lctkit/rational.hpp"
#include "lctkit/series.hpp"

namespace lctkit {

// Coefficient list in increasing powers of the main variable.
template <class R>
using DensePoly = std::vector<R>;

// Monic polynomial y^d + a_1 y^{d-1} + ... + a_d with coefficients in R (MPoly or PSeries).
// Roots alpha_i satisfy a_i = (-1)^i e_i(alpha).
template <class R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<R> coeffs) : a_(std::move(coeffs)) {
    if (a_.empty()) throw DomainError("monic polynomial must have positive degree");
  }

  int degree() const { return static_cast<int>(a_.size()); }
  // 1-based: a(i) is the coefficient of y^{d-i}.
  const R& a(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<R>& coeffs() const { return a_; }

  // Coefficient of y^j at index j, leading 1 included.
  DensePoly<R> dense() const {
    DensePoly<R> out(a_.size() + 1);
    const int d = degree();
    for (int j = 0; j < d; ++j) out[j] = a_[d - j - 1];
    out[d] = ring_constant(a_.front(), 1);
    return out;
  }

  static UPoly from_dense(const DensePoly<R>& dense) {
    if (dense.size() < 2) throw DomainError("monic polynomial must have positive degree");
    if (!ring_is_one(dense.back())) throw DomainError("polynomial is not monic");
    std::vector<R> a(dense.size() - 1);
    const int d = static_cast<int>(a.size());
    for (int i = 1; i <= d; ++i) a[i - 1] = dense[d - i];
    return UPoly(std::move(a));
  }

 private:
  std::vector<R> a_;
};

template <class R>
R ring_one(const R& like) {
  return ring_constant(like, 1);
}

namespace detail {

template <class R>
void check_symbolic_budget(int degree, int cap, const char* what) {
  if constexpr (std::is_same_v<R, MPoly>) {
    if (degree > cap)
      throw BudgetError(std::string(what) + ": symbolic degree " + std::to_string(degree) +
                        " exceeds the budget " + std::to_string(cap) + "; use the numeric path");
  }
}

inline MPoly mpoly_in_coefficients(const MPoly& p, const std::vector<MPoly>& a) {
  std::map<std::string, MPoly> values;
  auto names = z_vars(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) values.emplace(names[i], a[i]);
  return p.substitute(values);
}

inline PSeries mpoly_in_coefficients(const MPoly& p, const std::vector<PSeries>& a) {
  std::map<std::string, PSeries> values;
  auto names = z_vars(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) values.emplace(names[i], a[i]);
  return evaluate(p, values);
}

}  // namespace detail

template <class R>
DensePoly<R> dense_mul(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly<R> out(a.size() + b.size() - 1, ring_zero(a.front()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

// Horner evaluation.
template <class R>
R dense_eval(const DensePoly<R>& p, const R& x) {
  R acc = ring_zero(x);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Power sums P_0..P_count of the roots (P_0 = d), by Newton's identities.
template <class R>
std::vector<R> power_sums(const UPoly<R>& h, int count) {
  const int d = h.degree();
  const R& like = h.a(1);
  std::vector<R> p(static_cast<std::size_t>(count) + 1, ring_zero(like));
  p[0] = ring_constant(like, d);
  for (int m = 1; m <= count; ++m) {
    R acc = ring_zero(like);
    for (int i = 1; i <= std::min(m - 1, d); ++i) acc = acc + h.a(i) * p[m - i];
    if (m <= d) acc = acc + Rational(m) * h.a(m);
    p[m] = -acc;
  }
  return p;
}

// Monic polynomial of degree D whose roots have power sums p[1..D].
template <class R>
UPoly<R> from_power_sums(const std::vector<R>& p, int D) {
  const R& like = p.at(0);
  std::vector<R> b(static_cast<std::size_t>(D), ring_zero(like));
  for (int m = 1; m <= D; ++m) {
    R acc = p.at(m);
    for (int i = 1; i < m; ++i) acc = acc + b[i - 1] * p[m - i];
    b[m - 1] = -(Rational(1, m) * acc);
  }
  return UPoly<R>(std::move(b));
}

// h(y + w).
template <class R>
UPoly<R> taylor_shift(const UPoly<R>& h, const R& w) {
  auto c = h.dense();
  const int d = h.degree();
  std::vector<R> wpow{ring_one(w)};
  for (int i = 1; i <= d; ++i) wpow.push_back(wpow.back() * w);
  DensePoly<R> out(d + 1, ring_zero(w));
  for (int k = 0; k <= d; ++k)
    for (int j = k; j <= d; ++j) out[k] = out[k] + Rational(binomial(j, k)) * (c[j] * wpow[j - k]);
  return UPoly<R>::from_dense(out);
}

// Roots are the products of k distinct roots of h; degree C(d,k).
template <class R>
UPoly<R> compound_poly(const UPoly<R>& h, int k) {
  const int d = h.degree();
  if (k < 1 || k > d) throw DomainError("compound_poly: k must satisfy 1 <= k <= d");
  detail::check_symbolic_budget<R>(d, symbolic_budget().max_degree_compound, "compound_poly");
  const int D = static_cast<int>(binomial(d, k).get_si());
  const R& like = h.a(1);
  auto P = power_sums(h, k * D);
  std::vector<R> q(static_cast<std::size_t>(D) + 1, ring_zero(like));
  q[0] = ring_constant(like, D);
  for (int m = 1; m <= D; ++m) {
    // e_k of the m-th powers of the roots, from their power sums P_{jm}.
    std::vector<R> e(static_cast<std::size_t>(k) + 1, ring_zero(like));
    e[0] = ring_one(like);
    for (int j = 1; j <= k; ++j) {
      R acc = ring_zero(like);
      for (int i = 1; i <= j; ++i) {
        R term = e[j - i] * P[i * m];
        acc = (i % 2 == 1) ? acc + term : acc - term;
      }
      e[j] = Rational(1, j) * acc;
    }
    q[m] = e[k];
  }
  return from_power_sums(q, D);
}

// Roots are alpha_i - alpha_j over ordered pairs i != j; degree d(d-1).
template <class R>
UPoly<R> difference_poly(const UPoly<R>& h) {
  const int d = h.degree();
  if (d < 2) throw DomainError("difference_poly: degree must be at least 2");
  detail::check_symbolic_budget<R>(d, symbolic_budget().max_degree_compound, "difference_poly");
  const int D = d * (d - 1);
  const R& like = h.a(1);
  auto P = power_sums(h, D);
  std::vector<R> q(static_cast<std::size_t>(D) + 1, ring_zero(like));
  q[0] = ring_constant(like, D);
  for (int m = 1; m <= D; ++m) {
    R acc = ring_zero(like);
    // sum_{i,j} (a_i - a_j)^m, symmetric in r <-> m-r; odd m vanishes.
    if (m % 2 == 0) {
      for (int r = 0; r <= m; ++r) {
        R term = Rational(binomial(m, r)) * (P[r] * P[m - r]);
        acc = ((m - r) % 2 == 0) ? acc + term : acc - term;
      }
    }
    q[m] = acc;
  }
  return from_power_sums(q, D);
}

// G as a polynomial in w with coefficients polynomial in z1..zd, specialised at h's coefficients.
template <class R>
DensePoly<R> specialise_in_w(const UPoly<R>& h, const MPoly& G, const std::string& w = "w") {
  auto allowed = z_vars(h.degree());
  allowed.push_back(w);
  const MPoly used = G.compacted();
  for (const auto& v : used.vars())
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
      throw DomainError("value_poly: unexpected variable '" + v + "'");
  auto parts = G.coefficients_in(w);
  DensePoly<R> out;
  for (const auto& part : parts) out.push_back(detail::mpoly_in_coefficients(part, h.coeffs()));
  return out;
}

// Roots are G(a, alpha_i), i = 1..d.
template <class R>
UPoly<R> value_poly(const UPoly<R>& h, const MPoly& G) {
  const int d = h.degree();
  if (G.compacted().terms().size() > 1)
    detail::check_symbolic_budget<R>(d, symbolic_budget().max_degree_value, "value_poly");
  DensePoly<R> g = specialise_in_w(h, G);
  const R& like = h.a(1);
  const int gdeg = static_cast<int>(g.size()) - 1;
  auto P = power_sums(h, std::max(gdeg, 0) * d);
  std::vector<R> q(static_cast<std::size_t>(d) + 1, ring_zero(like));
  q[0] = ring_constant(like, d);
  DensePoly<R> gm{ring_one(like)};
  for (int m = 1; m <= d; ++m) {
    gm = dense_mul(gm, g);
    R acc = ring_zero(like);
    for (std::size_t r = 0; r < gm.size(); ++r)
      if (!ring_is_zero(gm[r])) acc = acc + gm[r] * P[r];
    q[m] = acc;
  }
  return from_power_sums(q, d);
}

// Division-free determinant by expansion over column subsets; fine for the small
// Sylvester matrices used here.
template <class R>
R determinant(const std::vector<std::vector<R>>& m, const R& like) {
  const std::size_t n = m.size();
  if (n == 0) return ring_one(like);
  if (n > 20) throw BudgetError("determinant: matrix too large");
  std::vector<R> dp(std::size_t{1} << n, ring_zero(like));
  std::vector<bool> known(dp.size(), false);
  dp[0] = ring_one(like);
  known[0] = true;
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    R acc = ring_zero(like);
    bool nonzero = false;
    int above = 0;  // set columns greater than j
    for (std::size_t jj = n; jj-- > 0;) {
      if (!(mask & (std::size_t{1} << jj))) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << jj);
      if (!ring_is_zero(m[row][jj]) && known[rest]) {
        R term = m[row][jj] * dp[rest];
        acc = (above % 2 == 0) ? acc + term : acc - term;
        nonzero = true;
      }
      ++above;
    }
    if (nonzero) {
      known[mask] = !ring_is_zero(acc);
      dp[mask] = acc;
    }
  }
  return dp.back();
}

// Res(f, g) = lc(f)^deg(g) * prod g(roots of f), via the Sylvester determinant.
template <class R>
R resultant(const DensePoly<R>& f, const DensePoly<R>& g) {
  if (f.size() < 2 || g.size() < 2) throw DomainError("resultant: both inputs need positive degree");
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const R& like = f.back();
  std::vector<std::vector<R>> syl(m + n, std::vector<R>(m + n, ring_zero(like)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) syl[i][i + k] = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) syl[n + i][i + k] = g[n - k];
  return determinant(syl, like);
}

// Generic monic polynomial with coefficients z1..zd.
inline UPoly<MPoly> generic_upoly(int d) {
  auto names = z_vars(d);
  std::vector<MPoly> a;
  for (int i = 0; i < d; ++i) a.push_back(MPoly::variable(names, static_cast<std::size_t>(i)));
  return UPoly<MPoly>(std::move(a));
}

// Specialise generic MPoly coefficients at series values of z1..zd.
inline UPoly<PSeries> specialise(const UPoly<MPoly>& h, const std::vector<PSeries>& values) {
  std::vector<PSeries> a;
  for (const auto& c : h.coeffs()) a.push_back(detail::mpoly_in_coefficients(c, values));
  return UPoly<PSeries>(std::move(a));
}

// h(w) for a series w.
inline PSeries evaluate_at(const UPoly<PSeries>& h, const PSeries& w) { return dense_eval(h.dense(), w); }

}  // namespace lctkit
