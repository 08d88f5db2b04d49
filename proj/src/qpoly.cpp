#include "lctkit/qpoly.hpp"

#include "lctkit/errors.hpp"

namespace lctkit {

void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int qpoly_degree(const QPoly& p) {
  QPoly q = p;
  qpoly_trim(q);
  return static_cast<int>(q.size()) - 1;
}

QPoly qpoly_derivative(const QPoly& p) {
  QPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  qpoly_trim(out);
  return out;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  qpoly_trim(out);
  return out;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a_in, const QPoly& b_in) {
  QPoly a = a_in, b = b_in;
  qpoly_trim(a);
  qpoly_trim(b);
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  const std::size_t shift = b.size() - 1;
  for (std::size_t top = a.size(); top > shift; --top) {
    const std::size_t i = top - 1;
    Rational coef = a[i] / b.back();
    q[i - shift] = coef;
    if (coef != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[i - shift + j] -= coef * b[j];
  }
  qpoly_trim(q);
  qpoly_trim(a);
  return {q, a};
}

QPoly qpoly_monic(const QPoly& p_in) {
  QPoly p = p_in;
  qpoly_trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  qpoly_trim(a);
  qpoly_trim(b);
  while (!b.empty()) {
    auto r = qpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return qpoly_monic(a);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p_in) {
  // Yun's algorithm.
  QPoly p = qpoly_monic(p_in);
  std::vector<std::pair<QPoly, int>> out;
  if (qpoly_degree(p) < 1) return out;
  QPoly dp = qpoly_derivative(p);
  QPoly a = qpoly_gcd(p, dp);
  QPoly b = qpoly_divmod(p, a).first;
  QPoly c = qpoly_divmod(dp, a).first;
  QPoly bd = qpoly_derivative(b);
  QPoly dpoly(std::max(c.size(), bd.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) dpoly[i] += c[i];
  for (std::size_t i = 0; i < bd.size(); ++i) dpoly[i] -= bd[i];
  qpoly_trim(dpoly);
  int multiplicity = 1;
  while (qpoly_degree(b) >= 1) {
    QPoly g = qpoly_gcd(b, dpoly);
    if (qpoly_degree(g) >= 1) out.emplace_back(g, multiplicity);
    b = qpoly_divmod(b, g).first;
    c = qpoly_divmod(dpoly, g).first;
    bd = qpoly_derivative(b);
    dpoly.assign(std::max(c.size(), bd.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) dpoly[i] += c[i];
    for (std::size_t i = 0; i < bd.size(); ++i) dpoly[i] -= bd[i];
    qpoly_trim(dpoly);
    ++multiplicity;
  }
  return out;
}

}  // namespace lctkit
