#include "lctkit/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "lctkit/errors.hpp"
#include "lctkit/qpoly.hpp"

namespace lctkit {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Unique solution of a square system, or nullopt if singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Rational dot(const std::vector<Rational>& y, const std::vector<int>& v) {
  Rational s = 0;
  for (std::size_t j = 0; j < y.size(); ++j) s += y[j] * v[j];
  return s;
}

// Visits every (count)-subset of {0..total-1}.
template <class F>
void for_each_subset(std::size_t total, std::size_t count, F&& visit) {
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = i;
  if (count > total) return;
  while (true) {
    visit(idx);
    std::size_t pos = count;
    while (pos > 0 && idx[pos - 1] == total - count + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < count; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

Rational lct_monomial_ideal(const std::vector<std::vector<int>>& exponents, int n) {
  if (exponents.empty()) throw DomainError("monomial ideal needs at least one generator");
  if (n < 1) throw DomainError("number of variables must be positive");
  std::set<std::vector<int>> points;
  for (const auto& v : exponents) {
    if (static_cast<int>(v.size()) != n) throw DomainError("exponent vector has the wrong length");
    for (int e : v)
      if (e < 0) throw DomainError("negative exponent");
    points.insert(v);
  }
  std::vector<std::vector<int>> pts(points.begin(), points.end());

  // Dual program: maximise min_v <y, v> over the simplex sum y = 1, y >= 0. The optimum sits where
  // n-1 independent equalities from {y_j = 0} and {<y, v - w> = 0} hold.
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> r(n, Rational(0));
    r[j] = 1;
    rows.push_back(r);
  }
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      std::vector<Rational> r(n);
      for (int j = 0; j < n; ++j) r[j] = pts[a][j] - pts[b][j];
      rows.push_back(r);
    }

  std::optional<Rational> best;
  for_each_subset(rows.size(), static_cast<std::size_t>(n - 1), [&](const std::vector<std::size_t>& pick) {
    Matrix m;
    std::vector<Rational> rhs;
    for (auto i : pick) {
      m.push_back(rows[i]);
      rhs.push_back(0);
    }
    m.push_back(std::vector<Rational>(n, Rational(1)));
    rhs.push_back(1);
    auto y = solve(m, rhs);
    if (!y) return;
    for (const auto& yj : *y)
      if (yj < 0) return;
    Rational value = dot(*y, pts.front());
    for (const auto& v : pts) value = std::min(value, dot(*y, v));
    if (!best || value > *best) best = value;
  });
  if (!best || *best == 0) throw DomainError("unit ideal has no finite log canonical threshold");
  return 1 / *best;
}

PlaneOracleResult lct_plane_nondegenerate(const MPoly& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (f.constant_term() != 0) throw DomainError("curve must pass through the origin");
  const std::size_t nv = f.vars().size();
  if (nv > 2) throw DomainError("plane oracle needs at most two variables");
  std::map<std::pair<int, int>, Rational> coeff;
  for (const auto& [e, c] : f.terms()) {
    int i = nv > 0 ? e[0] : 0;
    int j = nv > 1 ? e[1] : 0;
    coeff[{i, j}] = c;
  }
  std::vector<std::pair<int, int>> pts;
  for (const auto& [p, c] : coeff) pts.push_back(p);  // sorted by i, then j

  // Lower hull, then keep the edges of negative slope: the compact faces.
  std::vector<std::pair<int, int>> hull;
  auto cross = [](std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
  };
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  PlaneOracleResult out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    auto [i0, j0] = hull[k];
    auto [i1, j1] = hull[k + 1];
    if (j1 >= j0) break;
    const int steps = std::gcd(i1 - i0, j0 - j1);
    const int di = (i1 - i0) / steps, dj = (j0 - j1) / steps;
    QPoly face(static_cast<std::size_t>(steps) + 1, Rational(0));
    for (int s = 0; s <= steps; ++s) {
      auto it = coeff.find({i0 + s * di, j0 - s * dj});
      if (it != coeff.end()) face[s] = it->second;
    }
    if (qpoly_degree(qpoly_gcd(face, qpoly_derivative(face))) > 0)
      throw NotApplicableError("degenerate compact face between (" + std::to_string(i0) + "," + std::to_string(j0) +
                               ") and (" + std::to_string(i1) + "," + std::to_string(j1) + ")");
    ++out.compact_faces;
  }
  std::vector<std::vector<int>> support;
  for (const auto& [i, j] : pts) support.push_back({i, j});
  out.lct = std::min(Rational(1), lct_monomial_ideal(support, 2));
  return out;
}

Rational lct_binomial_curve(int d, int k) {
  if (d < 1 || k < 1) throw DomainError("exponents must be positive");
  return std::min(Rational(1), Rational(Rational(1, d) + Rational(1, k)));
}

}  // namespace lctkit
