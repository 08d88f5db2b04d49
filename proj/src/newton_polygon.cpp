#include "lctkit/newton_polygon.hpp"

#include <algorithm>

#include "lctkit/errors.hpp"

namespace lctkit {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is not strictly below segment a-c.
Rational cross(const std::pair<int, Rational>& a, const std::pair<int, Rational>& b,
               const std::pair<int, Rational>& c) {
  return Rational(b.first - a.first) * (c.second - a.second) - (b.second - a.second) * Rational(c.first - a.first);
}

}  // namespace

NewtonPolygon polygon_from_power_orders(const std::vector<OrderVal>& by_power) {
  NewtonPolygon np;
  const int n = static_cast<int>(by_power.size()) - 1;
  if (n < 1) throw DomainError("Newton polygon needs positive degree");
  if (!by_power[n].is_exact() || by_power[n].value() != 0) throw DomainError("Newton polygon: leading coefficient must be a unit");
  np.degree = n;
  for (int i = 0; i <= n; ++i) np.points.emplace_back(i, by_power[n - i]);

  int j0 = 0;
  while (j0 < n && by_power[j0].is_infinite()) ++j0;
  np.zero_roots = j0;

  std::vector<std::pair<int, Rational>> pts;
  for (int j = j0; j <= n; ++j) {
    if (by_power[j].is_infinite()) continue;
    pts.emplace_back(j, by_power[j].value());
  }
  // Lower hull, left to right, collinear points dropped.
  std::vector<std::pair<int, Rational>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  np.hull = hull;

  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    PolygonSegment seg;
    seg.left = hull[s].first;
    seg.right = hull[s + 1].first;
    seg.left_height = hull[s].second;
    seg.right_height = hull[s + 1].second;
    seg.order = (seg.left_height - seg.right_height) / Rational(seg.right - seg.left);
    np.segments.push_back(seg);
  }
  // A vertex known only from below may move up, which reshapes both adjacent edges.
  for (std::size_t v = 0; v < hull.size(); ++v) {
    if (!by_power[hull[v].first].is_at_least()) continue;
    if (v > 0) np.segments[v - 1].certain = false;
    if (v < np.segments.size()) np.segments[v].certain = false;
  }

  // Groups, walking right to left so orders increase.
  std::vector<RootGroup> groups;
  for (std::size_t s = np.segments.size(); s-- > 0;) {
    const auto& seg = np.segments[s];
    if (seg.certain) {
      groups.push_back({OrderVal::exact(seg.order), seg.right - seg.left, seg.left, seg.right});
      continue;
    }
    // Maximal run of uncertain edges ending here: its roots have order at least this edge's.
    std::size_t first = s;
    while (first > 0 && !np.segments[first - 1].certain) --first;
    int left = np.segments[first].left;
    groups.push_back({OrderVal::at_least(seg.order), seg.right - left, left, seg.right});
    s = first;
  }
  if (j0 > 0) groups.push_back({OrderVal::infinite(), j0, 0, j0});
  np.groups = std::move(groups);
  return np;
}

bool NewtonPolygon::ambiguous() const {
  for (const auto& g : groups)
    if (g.order.is_at_least()) return true;
  return false;
}

std::vector<std::pair<OrderVal, int>> NewtonPolygon::slopes() const {
  std::vector<std::pair<OrderVal, int>> out;
  for (const auto& g : groups) {
    if (!out.empty() && out.back().first == g.order)
      out.back().second += g.count;
    else
      out.emplace_back(g.order, g.count);
  }
  return out;
}

std::vector<OrderVal> NewtonPolygon::root_orders() const {
  std::vector<OrderVal> out;
  for (const auto& g : groups)
    for (int i = 0; i < g.count; ++i) out.push_back(g.order);
  return out;
}

NewtonPolygon newton_polygon(const UPoly<PSeries>& h) {
  auto dense = h.dense();
  std::vector<OrderVal> orders;
  for (const auto& c : dense) orders.push_back(c.ord());
  return polygon_from_power_orders(orders);
}

void require_unambiguous(const NewtonPolygon& np) {
  Rational worst = 0;
  bool ambiguous = false;
  for (const auto& [i, ord] : np.points) {
    if (ord.is_at_least()) {
      ambiguous = true;
      worst = std::max(worst, ord.value());
    }
  }
  if (ambiguous && np.ambiguous())
    throw TruncationError("root orders are not determined by the available truncation",
                          "truncate beyond " + to_string(2 * worst));
}

}  // namespace lctkit
