#pragma once

#include <utility>
#include <vector>

#include "lctkit/orderval.hpp"
#include "lctkit/series.hpp"
#include "lctkit/upoly.hpp"

namespace lctkit {

// Edge of the lower hull in (power of y, order of coefficient) coordinates.
struct PolygonSegment {
  int left = 0, right = 0;
  Rational left_height, right_height;
  Rational order;  // root order carried by the edge: (left_height - right_height) / (right - left)
  bool certain = true;
};

// Roots grouped by what the polygon certifies about them.
struct RootGroup {
  OrderVal order;  // Exact slope, AtLeast bound for truncation-affected edges, or Infinite
  int count = 0;
  int left = 0, right = 0;  // span in powers of y
};

struct NewtonPolygon {
  int degree = 0;
  std::vector<std::pair<int, OrderVal>> points;  // (i, ord a_i), i = 0..d, a_0 = 1
  std::vector<std::pair<int, Rational>> hull;    // vertices (d - i, height), left to right
  std::vector<PolygonSegment> segments;          // left to right (decreasing order)
  std::vector<RootGroup> groups;                 // increasing order, Infinite last
  int zero_roots = 0;

  bool ambiguous() const;
  // (order, multiplicity), increasing, equal exact orders merged.
  std::vector<std::pair<OrderVal, int>> slopes() const;
  // One entry per root, increasing.
  std::vector<OrderVal> root_orders() const;
};

// Polygon from the orders of the coefficients of y^0..y^n (entry n must be Exact(0)).
NewtonPolygon polygon_from_power_orders(const std::vector<OrderVal>& by_power);

NewtonPolygon newton_polygon(const UPoly<PSeries>& h);

// Throws TruncationError with a hint when some root order is only bounded below.
void require_unambiguous(const NewtonPolygon& np);

}  // namespace lctkit
