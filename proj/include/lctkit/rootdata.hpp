#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lctkit/newton_polygon.hpp"
#include "lctkit/orderval.hpp"
#include "lctkit/puiseux.hpp"
#include "lctkit/series.hpp"
#include "lctkit/upoly.hpp"

namespace lctkit {

// Root orders with multiplicity, increasing. The least one is checked against the order of
// sum_i (z_i)^{1/i} at the coefficients.
std::vector<OrderVal> root_orders(const UPoly<PSeries>& h);

// Sum of the k smallest root orders from the polygon, and from the recursive min formula.
OrderVal partial_sums_from_slopes(const UPoly<PSeries>& h, int k);
OrderVal partial_sums_from_formula(const UPoly<PSeries>& h, int k);
// Both routes; ConsistencyError if they contradict each other.
OrderVal partial_sums(const UPoly<PSeries>& h, int k);

// Largest root order from the polygon and from ord(a_d) - ord(c(a)); cross-checked.
OrderVal max_root_order_from_formula(const UPoly<PSeries>& h);
OrderVal max_root_order(const UPoly<PSeries>& h);

// Pairwise root-difference orders.
struct DiffOrderTable {
  int degree = 0;
  std::vector<std::vector<OrderVal>> entries;  // entries[i][j] = ord(alpha_j - alpha_i), diagonal Infinite
  std::vector<std::vector<OrderVal>> sorted;   // per root: b_1 <= ... <= b_d = Infinite
  std::vector<OrderVal> certificate;           // root orders of the difference polynomial
  Rational depth;
  long precision = 0;

  std::vector<OrderVal> off_diagonal() const;  // increasing
};

// Numeric tree, certified against the difference polynomial; escalates precision on mismatch.
DiffOrderTable diff_orders(const UPoly<PSeries>& h, std::optional<Rational> depth = std::nullopt);

// Root orders of the difference polynomial (exact).
std::vector<OrderVal> difference_orders_exact(const UPoly<PSeries>& h);

struct IntegralityReport {
  bool integral = true;
  std::vector<OrderVal> root_orders;
  std::vector<OrderVal> difference_orders;
  std::string violation;  // first non-integral order, if any
};

// Integral iff every root order and every difference order lies in Z or is infinite.
IntegralityReport integrality_test(const UPoly<PSeries>& h);

struct ContactReport {
  bool passed = false;
  OrderVal value_order = OrderVal::infinite();  // ord h(w)
  std::vector<OrderVal> contact;                // ord(w - alpha_i)
  std::vector<OrderVal> bound;                  // sum_j min(ord(w - alpha_i), ord(alpha_i - alpha_j))
  std::size_t maximizer = 0;
  std::string detail;
};

// ord h(w) >= bound_i for every i, with equality at a root closest to w.
ContactReport contact_order_identity_check(const UPoly<PSeries>& h, const PSeries& w);

struct PerturbationReport {
  bool passed = false;
  Rational bound;                     // N/d
  std::vector<OrderVal> best_match;   // per root beta of g: max_i ord(beta - alpha_i)
  std::string detail;
};

// Each root of g is within order N/d of some root of f, given ord(a_i - b_i) >= N.
PerturbationReport perturbation_check(const UPoly<PSeries>& f, const UPoly<PSeries>& g, const Rational& N);

// Whether two orders are compatible; returns the more informative one or throws ConsistencyError.
OrderVal reconcile(const OrderVal& a, const OrderVal& b, const char* what);

}  // namespace lctkit
