#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lctkit/mpoly.hpp"
#include "lctkit/orderval.hpp"
#include "lctkit/qideal.hpp"
#include "lctkit/rootdata.hpp"
#include "lctkit/series.hpp"

namespace lctkit {

// Data fixed by d and c: 1/(d-p+1) < c <= 1/(d-p), c1 = 1-(d-p)c, c2 = (d-p+1)c-1.
struct CriterionContext {
  int d = 0;
  Rational c;
  int p = 0;
  Rational c1, c2;
};

// Requires d >= 2 and 1/d < c <= 1.
CriterionContext choose_p(int d, const Rational& c);

struct CriterionIdeals {
  PolyIdeal p_plus = PolyIdeal::unit();
  PolyIdeal p_minus = PolyIdeal::unit();
  CriterionContext context;
};

// Closed forms for d = 2 and d = 3 (any linear coefficient, through the depressed cubic).
CriterionIdeals build_p_plus_minus(const CriterionContext& ctx);

// ord p_plus(a) - ord p_minus(a) with inf - inf = inf; nullopt when undetermined.
std::optional<OrderVal> eval_p_plus_minus(const CriterionIdeals& ideals, const std::vector<PSeries>& a);

// Sum of the k smallest entries in row i of the table (the row ends with the infinite diagonal).
OrderVal row_partial_sum(const DiffOrderTable& table, int i, int k);

// Per-center values v_i = c1 * S_{p-1}(i) + c2 * S_p(i).
std::vector<OrderVal> center_values(const CriterionContext& ctx, const DiffOrderTable& table);

// V = max_i v_i.
OrderVal eval_criterion_value(const CriterionContext& ctx, const std::vector<PSeries>& a,
                          std::optional<Rational> depth = std::nullopt);

struct LctDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<CriterionContext> context;
  std::optional<OrderVal> V;
  std::string reason;  // short-circuit or truncation hint
};

// Decides lct(y^d + sum a_i y^{d-i}) >= c; coefficients must have positive order.
LctDecision lct_ge(int d, const Rational& c, const std::vector<PSeries>& a);

// y^3 + a1 y^2 + a2 y + a3 -> (a, b) of the depressed cubic y^3 + a y + b.
std::pair<PSeries, PSeries> depress_cubic(const PSeries& a1, const PSeries& a2, const PSeries& a3);
std::pair<MPoly, MPoly> depress_cubic(const MPoly& a1, const MPoly& a2, const MPoly& a3);

// The explicit degree-three pair for y^3 + a y + b, 1/3 < c <= 1.
Verdict degree3_test(const PSeries& a, const PSeries& b, const Rational& c);

struct ContainmentReport {
  bool passed = false;
  OrderVal lambda_top = OrderVal::exact(0);   // lambda_d = ord p_plus
  OrderVal lambda_next = OrderVal::exact(0);  // lambda_{d-1} = ord p_minus
  std::string detail;
};

// lambda_d >= d/(d-1) * lambda_{d-1} for the ideal attached to ctx, at one coefficient sample.
ContainmentReport containment_check(const CriterionContext& ctx, const std::vector<PSeries>& a);

// a_1 = 0 and 1/d < c <= 1/(d-1): Yes iff (cd - 1) * ord(sum_{i>=2} (a_i)^{1/i}) <= 1.
// `rest` holds a_2..a_d.
Verdict trace_free_test(int d, const Rational& c, const std::vector<PSeries>& rest);

// Integrality pack: bases are the coefficients of the difference polynomial of the generic
// polynomial; groups[k-1] lists the generators of the k-th partial-sum ideal, each a product
// of powers of the bases, all raised to 1/m.
struct IntegralityPack {
  int d = 0;
  std::vector<MPoly> bases;
  std::vector<std::vector<FactoredGen<MPoly>>> groups;
  Integer m = 1;

  std::vector<MPoly> polys() const;  // expanded generators of all groups
};

IntegralityPack build_integrality_pack(int d);

// For every k, m divides min over the k-th group of ord P(a). Yes means all roots are integral.
Verdict integrality_pack_test(const IntegralityPack& pack, const std::vector<PSeries>& a);
// m divides ord P(a) for every generator.
Verdict integrality_pack_test_all(const IntegralityPack& pack, const std::vector<PSeries>& a);

}  // namespace lctkit
