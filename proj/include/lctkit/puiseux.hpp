#pragma once

#include <optional>
#include <vector>

#include "lctkit/bigfloat.hpp"
#include "lctkit/orderval.hpp"
#include "lctkit/series.hpp"
#include "lctkit/upoly.hpp"

namespace lctkit {

struct PuiseuxTerm {
  Rational exponent;
  BigComplex coeff;
};

// One step of the Newton-Puiseux tree: leaving node `node` along branch `branch` at exponent `gamma`.
struct PuiseuxStep {
  int node = 0;
  int branch = 0;
  Rational gamma;
};

// Roots that stopped together at one node.
struct PuiseuxLeaf {
  int node = -1;   // -1 for a root isolated by its last step
  int group = -1;
  OrderVal relative = OrderVal::infinite();  // ord(alpha - listed terms)
  OrderVal internal = OrderVal::infinite();  // ord(alpha - beta) for two roots of the same group
};

struct PuiseuxRoot {
  std::vector<PuiseuxTerm> terms;  // exact exponents, strictly increasing
  std::vector<PuiseuxStep> path;
  PuiseuxLeaf leaf;
  // Lower bound for ord(alpha - sum of terms).
  const OrderVal& remainder() const { return leaf.relative; }
};

struct PuiseuxRootSet {
  Rational depth;
  long precision = 0;
  std::vector<PuiseuxRoot> roots;

  // ord(alpha_a - alpha_b) from the expansion tree.
  OrderVal difference_order(std::size_t a, std::size_t b) const;
};

enum class ExpansionMode {
  Separate,  // stop once a root is isolated from all others
  Full,      // expand every root up to the requested depth
};

// Single attempt at a fixed precision. Throws PrecisionError on numeric inconsistency.
PuiseuxRootSet puiseux_roots(const UPoly<PSeries>& h, const Rational& depth, ExpansionMode mode, long precision);

// Retries with doubled precision. Defaults to the configured precision when bits <= 0.
PuiseuxRootSet puiseux_roots_adaptive(const UPoly<PSeries>& h, const Rational& depth, ExpansionMode mode,
                                      long bits = 0);

// Full expansion to `depth`; throws TruncationError when the data cannot support it.
PuiseuxRootSet puiseux_expand(const UPoly<PSeries>& h, const Rational& depth);

// ord(alpha - w) for an exact or truncated series w, comparing coefficients numerically.
OrderVal contact_order(const PuiseuxRoot& root, const PSeries& w, long precision);
// ord(alpha - beta) for roots of different polynomials.
OrderVal contact_order(const PuiseuxRoot& a, const PuiseuxRoot& b, long precision);

}  // namespace lctkit
