#pragma once

#include <optional>

#include "lctkit/rational.hpp"

namespace lctkit {

// Working precision in bits for numeric Puiseux coefficients (LCTKIT_PRECISION, default 256).
long default_precision();

// Default truncation for series read from text (LCTKIT_TRUNC, default 64; "inf" means exact).
std::optional<Rational> default_truncation();

// Number of precision doublings attempted before a numeric computation gives up.
constexpr int kPrecisionRetries = 4;

// Degree caps for the symbolic constructions over generic coefficients.
struct SymbolicBudget {
  int max_degree_compound = 4;
  int max_degree_value = 3;
  int max_degree_pack = 3;
};

const SymbolicBudget& symbolic_budget();

}  // namespace lctkit
