#pragma once

#include <utility>
#include <vector>

#include "lctkit/rational.hpp"

namespace lctkit {

// Dense univariate polynomial over Q, coefficients in increasing degree, no trailing zeros.
using QPoly = std::vector<Rational>;

void qpoly_trim(QPoly& p);
int qpoly_degree(const QPoly& p);  // -1 for zero
QPoly qpoly_derivative(const QPoly& p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
// Quotient and remainder.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
QPoly qpoly_gcd(QPoly a, QPoly b);  // monic
QPoly qpoly_monic(const QPoly& p);

// Squarefree decomposition p = c * prod f_i^i; returns (f_i, i) with nonconstant monic f_i.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

}  // namespace lctkit
