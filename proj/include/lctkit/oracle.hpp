#pragma once

#include <vector>

#include "lctkit/mpoly.hpp"
#include "lctkit/rational.hpp"

namespace lctkit {

// lct of the monomial ideal generated by x^v, v in `exponents` (Newton polyhedron formula).
Rational lct_monomial_ideal(const std::vector<std::vector<int>>& exponents, int n);

struct PlaneOracleResult {
  Rational lct;
  int compact_faces = 0;  // all checked squarefree
};

// lct of a Newton-nondegenerate curve f(x, y) with f(0) = 0. Throws NotApplicableError when
// some compact face polynomial has a repeated factor.
PlaneOracleResult lct_plane_nondegenerate(const MPoly& f);

// min(1, 1/d + 1/k) for y^d + x^k.
Rational lct_binomial_curve(int d, int k);

}  // namespace lctkit
