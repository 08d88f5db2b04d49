#pragma once

#include <string>
#include <vector>

#include "lctkit/mpoly.hpp"

namespace lctkit {

// k-th elementary symmetric polynomial in the given variables.
MPoly elementary_symmetric(const std::vector<std::string>& vars, int k);

// Rewrites a symmetric polynomial in the variables `roots` as a polynomial in e1..ed
// (variable names "e1".."ed") by lex leading-term elimination.
// Throws DomainError when p is not symmetric in `roots` or uses other variables.
MPoly symmetric_reduce(const MPoly& p, const std::vector<std::string>& roots);

// Names e1..ed.
std::vector<std::string> e_vars(int d);

// Substitute e_i = (-1)^i z_i, turning a polynomial in e1..ed into one in the
// coefficients z1..zd of the monic polynomial with those roots.
MPoly elementary_to_coefficients(const MPoly& p, int d);

}  // namespace lctkit
