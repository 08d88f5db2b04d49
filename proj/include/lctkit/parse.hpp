#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lctkit/mpoly.hpp"
#include "lctkit/series.hpp"
#include "lctkit/upoly.hpp"

namespace lctkit {

// Grammar: sums of products of rationals, variables, parenthesised sums and powers. Exponents are
// integers or parenthesised rationals like t^(3/2); fractional exponents only on the series variable.
// A term O(t^k) caps the truncation at k. Errors are ParseError with a column number.

// Single-variable series. `trunc` applies when the text has no O-term smaller than it.
PSeries parse_series(std::string_view text, const std::optional<Rational>& trunc);

// Polynomial with rational coefficients in any variables (integer exponents).
MPoly parse_mpoly(std::string_view text);

// Monic polynomial in `main_var` whose coefficients are series in one other variable.
UPoly<PSeries> parse_upoly(std::string_view text, const std::optional<Rational>& trunc,
                           const std::string& main_var = "y");

}  // namespace lctkit
