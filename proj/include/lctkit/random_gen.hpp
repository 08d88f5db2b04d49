#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lctkit/rational.hpp"
#include "lctkit/series.hpp"
#include "lctkit/upoly.hpp"

namespace lctkit {

// Deterministic generator; the same seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(long numerator, long denominator) { return uniform(1, denominator) <= numerator; }
  // Nonzero integer in [-bound, bound].
  long nonzero(long bound);
  // Rational strictly above lo and at most hi with denominator at most max_den.
  Rational rational_in(const Rational& lo, const Rational& hi, long max_den);

 private:
  std::mt19937_64 engine_;
};

// Independent seed for trial `index` of a run with `master` seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// Exact series in `var` with up to `max_terms` integer exponents in [min_exp, max_exp].
PSeries random_series(Rng& rng, const std::string& var, int min_exp, int max_exp, int max_terms, long coeff_bound = 3);

// Monic h of degree d over exact series of positive order; some coefficients may vanish.
UPoly<PSeries> random_weierstrass(Rng& rng, int d, const std::string& var = "t", int max_exp = 8);

// prod (y - u_i) with u_i exact series of positive integer order.
UPoly<PSeries> product_of_linear(const std::vector<PSeries>& u);
std::vector<PSeries> random_integral_roots(Rng& rng, int d, const std::string& var = "t");

}  // namespace lctkit
