#include "lctkit/random_gen.hpp"

#include "lctkit/errors.hpp"

namespace lctkit {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the result independent of the standard library's distributions.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

long Rng::nonzero(long bound) {
  long v = uniform(1, bound);
  return chance(1, 2) ? v : -v;
}

Rational Rng::rational_in(const Rational& lo, const Rational& hi, long max_den) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    long den = uniform(1, max_den);
    Integer low = floor_rational(lo * den).get_num() + 1;
    Integer high = floor_rational(hi * den).get_num();
    if (low > high) continue;
    long span = Integer(high - low).get_si();
    Rational q(Integer(low + uniform(0, span)), Integer(den));
    q.canonicalize();
    return q;
  }
  throw DomainError("no rational with small denominator in the interval");
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 of the combined value
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PSeries random_series(Rng& rng, const std::string& var, int min_exp, int max_exp, int max_terms, long coeff_bound) {
  PSeries::Terms terms;
  const long count = rng.uniform(0, max_terms);
  for (long i = 0; i < count; ++i) terms[Rational(rng.uniform(min_exp, max_exp))] = rng.nonzero(coeff_bound);
  return PSeries::exact(var, terms);
}

UPoly<PSeries> random_weierstrass(Rng& rng, int d, const std::string& var, int max_exp) {
  std::vector<PSeries> a;
  for (int i = 1; i <= d; ++i) a.push_back(random_series(rng, var, 1, max_exp, 3));
  // Avoid y^d unless asked for by chance: keep the last coefficient nonzero most of the time.
  if (a.back().is_exact_zero() && rng.chance(3, 4)) a.back() = random_series(rng, var, 1, max_exp, 1) +
                                                                PSeries::monomial(var, rng.nonzero(3), rng.uniform(1, max_exp));
  return UPoly<PSeries>(a);
}

UPoly<PSeries> product_of_linear(const std::vector<PSeries>& u) {
  DensePoly<PSeries> p{PSeries::constant(1)};
  for (const auto& r : u) p = dense_mul(p, DensePoly<PSeries>{-r, PSeries::constant(1)});
  return UPoly<PSeries>::from_dense(p);
}

std::vector<PSeries> random_integral_roots(Rng& rng, int d, const std::string& var) {
  std::vector<PSeries> u;
  for (int i = 0; i < d; ++i) {
    PSeries s = random_series(rng, var, 1, 5, 2);
    // Occasionally repeat a root or make two roots share a prefix.
    if (i > 0 && rng.chance(1, 6)) s = u[rng.uniform(0, i - 1)];
    else if (i > 0 && rng.chance(1, 4)) s = u[rng.uniform(0, i - 1)] + PSeries::monomial(var, rng.nonzero(2), rng.uniform(2, 6));
    u.push_back(s);
  }
  return u;
}

}  // namespace lctkit
