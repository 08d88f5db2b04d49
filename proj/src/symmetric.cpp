#include "lctkit/symmetric.hpp"

#include <algorithm>
#include <functional>

#include "lctkit/errors.hpp"

namespace lctkit {

std::vector<std::string> e_vars(int d) {
  std::vector<std::string> out;
  for (int i = 1; i <= d; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

MPoly elementary_symmetric(const std::vector<std::string>& vars, int k) {
  const int n = static_cast<int>(vars.size());
  MPoly::Terms terms;
  if (k < 0 || k > n) return MPoly(vars, {});
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    terms.emplace(MPoly::Exponents(pick.begin(), pick.end()), Rational(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return MPoly(vars, std::move(terms));
}

MPoly symmetric_reduce(const MPoly& p, const std::vector<std::string>& roots) {
  const int d = static_cast<int>(roots.size());
  MPoly work = p.with_vars(roots);
  for (int i = 0; i + 1 < d; ++i) {
    std::vector<std::string> swapped = roots;
    std::swap(swapped[i], swapped[i + 1]);
    if (!(MPoly(swapped, work.terms()) == work))
      throw DomainError("symmetric_reduce: input is not symmetric in the root variables");
  }
  std::vector<MPoly> e;
  for (int k = 1; k <= d; ++k) e.push_back(elementary_symmetric(roots, k));
  std::vector<std::vector<MPoly>> powers(d);
  auto power = [&](int k, int n) -> const MPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(MPoly::constant(1, roots));
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * e[k]);
    return cache[n];
  };

  auto names = e_vars(d);
  MPoly::Terms result;
  while (!work.is_zero()) {
    const auto& [lead, coeff] = *work.terms().rbegin();
    MPoly::Exponents mu(d);
    for (int k = 0; k < d; ++k) mu[k] = lead[k] - (k + 1 < d ? lead[k + 1] : 0);
    Rational c = coeff;
    MPoly product = MPoly::constant(c, roots);
    for (int k = 0; k < d; ++k)
      if (mu[k] > 0) product = product * power(k, mu[k]);
    result.emplace(mu, c);
    work = work - product;
  }
  return MPoly(names, std::move(result));
}

MPoly elementary_to_coefficients(const MPoly& p, int d) {
  auto ev = e_vars(d);
  auto zv = z_vars(d);
  std::map<std::string, MPoly> values;
  for (int i = 0; i < d; ++i)
    values.emplace(ev[i], MPoly::variable(zv, i).scaled(i % 2 == 0 ? Rational(-1) : Rational(1)));
  return p.substitute(values);
}

}  // namespace lctkit
