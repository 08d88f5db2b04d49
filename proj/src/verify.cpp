#include "lctkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <thread>

#include "lctkit/criterion.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/ideals.hpp"
#include "lctkit/newton_polygon.hpp"
#include "lctkit/oracle.hpp"
#include "lctkit/random_gen.hpp"
#include "lctkit/rootdata.hpp"

namespace lctkit {

namespace {

using Case = std::function<CaseOutcome()>;

std::string join(const std::vector<OrderVal>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

std::string show(const UPoly<PSeries>& h) {
  std::string s = "y^" + std::to_string(h.degree());
  for (int i = 1; i <= h.degree(); ++i) s += " + (" + h.a(i).str() + ")y^" + std::to_string(h.degree() - i);
  return s;
}

PSeries t_power(const std::string& var, long e, long c = 1) { return PSeries::monomial(var, c, e); }

// c samples in (lo, hi]: the threshold and its neighbours when they fall inside, then random ones.
std::vector<Rational> sample_c(Rng& rng, const Rational& lo, const Rational& hi, const Rational& threshold, long count) {
  std::vector<Rational> out;
  auto add = [&](const Rational& c) {
    if (c > lo && c <= hi && std::find(out.begin(), out.end(), c) == out.end() && static_cast<long>(out.size()) < count)
      out.push_back(c);
  };
  add(threshold);
  add(threshold + Rational(1, 997));
  add(threshold - Rational(1, 997));
  add(hi);
  for (int guard = 0; static_cast<long>(out.size()) < count && guard < 100 * count; ++guard) add(rng.rational_in(lo, hi, 60));
  return out;
}

// --- identities: least root order, partial sums, largest root order, difference table ---

std::vector<Case> identities_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  for (long i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, i));
    const int d = static_cast<int>(rng.uniform(1, 4));
    UPoly<PSeries> h = random_weierstrass(rng, d);
    cases.push_back([h, d]() -> CaseOutcome {
      std::vector<OrderVal> orders = newton_polygon(h).root_orders();
      OrderVal least = qi_ord_at(build_b(d), h.coeffs());
      if (!certainly_equal(orders.front(), least))
        return CaseOutcome::fail(show(h) + ": least root " + orders.front().str() + " vs ideal " + least.str());
      for (int k = 1; k <= d; ++k) {
        OrderVal slopes = partial_sums_from_slopes(h, k);
        OrderVal formula = partial_sums_from_formula(h, k);
        if (!certainly_equal(slopes, formula))
          return CaseOutcome::fail(show(h) + ": partial sum k=" + std::to_string(k) + " " + slopes.str() + " vs " +
                                   formula.str());
        OrderVal bbar = qi_ord_at(build_bbar_k(d, k), h.coeffs());
        if (!certainly_equal(slopes, bbar))
          return CaseOutcome::fail(show(h) + ": monomial ideal k=" + std::to_string(k) + " " + bbar.str());
        OrderVal compound = newton_polygon(compound_poly(h, k)).root_orders().front();
        if (!certainly_equal(slopes, compound))
          return CaseOutcome::fail(show(h) + ": product polynomial k=" + std::to_string(k) + " " + compound.str());
      }
      OrderVal top = max_of(orders);
      OrderVal formula_top = max_root_order_from_formula(h);
      if (!certainly_equal(top, formula_top))
        return CaseOutcome::fail(show(h) + ": largest root " + top.str() + " vs " + formula_top.str());
      if (d >= 2) {
        DiffOrderTable table = diff_orders(h);
        auto numeric = table.off_diagonal();
        auto exact = difference_orders_exact(h);
        if (numeric != exact)
          return CaseOutcome::fail(show(h) + ": differences " + join(numeric) + " vs " + join(exact));
      }
      return CaseOutcome::pass();
    });
  }
  return cases;
}

// A series w: random, or close to one of the given roots.
PSeries sample_w(Rng& rng, const std::vector<PSeries>& roots) {
  if (!roots.empty() && rng.chance(2, 3)) {
    PSeries base = roots[rng.uniform(0, static_cast<long>(roots.size()) - 1)];
    PSeries::Terms kept;
    const long cut = rng.uniform(1, 7);
    for (const auto& [e, c] : base.terms())
      if (e < cut) kept[e] = c;
    PSeries w = PSeries::exact("t", kept);
    if (rng.chance(2, 3)) w = w + t_power("t", rng.uniform(1, 7), rng.nonzero(2));
    if (w.is_exact_zero()) w = t_power("t", rng.uniform(1, 4));
    return w;
  }
  PSeries w = random_series(rng, "t", 1, 6, 3);
  if (w.is_exact_zero()) w = t_power("t", rng.uniform(1, 3), rng.nonzero(3));
  return w;
}

struct ShiftSample {
  UPoly<PSeries> h;
  PSeries w;
};

ShiftSample shift_sample(Rng& rng) {
  const int d = static_cast<int>(rng.uniform(1, 4));
  if (rng.chance(1, 2)) {
    auto roots = random_integral_roots(rng, d);
    return {product_of_linear(roots), sample_w(rng, roots)};
  }
  return {random_weierstrass(rng, d), sample_w(rng, {})};
}

std::vector<Case> shift_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  for (long i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, i));
    ShiftSample s = shift_sample(rng);
    cases.push_back([s]() -> CaseOutcome {
      std::vector<OrderVal> exact = newton_polygon(taylor_shift(s.h, s.w)).root_orders();
      Rational depth = 1;
      for (const auto& v : exact)
        if (v.is_finite()) depth = std::max(depth, Rational(v.value() + 1));
      PuiseuxRootSet set = puiseux_roots_adaptive(s.h, depth, ExpansionMode::Full);
      std::vector<OrderVal> numeric;
      for (const auto& r : set.roots) numeric.push_back(contact_order(r, s.w, set.precision));
      std::sort(numeric.begin(), numeric.end(), sort_less);
      for (std::size_t k = 0; k < exact.size(); ++k) {
        const OrderVal& e = exact[k];
        const OrderVal& n = numeric[k];
        const bool ok = e.is_infinite() ? (n.is_infinite() || (n.is_at_least() && n.value() >= depth))
                                        : certainly_equal(e, n);
        if (!ok)
          return CaseOutcome::fail(show(s.h) + " w=" + s.w.str() + ": shifted " + join(exact) + " vs numeric " +
                                   join(numeric));
      }
      return CaseOutcome::pass();
    });
  }
  return cases;
}

std::vector<Case> integrality_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  auto pack = std::make_shared<IntegralityPack>(build_integrality_pack(2));
  auto check = [pack](UPoly<PSeries> h, bool expect_integral) -> Case {
    return [h, expect_integral, pack]() -> CaseOutcome {
      IntegralityReport rep = integrality_test(h);
      if (rep.integral != expect_integral)
        return CaseOutcome::fail(show(h) + ": integrality " + (rep.integral ? "yes" : "no") + " " + rep.violation);
      if (h.degree() == 2) {
        Verdict v = integrality_pack_test(*pack, h.coeffs());
        if (v != (expect_integral ? Verdict::Yes : Verdict::No))
          return CaseOutcome::fail(show(h) + ": divisibility test says " + to_string(v));
      }
      return CaseOutcome::pass();
    };
  };
  for (long m = 1; m <= 10; ++m) {
    cases.push_back(check(UPoly<PSeries>({PSeries(), -t_power("t", 2 * m + 1)}), false));
    cases.push_back(check(UPoly<PSeries>({PSeries(), -t_power("t", 2 * m)}), true));
  }
  for (long i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, i));
    const int d = static_cast<int>(rng.uniform(2, 4));
    cases.push_back(check(product_of_linear(random_integral_roots(rng, d)), true));
  }
  return cases;
}

std::vector<PSeries> random_coefficients(Rng& rng, int d) {
  std::vector<PSeries> a;
  for (int i = 1; i <= d; ++i) a.push_back(random_series(rng, "x", 1, 6, 2));
  return a;
}

std::vector<Case> containment_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  const std::vector<std::pair<int, Rational>> settings{{2, Rational(3, 5)}, {2, Rational(3, 4)}, {2, Rational(1)},
                                                       {3, Rational(2, 5)}, {3, Rational(3, 5)}, {3, Rational(5, 6)}};
  long index = 0;
  for (const auto& [d, c] : settings) {
    CriterionContext ctx = choose_p(d, c);
    auto ideals = std::make_shared<CriterionIdeals>(build_p_plus_minus(ctx));
    for (long i = 0; i < trials; ++i) {
      Rng rng(trial_seed(seed, index++));
      std::vector<PSeries> a = random_coefficients(rng, d);
      cases.push_back([ctx, ideals, a]() -> CaseOutcome {
        ContainmentReport rep = containment_check(ctx, a);
        if (!rep.passed) return CaseOutcome::fail("containment at c=" + to_string(ctx.c) + ": " + rep.detail);
        OrderVal V = eval_criterion_value(ctx, a);
        auto closed = eval_p_plus_minus(*ideals, a);
        if (!closed || !certainly_equal(*closed, V))
          return CaseOutcome::fail("closed form " + (closed ? closed->str() : std::string("?")) + " vs V " + V.str() +
                                   " at c=" + to_string(ctx.c));
        return CaseOutcome::pass();
      });
    }
  }
  return cases;
}

std::vector<Case> perturbation_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  for (long i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, i));
    const int d = static_cast<int>(rng.uniform(1, 4));
    UPoly<PSeries> f = rng.chance(1, 2) ? product_of_linear(random_integral_roots(rng, d)) : random_weierstrass(rng, d);
    const long N = rng.uniform(d, 3 * d + 3);
    std::vector<PSeries> b = f.coeffs();
    const long forced = rng.uniform(1, d);
    for (int k = 1; k <= d; ++k) {
      if (k != forced && rng.chance(1, 2)) continue;
      b[k - 1] = b[k - 1] + random_series(rng, "t", static_cast<int>(N), static_cast<int>(N) + 4, 2) +
                 t_power("t", N + rng.uniform(0, 3), rng.nonzero(3));
    }
    UPoly<PSeries> g(b);
    cases.push_back([f, g, N]() -> CaseOutcome {
      PerturbationReport rep = perturbation_check(f, g, Rational(N));
      if (!rep.passed) return CaseOutcome::fail(show(f) + " N=" + std::to_string(N) + ": " + rep.detail);
      return CaseOutcome::pass();
    });
  }
  return cases;
}

std::vector<Case> contact_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  for (long i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, i));
    ShiftSample s = shift_sample(rng);
    // Keep h(w) != 0 so that the identity is about finite orders.
    while (evaluate_at(s.h, s.w).is_exact_zero()) s.w = s.w + t_power("t", rng.uniform(2, 8));
    cases.push_back([s]() -> CaseOutcome {
      ContactReport rep = contact_order_identity_check(s.h, s.w);
      if (!rep.passed) return CaseOutcome::fail(show(s.h) + " w=" + s.w.str() + ": " + rep.detail);
      return CaseOutcome::pass();
    });
  }
  return cases;
}

std::vector<Case> binomial_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  long index = 0;
  for (int d = 2; d <= 5; ++d)
    for (int k = 2; k <= 10; ++k) {
      Rng rng(trial_seed(seed, index++));
      const Rational threshold = lct_binomial_curve(d, k);
      std::vector<PSeries> a(d);
      a[d - 1] = t_power("x", k);
      for (const auto& c : sample_c(rng, Rational(1, d), 1, threshold, trials)) {
        cases.push_back([d, k, c, a, threshold]() -> CaseOutcome {
          LctDecision dec = lct_ge(d, c, a);
          Verdict want = c <= threshold ? Verdict::Yes : Verdict::No;
          if (dec.verdict != want)
            return CaseOutcome::fail("y^" + std::to_string(d) + "+x^" + std::to_string(k) + " c=" + to_string(c) +
                                     ": " + to_string(dec.verdict) + " (V=" + (dec.V ? dec.V->str() : "-") + ")");
          return CaseOutcome::pass();
        });
      }
    }
  return cases;
}

std::vector<Case> degree3_cases(long trials, std::uint64_t seed) {
  std::vector<std::pair<int, int>> pairs;
  for (int A = 1; A <= 8; ++A)
    for (int B = 1; B <= 8; ++B) pairs.push_back({A, B});
  Rng rng(seed);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.uniform(0, static_cast<long>(i) - 1)]);
  std::vector<Case> cases;
  long accepted = 0;
  for (const auto& [A, B] : pairs) {
    if (accepted >= trials) break;
    MPoly f = MPoly::monomial({"x", "y"}, {0, 3}) + MPoly::monomial({"x", "y"}, {A, 1}) +
              MPoly::monomial({"x", "y"}, {B, 0});
    Rational lct;
    try {
      lct = lct_plane_nondegenerate(f).lct;
    } catch (const NotApplicableError&) {
      continue;
    }
    ++accepted;
    Rng crng(trial_seed(seed, static_cast<std::uint64_t>(A * 16 + B)));
    const PSeries a = t_power("x", A), b = t_power("x", B);
    for (const auto& c : sample_c(crng, Rational(1, 3), 1, lct, 20)) {
      cases.push_back([A = A, B = B, a, b, c, lct]() -> CaseOutcome {
        Verdict want = c <= lct ? Verdict::Yes : Verdict::No;
        Verdict explicit_form = degree3_test(a, b, c);
        Verdict general = lct_ge(3, c, {PSeries(), a, b}).verdict;
        if (explicit_form != want || general != want)
          return CaseOutcome::fail("y^3+x^" + std::to_string(A) + "y+x^" + std::to_string(B) + " c=" + to_string(c) +
                                   ": explicit " + to_string(explicit_form) + ", general " + to_string(general) +
                                   ", oracle lct " + to_string(lct));
        return CaseOutcome::pass();
      });
    }
  }
  return cases;
}

std::vector<Case> repeated_cases(long trials, std::uint64_t seed) {
  std::vector<Case> cases;
  long index = 0;
  for (int d = 2; d <= 5; ++d)
    for (int m = 1; m <= 4; ++m) {
      Rng rng(trial_seed(seed, index++));
      DensePoly<PSeries> p{PSeries::constant(1)};
      for (int i = 0; i < d; ++i) p = dense_mul(p, DensePoly<PSeries>{-t_power("x", m), PSeries::constant(1)});
      const std::vector<PSeries> a = UPoly<PSeries>::from_dense(p).coeffs();
      for (const auto& c : sample_c(rng, Rational(0), 1, Rational(1, d), trials)) {
        cases.push_back([d, m, c, a]() -> CaseOutcome {
          LctDecision dec = lct_ge(d, c, a);
          Verdict want = c <= Rational(1, d) ? Verdict::Yes : Verdict::No;
          if (dec.verdict != want || (c > Rational(1, d) && !(dec.V && dec.V->is_infinite())))
            return CaseOutcome::fail("(y-x^" + std::to_string(m) + ")^" + std::to_string(d) + " c=" + to_string(c) +
                                     ": " + to_string(dec.verdict) + " V=" + (dec.V ? dec.V->str() : "-"));
          return CaseOutcome::pass();
        });
      }
    }
  return cases;
}

std::vector<Case> oracle_cases(long, std::uint64_t) {
  std::vector<Case> cases;
  for (int d = 1; d <= 12; ++d)
    for (int k = 1; k <= 12; ++k)
      cases.push_back([d, k]() -> CaseOutcome {
        Rational closed = lct_binomial_curve(d, k);
        MPoly f = MPoly::monomial({"x", "y"}, {0, d}) + MPoly::monomial({"x", "y"}, {k, 0});
        Rational plane = lct_plane_nondegenerate(f).lct;
        Rational mono = std::min(Rational(1), lct_monomial_ideal({{k, 0}, {0, d}}, 2));
        if (closed != plane || closed != mono)
          return CaseOutcome::fail("d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " + to_string(closed) +
                                   " / " + to_string(plane) + " / " + to_string(mono));
        return CaseOutcome::pass();
      });
  return cases;
}

struct SuiteDef {
  long default_trials;
  std::vector<Case> (*build)(long, std::uint64_t);
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> suites{
      {"identities", {200, identities_cases}},   {"shift", {100, shift_cases}},
      {"integrality", {100, integrality_cases}}, {"containment", {100, containment_cases}},
      {"perturbation", {100, perturbation_cases}}, {"contact", {100, contact_cases}},
      {"binomial", {40, binomial_cases}},        {"degree3", {50, degree3_cases}},
      {"repeated-root", {20, repeated_cases}},   {"oracles", {1, oracle_cases}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, def] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

long default_trials(const std::string& suite) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw DomainError("unknown suite '" + suite + "'");
  return it->second.default_trials;
}

SuiteReport run_suite(const std::string& suite, long trials, std::uint64_t seed, int jobs) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw DomainError("unknown suite '" + suite + "'");
  if (trials < 1) throw DomainError("trials must be positive");
  std::vector<Case> cases = it->second.build(trials, seed);
  std::vector<CaseOutcome> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i]();
      } catch (const std::exception& e) {
        results[i] = CaseOutcome::fail(std::string("exception: ") + e.what());
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport rep;
  rep.name = suite;
  rep.cases = static_cast<long>(cases.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    switch (results[i].status) {
      case CaseOutcome::Status::Pass:
        ++rep.passed;
        break;
      case CaseOutcome::Status::Skip:
        ++rep.skipped;
        break;
      case CaseOutcome::Status::Fail:
        ++rep.failed;
        rep.failures.emplace_back(static_cast<long>(i), results[i].message);
        break;
    }
  }
  return rep;
}

}  // namespace lctkit
