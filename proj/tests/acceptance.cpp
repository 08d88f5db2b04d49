// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "lctkit/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::string suite;
  long trials;
  long expected_cases;  // 0: not fixed by the trial count
  double time_limit;    // seconds, 0 for none
};

constexpr std::uint64_t kSeed = 20240917;

}  // namespace

int main() {
  using lctkit::run_suite;
  const unsigned hw = std::thread::hardware_concurrency();
  const int jobs = hw == 0 ? 2 : static_cast<int>(std::min(hw, 8u));

  // binomial: 4 degrees x 9 exponents x 40 values of c
  // degree3: 50 trinomials x 20 values of c
  // containment: 2 degrees x 3 values of c x 100 samples
  // integrality: y^2 - t^(2m+1) and y^2 - t^(2m) for m <= 10, then random products
  // repeated-root: 4 degrees x 4 exponents x 20 values of c
  const std::vector<Criterion> criteria = {
      {1, "binomial curves, lct_ge vs closed form", "binomial", 40, 4 * 9 * 40, 30},
      {2, "explicit degree-three test vs lct_ge vs plane oracle", "degree3", 50, 50 * 20, 60},
      {3, "root order identities on random h", "identities", 200, 200, 60},
      {4, "shifted polygon vs numeric contact orders", "shift", 100, 100, 0},
      {5, "integrality of roots and the d=2 pack", "integrality", 100, 20 + 100, 0},
      {6, "containment of the criterion ideals", "containment", 100, 2 * 3 * 100, 0},
      {7, "perturbation bound N/d", "perturbation", 100, 100, 0},
      {8, "contact-order identity", "contact", 100, 100, 0},
      {9, "repeated roots (y - x^m)^d", "repeated-root", 20, 4 * 4 * 20, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      auto rep = run_suite(c.suite, c.trials, kSeed, jobs);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ok = rep.ok() && rep.skipped == 0;
      if (!rep.failures.empty()) why = "case " + std::to_string(rep.failures.front().first) + ": " + rep.failures.front().second;
      else if (rep.skipped) why = std::to_string(rep.skipped) + " skipped";
      if (c.expected_cases && rep.cases != c.expected_cases) {
        ok = false;
        why = "ran " + std::to_string(rep.cases) + " cases, expected " + std::to_string(c.expected_cases);
      }
      if (c.time_limit > 0 && secs >= c.time_limit) {
        ok = false;
        why = "time limit " + std::to_string(c.time_limit) + " s exceeded";
      }
      std::printf("%s criterion %d: %s [%s] %ld/%ld cases passed in %.2f s%s%s\n", ok ? "PASS" : "FAIL", c.number,
                  c.title.c_str(), c.suite.c_str(), rep.passed, rep.cases, secs, why.empty() ? "" : " -- ",
                  why.c_str());
    } catch (const std::exception& e) {
      std::printf("FAIL criterion %d: %s [%s] error: %s\n", c.number, c.title.c_str(), c.suite.c_str(), e.what());
    }
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
