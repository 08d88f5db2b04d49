#include "lctkit/config.hpp"

#include <cstdlib>
#include <string>

#include "lctkit/errors.hpp"

namespace lctkit {

long default_precision() {
  const char* env = std::getenv("LCTKIT_PRECISION");
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > (1L << 20))
    throw DomainError("LCTKIT_PRECISION must be an integer in [64, 1048576]");
  return bits;
}

std::optional<Rational> default_truncation() {
  const char* env = std::getenv("LCTKIT_TRUNC");
  if (env == nullptr || *env == '\0') return Rational(64);
  std::string text(env);
  if (text == "inf") return std::nullopt;
  Rational t = parse_rational(text);
  if (t <= 0) throw DomainError("LCTKIT_TRUNC must be positive");
  return t;
}

const SymbolicBudget& symbolic_budget() {
  static const SymbolicBudget budget{};
  return budget;
}

}  // namespace lctkit
