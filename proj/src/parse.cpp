#include "lctkit/parse.hpp"

#include <cctype>
#include <memory>
#include <set>
#include <vector>

#include "lctkit/errors.hpp"

namespace lctkit {

namespace {

[[noreturn]] void fail(std::size_t pos, const std::string& msg) {
  throw ParseError("column " + std::to_string(pos + 1) + ": " + msg);
}

struct Node {
  enum class Kind { Number, Variable, Sum, Product, Power, BigO } kind;
  std::size_t pos = 0;
  Rational number;
  std::string name;
  std::vector<std::pair<int, std::unique_ptr<Node>>> children;  // (sign, child) for sums
  Rational exponent;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    skip();
    if (pos_ >= s_.size()) fail(pos_, "empty expression");
    NodePtr n = sum();
    skip();
    if (pos_ < s_.size()) fail(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return n;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_, "expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational rational_literal(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    std::string text;
    if (allow_sign && peek('-')) {
      ++pos_;
      text = "-";
    }
    text += digits();
    if (peek('/')) {
      ++pos_;
      text += "/" + digits();
    }
    try {
      return parse_rational(text);
    } catch (const ParseError& e) {
      fail(start, e.what());
    }
  }

  NodePtr sum() {
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::Sum;
    node->pos = pos_;
    int sign = 1;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    node->children.emplace_back(sign, product());
    while (true) {
      if (peek('+')) {
        ++pos_;
        node->children.emplace_back(1, product());
      } else if (peek('-')) {
        ++pos_;
        node->children.emplace_back(-1, product());
      } else {
        break;
      }
    }
    return node;
  }

  NodePtr product() {
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::Product;
    node->pos = pos_;
    node->children.emplace_back(1, power());
    while (peek('*')) {
      ++pos_;
      node->children.emplace_back(1, power());
    }
    skip();
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
      fail(pos_, "expected an operator");
    return node;
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!peek('^')) return base;
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::Power;
    node->pos = pos_;
    ++pos_;
    if (peek('(')) {
      ++pos_;
      node->exponent = rational_literal(true);
      expect(')');
    } else {
      node->exponent = rational_literal(false);
      if (!is_integer(node->exponent)) fail(node->pos, "fractional exponents need parentheses");
    }
    node->children.emplace_back(1, std::move(base));
    return node;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail(pos_, "unexpected end of input");
    auto node = std::make_unique<Node>();
    node->pos = pos_;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      node->kind = Node::Kind::Number;
      node->number = rational_literal(false);
      return node;
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      node->name = std::string(s_.substr(start, pos_ - start));
      if (node->name == "O" && peek('(')) {
        ++pos_;
        node->kind = Node::Kind::BigO;
        node->children.emplace_back(1, sum());
        expect(')');
        return node;
      }
      node->kind = Node::Kind::Variable;
      return node;
    }
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect_vars(const Node& n, std::set<std::string>& out) {
  if (n.kind == Node::Kind::Variable) out.insert(n.name);
  for (const auto& [sign, child] : n.children) collect_vars(*child, out);
}

// --- polynomials ---

MPoly eval_mpoly(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Number:
      return MPoly::constant(n.number);
    case Node::Kind::Variable:
      return MPoly::variable(n.name);
    case Node::Kind::Sum: {
      MPoly acc;
      for (const auto& [sign, child] : n.children) acc = sign > 0 ? acc + eval_mpoly(*child) : acc - eval_mpoly(*child);
      return acc;
    }
    case Node::Kind::Product: {
      MPoly acc = MPoly::constant(1);
      for (const auto& [sign, child] : n.children) acc = acc * eval_mpoly(*child);
      return acc;
    }
    case Node::Kind::Power:
      if (!is_integer(n.exponent) || n.exponent < 0) fail(n.pos, "polynomial exponents must be nonnegative integers");
      return eval_mpoly(*n.children.front().second).pow(static_cast<unsigned>(n.exponent.get_num().get_ui()));
    case Node::Kind::BigO:
      fail(n.pos, "O-terms are only allowed in series");
  }
  fail(n.pos, "bad expression");
}

// --- series and polynomials over series ---

// Dense polynomial in the main variable (empty name: none) with series coefficients.
struct SeriesPoly {
  std::vector<PSeries> c;  // c[j] multiplies main^j
};

SeriesPoly sp_constant(const PSeries& s) { return SeriesPoly{{s}}; }

SeriesPoly sp_add(const SeriesPoly& a, const SeriesPoly& b, int sign) {
  SeriesPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t j = 0; j < out.c.size(); ++j) {
    PSeries x = j < a.c.size() ? a.c[j] : PSeries();
    PSeries y = j < b.c.size() ? b.c[j] : PSeries();
    out.c[j] = sign > 0 ? x + y : x - y;
  }
  return out;
}

SeriesPoly sp_mul(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, PSeries());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
  return out;
}

struct SeriesContext {
  std::string main_var;    // empty for plain series
  std::string series_var;  // may be empty for constants
  std::optional<Rational> o_trunc;
};

SeriesPoly eval_series(const Node& n, SeriesContext& ctx, bool top_level_term);

PSeries monomial_of(const Node& base, const Rational& e, const SeriesContext& ctx) {
  if (base.kind != Node::Kind::Variable || base.name != ctx.series_var)
    fail(base.pos, "fractional exponents apply only to the series variable");
  if (e < 0) fail(base.pos, "negative exponent");
  return PSeries::monomial(ctx.series_var, 1, e);
}

SeriesPoly eval_series(const Node& n, SeriesContext& ctx, bool top_level_term) {
  switch (n.kind) {
    case Node::Kind::Number:
      return sp_constant(PSeries::constant(n.number));
    case Node::Kind::Variable:
      if (!ctx.main_var.empty() && n.name == ctx.main_var) return SeriesPoly{{PSeries(), PSeries::constant(1)}};
      return sp_constant(PSeries::monomial(n.name, 1, 1));
    case Node::Kind::Sum: {
      SeriesPoly acc = sp_constant(PSeries());
      for (const auto& [sign, child] : n.children) {
        const bool term = top_level_term && child->kind == Node::Kind::Product && child->children.size() == 1 &&
                          child->children.front().second->kind == Node::Kind::BigO;
        if (term) {
          eval_series(*child->children.front().second, ctx, true);
          continue;
        }
        acc = sp_add(acc, eval_series(*child, ctx, false), sign);
      }
      return acc;
    }
    case Node::Kind::Product: {
      SeriesPoly acc = sp_constant(PSeries::constant(1));
      for (const auto& [sign, child] : n.children) acc = sp_mul(acc, eval_series(*child, ctx, false));
      return acc;
    }
    case Node::Kind::Power: {
      const Node& base = *n.children.front().second;
      if (!is_integer(n.exponent) || n.exponent < 0) return sp_constant(monomial_of(base, n.exponent, ctx));
      if (!n.exponent.get_num().fits_uint_p()) fail(n.pos, "exponent too large");
      unsigned e = static_cast<unsigned>(n.exponent.get_num().get_ui());
      SeriesPoly b = eval_series(base, ctx, false);
      SeriesPoly acc = sp_constant(PSeries::constant(1));
      for (unsigned i = 0; i < e; ++i) acc = sp_mul(acc, b);
      return acc;
    }
    case Node::Kind::BigO: {
      if (!top_level_term) fail(n.pos, "O-term must be a top-level summand");
      const Node& inner = *n.children.front().second;
      Rational e;
      if (inner.kind == Node::Kind::Sum && inner.children.size() == 1 && inner.children[0].first > 0) {
        const Node& prod = *inner.children[0].second;
        if (prod.children.size() == 1) {
          const Node& f = *prod.children[0].second;
          if (f.kind == Node::Kind::Variable && f.name == ctx.series_var) {
            e = 1;
          } else if (f.kind == Node::Kind::Power && f.children[0].second->kind == Node::Kind::Variable &&
                     f.children[0].second->name == ctx.series_var && f.exponent >= 0) {
            e = f.exponent;
          } else {
            fail(n.pos, "O-term must be O(" + ctx.series_var + "^k)");
          }
        } else {
          fail(n.pos, "O-term must be O(" + ctx.series_var + "^k)");
        }
      } else {
        fail(n.pos, "O-term must be O(" + ctx.series_var + "^k)");
      }
      if (!ctx.o_trunc || e < *ctx.o_trunc) ctx.o_trunc = e;
      return sp_constant(PSeries());
    }
  }
  fail(n.pos, "bad expression");
}

std::optional<Rational> effective_trunc(const std::optional<Rational>& given, const std::optional<Rational>& from_o) {
  if (!from_o) return given;
  if (!given) return from_o;
  return std::min(*given, *from_o);
}

}  // namespace

PSeries parse_series(std::string_view text, const std::optional<Rational>& trunc) {
  NodePtr root = Parser(text).parse();
  std::set<std::string> vars;
  collect_vars(*root, vars);
  vars.erase("O");
  if (vars.size() > 1) fail(0, "series must involve a single variable");
  SeriesContext ctx;
  if (!vars.empty()) ctx.series_var = *vars.begin();
  SeriesPoly p = eval_series(*root, ctx, true);
  PSeries s = p.c.front();
  auto t = effective_trunc(trunc, ctx.o_trunc);
  if (t && *t <= 0) fail(0, "truncation must be positive");
  if (!ctx.series_var.empty() && s.var().empty()) s = s.with_var(ctx.series_var);
  return s.truncated(t);
}

MPoly parse_mpoly(std::string_view text) { return eval_mpoly(*Parser(text).parse()); }

UPoly<PSeries> parse_upoly(std::string_view text, const std::optional<Rational>& trunc, const std::string& main_var) {
  NodePtr root = Parser(text).parse();
  std::set<std::string> vars;
  collect_vars(*root, vars);
  vars.erase("O");
  vars.erase(main_var);
  if (vars.size() > 1) fail(0, "coefficients must be series in a single variable");
  SeriesContext ctx;
  ctx.main_var = main_var;
  ctx.series_var = vars.empty() ? std::string("x") : *vars.begin();
  SeriesPoly p = eval_series(*root, ctx, true);
  while (p.c.size() > 1 && p.c.back().is_exact_zero()) p.c.pop_back();
  if (p.c.size() < 2) fail(0, "polynomial must have positive degree in " + main_var);
  if (!ring_is_one(p.c.back())) fail(0, "polynomial must be monic in " + main_var);
  auto t = effective_trunc(trunc, ctx.o_trunc);
  if (t && *t <= 0) fail(0, "truncation must be positive");
  const int d = static_cast<int>(p.c.size()) - 1;
  std::vector<PSeries> a;
  for (int i = 1; i <= d; ++i) {
    PSeries c = p.c[d - i];
    if (c.var().empty()) c = c.with_var(ctx.series_var);
    a.push_back(c.truncated(t));
  }
  return UPoly<PSeries>(a);
}

}  // namespace lctkit
