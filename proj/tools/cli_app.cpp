#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "lctkit/config.hpp"
#include "lctkit/criterion.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/json_io.hpp"
#include "lctkit/oracle.hpp"
#include "lctkit/parse.hpp"
#include "lctkit/rootdata.hpp"
#include "lctkit/verify.hpp"

namespace lctkit {

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kBadInput = 2;
constexpr int kUndecided = 3;

struct Options {
  std::string poly;
  std::string trunc;
  int d = 0;
  std::string c;
  std::string coeffs_file;
  std::string a, b;
  std::string monomials;
  std::vector<int> binomial;
  std::string suite;
  long trials = 0;
  std::uint64_t seed = 42;
  int jobs = 1;
};

std::optional<Rational> truncation(const Options& o) {
  if (o.trunc.empty()) return default_truncation();
  if (o.trunc == "inf") return std::nullopt;
  Rational t = parse_rational(o.trunc);
  if (t <= 0) throw ParseError("truncation must be positive");
  return t;
}

Json order_list(const std::vector<OrderVal>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, const std::string& hint = "");

// Bounded orders are still printed when the polygon is ambiguous.
int cmd_orders(const Options& o, std::ostream& out, std::ostream& err) {
  UPoly<PSeries> h = parse_upoly(o.poly, truncation(o));
  NewtonPolygon np = newton_polygon(h);
  Json j;
  j["slopes"] = slopes_to_json(np);
  j["root_orders"] = order_list(root_orders(h));
  Json sums = Json::array();
  for (int k = 1; k <= h.degree(); ++k) sums.push_back(partial_sums(h, k).str());
  j["partial_sums"] = sums;
  j["max_root_order"] = max_root_order(h).str();
  out << j.dump(2) << "\n";
  try {
    require_unambiguous(np);
  } catch (const TruncationError& e) {
    report_error(err, "truncation", e.what(), e.hint());
    return kUndecided;
  }
  return kOk;
}

int cmd_diffs(const Options& o, std::ostream& out) {
  UPoly<PSeries> h = parse_upoly(o.poly, truncation(o));
  DiffOrderTable t = diff_orders(h);
  Json j;
  j["slopes"] = slopes_to_json(newton_polygon(h));
  j["diffTable"] = diff_table_to_json(t);
  j["certificate"] = order_list(t.certificate);
  out << j.dump(2) << "\n";
  for (const auto& v : t.certificate)
    if (v.is_at_least()) return kUndecided;
  return kOk;
}

int cmd_integrality(const Options& o, std::ostream& out) {
  UPoly<PSeries> h = parse_upoly(o.poly, truncation(o));
  IntegralityReport rep = integrality_test(h);
  Json j;
  j["verdict"] = rep.integral ? "integral" : "nonintegral";
  j["root_orders"] = order_list(rep.root_orders);
  j["difference_orders"] = order_list(rep.difference_orders);
  j["violation"] = rep.violation.empty() ? Json(nullptr) : Json(rep.violation);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_criterion(const Options& o, std::ostream& out) {
  CriterionContext ctx = choose_p(o.d, parse_rational(o.c));
  Json j;
  j["d"] = ctx.d;
  j["c"] = to_string(ctx.c);
  j["p"] = ctx.p;
  j["c1"] = to_string(ctx.c1);
  j["c2"] = to_string(ctx.c2);
  if (ctx.d <= 3) {
    CriterionIdeals ideals = build_p_plus_minus(ctx);
    j["p_plus"] = qideal_to_json(ideals.p_plus);
    j["p_minus"] = qideal_to_json(ideals.p_minus);
  } else {
    j["p_plus"] = nullptr;
    j["p_minus"] = nullptr;
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_lct(const Options& o, std::ostream& out) {
  std::vector<PSeries> coeffs;
  int d = o.d;
  std::string c_text = o.c;
  if (!o.poly.empty()) {
    coeffs = parse_upoly(o.poly, truncation(o)).coeffs();
  } else if (!o.coeffs_file.empty()) {
    Json doc = read_json_file(o.coeffs_file);
    const Json* list = &doc;
    if (doc.is_object()) {
      if (!doc.contains("coeffs")) throw ParseError("missing field 'coeffs'");
      list = &doc.at("coeffs");
      if (d == 0 && doc.contains("d")) {
        if (!doc.at("d").is_number_integer()) throw ParseError("field 'd' must be an integer");
        d = doc.at("d").get<int>();
      }
      if (c_text.empty() && doc.contains("c")) {
        if (!doc.at("c").is_string()) throw ParseError("field 'c' must be a rational string");
        c_text = doc.at("c").get<std::string>();
      }
    }
    if (!list->is_array()) throw ParseError("coefficients must be an array of series");
    for (const auto& s : *list) coeffs.push_back(series_from_json(s));
  } else {
    throw ParseError("lct needs --coeffs FILE or --poly TEXT");
  }
  if (d == 0) d = static_cast<int>(coeffs.size());
  if (c_text.empty()) throw ParseError("lct needs --c");
  LctDecision dec = lct_ge(d, parse_rational(c_text), coeffs);
  out << decision_to_json(dec).dump(2) << "\n";
  return dec.verdict == Verdict::Unknown ? kUndecided : kOk;
}

int cmd_degree3(const Options& o, std::ostream& out) {
  const auto t = truncation(o);
  PSeries a = parse_series(o.a, t);
  PSeries b = parse_series(o.b, t);
  if (!a.var().empty() && !b.var().empty() && a.var() != b.var()) throw ParseError("a and b must use one variable");
  Verdict v = degree3_test(a, b, parse_rational(o.c));
  Json j;
  j["verdict"] = to_string(v);
  j["c"] = o.c;
  out << j.dump(2) << "\n";
  return v == Verdict::Unknown ? kUndecided : kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  Json j;
  if (!o.poly.empty()) {
    PlaneOracleResult r = lct_plane_nondegenerate(parse_mpoly(o.poly));
    j["method"] = "plane-nondegenerate";
    j["lct"] = to_string(r.lct);
    j["compact_faces"] = r.compact_faces;
  } else if (!o.monomials.empty()) {
    Json doc;
    try {
      doc = Json::parse(o.monomials);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid exponent JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty() || !doc[0].is_array()) throw ParseError("expected a list of exponent vectors");
    std::vector<std::vector<int>> vecs;
    for (const auto& v : doc) {
      std::vector<int> e;
      for (const auto& x : v) {
        if (!x.is_number_integer()) throw ParseError("exponents must be integers");
        e.push_back(x.get<int>());
      }
      vecs.push_back(e);
    }
    j["method"] = "monomial-ideal";
    j["lct"] = to_string(lct_monomial_ideal(vecs, static_cast<int>(vecs[0].size())));
  } else if (o.binomial.size() == 2) {
    j["method"] = "binomial";
    j["lct"] = to_string(lct_binomial_curve(o.binomial[0], o.binomial[1]));
  } else {
    throw ParseError("oracle needs --poly, --monomials or --binomial D K");
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const long trials = o.trials > 0 ? o.trials : default_trials(o.suite);
  SuiteReport rep = run_suite(o.suite, trials, o.seed, o.jobs);
  Json j;
  j["suite"] = rep.name;
  j["trials"] = trials;
  j["seed"] = o.seed;
  j["cases"] = rep.cases;
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["skipped"] = rep.skipped;
  Json failures = Json::array();
  for (const auto& [idx, msg] : rep.failures) failures.push_back({{"case", idx}, {"message", msg}});
  j["failures"] = failures;
  j["status"] = rep.ok() ? "pass" : "fail";
  out << j.dump(2) << "\n";
  return rep.ok() ? kOk : kInternal;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, const std::string& hint) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  if (!hint.empty()) j["hint"] = hint;
  err << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orders of roots and log canonical thresholds of monic polynomials over power series"};
  app.require_subcommand(1);
  Options o;

  auto add_poly = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--poly", o.poly, "monic polynomial in y, e.g. \"y^2 - t^3\"");
    if (required) opt->required();
    sub->add_option("--trunc", o.trunc, "truncation for text series (default LCTKIT_TRUNC or 64; \"inf\" for exact)");
  };
  auto* orders = app.add_subcommand("orders", "root orders from the Newton polygon");
  add_poly(orders, true);
  auto* diffs = app.add_subcommand("diffs", "certified table of root-difference orders");
  add_poly(diffs, true);
  auto* integrality = app.add_subcommand("integrality", "whether all roots are power series in t");
  add_poly(integrality, true);
  auto* criterion = app.add_subcommand("criterion", "context and criterion ideals for d and c");
  criterion->add_option("--d", o.d, "degree")->required();
  criterion->add_option("--c", o.c, "threshold candidate c")->required();
  auto* lct = app.add_subcommand("lct", "decide lct(f) >= c");
  lct->add_option("--d", o.d, "degree");
  lct->add_option("--c", o.c, "threshold candidate c");
  lct->add_option("--coeffs", o.coeffs_file, "JSON file with the coefficient series");
  add_poly(lct, false);
  auto* degree3 = app.add_subcommand("degree3", "explicit test for y^3 + a y + b");
  degree3->add_option("--a", o.a, "series a(x)")->required();
  degree3->add_option("--b", o.b, "series b(x)")->required();
  degree3->add_option("--c", o.c, "threshold candidate c")->required();
  degree3->add_option("--trunc", o.trunc, "truncation for text series");
  auto* oracle = app.add_subcommand("oracle", "independent lct computations");
  oracle->add_option("--poly", o.poly, "curve f(x, y)");
  oracle->add_option("--monomials", o.monomials, "exponent vectors as JSON, e.g. [[2,0],[0,3]]");
  oracle->add_option("--binomial", o.binomial, "D K for y^D + x^K")->expected(2);
  auto* verify = app.add_subcommand("verify", "seeded verification suites");
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", o.trials, "number of trials (suite specific default)");
  verify->add_option("--seed", o.seed, "master seed");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kBadInput;
  }

  try {
    if (orders->parsed()) return cmd_orders(o, out, err);
    if (diffs->parsed()) return cmd_diffs(o, out);
    if (integrality->parsed()) return cmd_integrality(o, out);
    if (criterion->parsed()) return cmd_criterion(o, out);
    if (lct->parsed()) return cmd_lct(o, out);
    if (degree3->parsed()) return cmd_degree3(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    report_error(err, "parse", e.what());
    return kBadInput;
  } catch (const TruncationError& e) {
    report_error(err, "truncation", e.what(), e.hint());
    return kUndecided;
  } catch (const ConsistencyError& e) {
    report_error(err, "consistency", e.what());
    return kInternal;
  } catch (const PrecisionError& e) {
    report_error(err, "precision", e.what());
    return kInternal;
  } catch (const NotApplicableError& e) {
    report_error(err, "not-applicable", e.what());
    return kBadInput;
  } catch (const Error& e) {
    report_error(err, "domain", e.what());
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace lctkit
