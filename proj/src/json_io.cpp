#include "lctkit/json_io.hpp"

#include "lctkit/errors.hpp"

namespace lctkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Rational rational_field(const Json& j, const char* key) { return parse_rational(string_field(j, key)); }

}  // namespace

Json series_to_json(const PSeries& s) {
  Json j;
  j["var"] = s.var();
  j["ram"] = s.ram();
  j["trunc"] = s.trunc() ? to_string(*s.trunc()) : std::string("inf");
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"e", to_fraction_string(e)}, {"c", to_fraction_string(c)}});
  j["terms"] = terms;
  return j;
}

PSeries series_from_json(const Json& j) {
  const std::string var = string_field(j, "var");
  const std::string trunc_text = string_field(j, "trunc");
  std::optional<Rational> trunc;
  if (trunc_text != "inf") trunc = parse_rational(trunc_text);
  const Json& ram = field(j, "ram");
  if (!ram.is_number_integer() || ram.get<long>() < 1) throw ParseError("ram must be a positive integer");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  PSeries::Terms map;
  for (const auto& t : terms) {
    Rational e = rational_field(t, "e");
    Rational c = rational_field(t, "c");
    if (e < 0) throw ParseError("negative exponent " + to_string(e));
    if (trunc && e >= *trunc) throw ParseError("exponent " + to_string(e) + " is not below the truncation");
    if (c == 0) throw ParseError("zero coefficient stored");
    if (Rational(e * ram.get<long>()).get_den() != 1)
      throw ParseError("exponent " + to_string(e) + " is not a multiple of 1/ram");
    if (!map.emplace(e, c).second) throw ParseError("repeated exponent " + to_string(e));
  }
  return PSeries(var, map, trunc);
}

Json mpoly_to_json(const MPoly& p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"c", to_string(c)}});
  j["terms"] = terms;
  return j;
}

MPoly mpoly_from_json(const Json& j) {
  const Json& vars = field(j, "vars");
  if (!vars.is_array()) throw ParseError("vars must be an array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  MPoly::Terms terms;
  for (const auto& t : field(j, "terms")) {
    const Json& exps = field(t, "exps");
    if (!exps.is_array() || exps.size() != names.size()) throw ParseError("exponent vector has the wrong length");
    std::vector<int> e;
    for (const auto& x : exps) {
      if (!x.is_number_integer() || x.get<int>() < 0) throw ParseError("exponents must be nonnegative integers");
      e.push_back(x.get<int>());
    }
    Rational c = rational_field(t, "c");
    if (c == 0) throw ParseError("zero coefficient stored");
    if (!terms.emplace(e, c).second) throw ParseError("repeated exponent vector");
  }
  return MPoly(names, terms);
}

namespace {

template <class Base, class ToJson>
Json qideal_json(const QIdeal<Base>& a, ToJson to_json) {
  Json j;
  j["exp"] = to_string(a.exponent());
  Json gens = Json::array();
  if (!a.is_zero())
    for (const auto& g : a.gens()) gens.push_back(to_json(expand(g)));
  j["gens"] = gens;
  return j;
}

template <class Base, class FromJson>
QIdeal<Base> qideal_from(const Json& j, FromJson from_json) {
  Rational e = rational_field(j, "exp");
  if (e < 0) throw ParseError("Q-ideal exponent must be nonnegative");
  std::vector<FactoredGen<Base>> gens;
  for (const auto& g : field(j, "gens")) gens.push_back(FactoredGen<Base>::of(from_json(g)));
  if (gens.empty()) return QIdeal<Base>::zero();
  return QIdeal<Base>(gens, e);
}

}  // namespace

Json qideal_to_json(const PolyIdeal& a) { return qideal_json(a, mpoly_to_json); }
Json qideal_to_json(const SeriesIdeal& a) { return qideal_json(a, series_to_json); }
PolyIdeal poly_qideal_from_json(const Json& j) { return qideal_from<MPoly>(j, mpoly_from_json); }
SeriesIdeal series_qideal_from_json(const Json& j) { return qideal_from<PSeries>(j, series_from_json); }

Json qfrac_to_json(const QIdealFrac<MPoly>& f) {
  return Json{{"num", qideal_to_json(f.numer)}, {"den", qideal_to_json(f.denom)}};
}
Json qfrac_to_json(const QIdealFrac<PSeries>& f) {
  return Json{{"num", qideal_to_json(f.numer)}, {"den", qideal_to_json(f.denom)}};
}

Json orderval_to_json(const OrderVal& v) {
  switch (v.kind()) {
    case OrderVal::Kind::Exact:
      return Json{{"kind", "exact"}, {"value", to_string(v.value())}};
    case OrderVal::Kind::AtLeast:
      return Json{{"kind", "atleast"}, {"value", to_string(v.value())}};
    case OrderVal::Kind::Infinite:
      break;
  }
  return Json{{"kind", "inf"}};
}

OrderVal orderval_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "inf") return OrderVal::infinite();
  if (kind == "exact") return OrderVal::exact(rational_field(j, "value"));
  if (kind == "atleast") return OrderVal::at_least(rational_field(j, "value"));
  throw ParseError("unknown order kind '" + kind + "'");
}

Json slopes_to_json(const NewtonPolygon& np) {
  Json out = Json::array();
  for (const auto& [order, mult] : np.slopes()) out.push_back(Json::array({order.str(), mult}));
  return out;
}

Json diff_table_to_json(const DiffOrderTable& t) {
  Json entries = Json::array();
  for (const auto& row : t.entries) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    entries.push_back(r);
  }
  Json sorted = Json::array();
  for (const auto& row : t.sorted) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    sorted.push_back(r);
  }
  return Json{{"entries", entries}, {"sorted", sorted}, {"depth", to_string(t.depth)}, {"precision", t.precision}};
}

Json decision_to_json(const LctDecision& d) {
  Json j;
  std::string verdict = to_string(d.verdict);
  j["verdict"] = verdict;
  if (d.context) {
    j["p"] = d.context->p;
    j["c1"] = to_string(d.context->c1);
    j["c2"] = to_string(d.context->c2);
  } else {
    j["p"] = nullptr;
    j["c1"] = nullptr;
    j["c2"] = nullptr;
  }
  j["V"] = d.V ? orderval_to_json(*d.V) : Json(nullptr);
  if (!d.reason.empty()) j["reason"] = d.reason;
  return j;
}

}  // namespace lctkit
