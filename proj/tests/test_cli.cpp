#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"

using nlohmann::ordered_json;

namespace {
struct Run {
  int code;
  std::string out, err;
  ordered_json json() const { return ordered_json::parse(out); }
  ordered_json error() const { return ordered_json::parse(err); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lctkit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}
}  // namespace

TEST_CASE("orders") {
  auto r = run({"orders", "--poly", "y^2 - t^3"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["slopes"] == ordered_json::parse(R"([["3/2",2]])"));
  CHECK(j["max_root_order"] == "3/2");

  auto three = run({"orders", "--poly", "y^3 + t^2*y + t^3", "--trunc", "inf"}).json();
  CHECK(three["slopes"] == ordered_json::parse(R"([["1",3]])"));
  CHECK(three["partial_sums"] == ordered_json::parse(R"(["1","2","3"])"));
}

TEST_CASE("diffs and integrality") {
  auto d = run({"diffs", "--poly", "y^3 + t^2*y + t^3"});
  REQUIRE(d.code == 0);
  for (const auto& row : d.json()["diffTable"]["sorted"]) CHECK(row == ordered_json::parse(R"(["1","1","inf"])"));

  auto bad = run({"integrality", "--poly", "y^2 - t^3"});
  CHECK(bad.code == 0);
  CHECK(bad.json()["verdict"] == "nonintegral");
  auto good = run({"integrality", "--poly", "(y - t)*(y - t^2)*(y - t^3)"});
  CHECK(good.json()["verdict"] == "integral");
}

TEST_CASE("criterion context") {
  auto j = run({"criterion", "--d", "3", "--c", "5/6"}).json();
  CHECK(j["p"] == 2);
  CHECK(j["c1"] == "1/6");
  CHECK(j["c2"] == "2/3");
  CHECK(j["p_plus"].is_object());
  auto big = run({"criterion", "--d", "5", "--c", "1"}).json();
  CHECK(big["p"] == 4);
  CHECK(big["p_plus"].is_null());
}

TEST_CASE("lct from a coefficient file") {
  auto file = temp_file("lctkit_cusp.json",
                        R"({"d":3,"c":"5/6","coeffs":[)"
                        R"({"var":"x","ram":1,"trunc":"inf","terms":[]},)"
                        R"({"var":"x","ram":1,"trunc":"inf","terms":[]},)"
                        R"({"var":"x","ram":1,"trunc":"inf","terms":[{"e":"2/1","c":"1/1"}]}]})");
  auto r = run({"lct", "--d", "3", "--c", "5/6", "--coeffs", file});
  REQUIRE(r.code == 0);
  CHECK(r.json()["verdict"] == "yes");
  CHECK(r.json()["V"]["value"] == "1");
  auto no = run({"lct", "--c", "11/12", "--coeffs", file});
  CHECK(no.json()["verdict"] == "no");

  auto text = run({"lct", "--c", "5/6", "--poly", "y^3 + x^2"});
  CHECK(text.json()["verdict"] == "yes");

  auto vague = run({"lct", "--c", "3/4", "--poly", "y^2 + O(x)"});
  CHECK(vague.code == 3);
  CHECK(vague.json()["verdict"] == "unknown");
}

TEST_CASE("degree three and oracles") {
  CHECK(run({"degree3", "--a", "0", "--b", "x^2", "--c", "5/6"}).json()["verdict"] == "yes");
  CHECK(run({"degree3", "--a", "0", "--b", "x^2", "--c", "9/10"}).json()["verdict"] == "no");
  CHECK(run({"oracle", "--poly", "y^3 + x^2"}).json()["lct"] == "5/6");
  CHECK(run({"oracle", "--monomials", "[[2,0],[0,3]]"}).json()["lct"] == "5/6");
  CHECK(run({"oracle", "--binomial", "3", "2"}).json()["lct"] == "5/6");
  auto degenerate = run({"oracle", "--poly", "(y - x)^2"});
  CHECK(degenerate.code == 2);
  CHECK(degenerate.error()["error"] == "not-applicable");
}

TEST_CASE("exit codes for bad input") {
  auto p = run({"orders", "--poly", "1/0"});
  CHECK(p.code == 2);
  CHECK(p.error()["error"] == "parse");
  CHECK(run({"orders"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"criterion", "--d", "3", "--c", "1/4"}).code == 2);
  CHECK(run({"lct", "--c", "3/4", "--coeffs", "/nonexistent/file.json"}).code == 2);
  auto t = run({"orders", "--poly", "y^2 + O(t)"});
  CHECK(t.code == 3);
  CHECK(t.error()["error"] == "truncation");
  CHECK_FALSE(t.error()["hint"].get<std::string>().empty());
}

TEST_CASE("verify is deterministic") {
  auto a = run({"verify", "--suite", "identities", "--trials", "12", "--seed", "42"});
  auto b = run({"verify", "--suite", "identities", "--trials", "12", "--seed", "42", "--jobs", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["status"] == "pass");
  CHECK(a.json()["cases"] == 12);
}
