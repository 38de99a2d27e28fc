#include <string>

#include "doctest.h"
#include "pmmeas/errors.hpp"
#include "pmmeas/suites.hpp"

using namespace pmmeas;

TEST_CASE("config defaults and parsing") {
  CHECK(all_suite_names().size() == 12);

  SuiteConfig def;
  CHECK(def.seed == 1);
  CHECK(def.tolerance == 1e-9);
  CHECK(def.suites == all_suite_names());
  CHECK(def.delta_ops.size() == 7);

  auto parsed = config_from_json(Json::object());
  CHECK(parsed.suites == all_suite_names());

  auto custom = config_from_json(Json{{"seed", 42},
                                      {"tolerance", 1e-8},
                                      {"universe_sizes", Json::array({3, 4})},
                                      {"suites", Json::array({"scalar", "dominance"})}});
  CHECK(custom.seed == 42);
  CHECK(custom.tolerance == 1e-8);
  CHECK(custom.universe_sizes == std::vector<int>{3, 4});
  CHECK(custom.suites == std::vector<std::string>{"scalar", "dominance"});

  auto with_ops = config_from_json(
      Json{{"delta_ops", Json::array({Json{{"kind", "convolution"}}})}});
  CHECK(with_ops.delta_ops.size() == 1);
}

TEST_CASE("config rejections") {
  CHECK_THROWS_AS(config_from_json(Json::array()), ConfigParse);
  CHECK_THROWS_AS(config_from_json(Json{{"bogus", 1}}), ConfigParse);
  CHECK_THROWS_AS(config_from_json(Json{{"tolerance", 0.0}}), ConfigParse);
  CHECK_THROWS_AS(config_from_json(Json{{"oracle_grid_step", 0.5}}), ConfigParse);
  CHECK_THROWS_AS(config_from_json(Json{{"universe_sizes", Json::array()}}), ConfigParse);
  CHECK_THROWS_AS(config_from_json(Json{{"universe_sizes", Json::array({20})}}), ConfigParse);
  CHECK_THROWS_AS(config_from_json(Json{{"suites", Json::array({"nope"})}}), SuiteUnknown);
  CHECK_THROWS_AS(config_from_json(Json{{"seed", "many"}}), ConfigParse);
}

TEST_CASE("config round trip") {
  SuiteConfig c;
  c.seed = 9;
  c.suites = {"ddf", "scalar"};
  auto back = config_from_json(config_to_json(c));
  CHECK(back.seed == 9);
  CHECK(back.suites == c.suites);
  CHECK(back.delta_ops.size() == 7);
}

TEST_CASE("empty selection gives an empty passing report") {
  SuiteConfig c;
  c.suites.clear();
  auto report = run_suites(c);
  CHECK(report.at("all_pass").get<bool>());
  CHECK(report.at("suites").empty());
  CHECK(report.at("schema_version").get<int>() == 1);
  CHECK(report.at("parallelism").get<int>() == 1);
}

TEST_CASE("single suite runs and reports checks") {
  SuiteConfig c;
  c.suites = {"scalar"};
  auto report = run_suites(c);
  CHECK(report.at("all_pass").get<bool>());
  REQUIRE(report.at("suites").size() == 1);
  const auto& s = report.at("suites").at(0);
  CHECK(s.at("name").get<std::string>() == "scalar");
  CHECK(!s.at("claim").get<std::string>().empty());
  CHECK(s.at("pass").get<bool>());
  CHECK(s.at("checks").size() >= 4);
  CHECK(s.contains("elapsed_ms"));
}

TEST_CASE("unknown suite name refused at run time") {
  SuiteConfig c;
  c.suites = {"made-up"};
  CHECK_THROWS_AS(run_suites(c), SuiteUnknown);
}

TEST_CASE("strip_timing removes every elapsed field") {
  SuiteConfig c;
  c.suites = {"dominance"};
  auto report = run_suites(c);
  CHECK(report.contains("elapsed_ms"));
  strip_timing(report);
  CHECK(!report.contains("elapsed_ms"));
  for (const auto& s : report.at("suites")) CHECK(!s.contains("elapsed_ms"));
}

TEST_CASE("same config gives identical stripped reports") {
  SuiteConfig c;
  c.suites = {"dominance", "characterization"};
  c.seed = 5;
  auto a = run_suites(c);
  auto b = run_suites(c);
  strip_timing(a);
  strip_timing(b);
  CHECK(a.dump() == b.dump());
  CHECK(a.at("all_pass").get<bool>());
}

TEST_CASE("explore finds the max-product witness") {
  SuiteConfig c;
  auto r = run_explore(c, "find-pi-top-violation", 3);
  CHECK(r.at("pass").get<bool>());
  CHECK(r.at("result").at("found").get<bool>());
  const auto& w = r.at("result").at("witness");
  CHECK(!w.at("E").get<std::string>().empty());
  CHECK(w.at("additive_value").get<double>() > w.at("max_value").get<double>());

  auto none = run_explore(c, "find-pi-top-violation", 0);
  CHECK(!none.at("pass").get<bool>());
  CHECK(none.at("result").at("budget_exhausted").get<bool>());
}

TEST_CASE("explore census tabulates algebra sizes") {
  SuiteConfig c;
  auto r = run_explore(c, "s-tau-census", 2);
  CHECK(r.at("pass").get<bool>());
  CHECK(r.at("result").at("spaces").get<int>() == 2);
  REQUIRE(r.at("result").at("table").size() == 4);
  for (const auto& row : r.at("result").at("table"))
    CHECK(row.at("algebra_sizes").size() == 2);
}

TEST_CASE("explore rejects unknown modes") {
  SuiteConfig c;
  CHECK_THROWS_AS(run_explore(c, "find-unicorns", 5), SuiteUnknown);
}
