#include <doctest.h>

#include "riesz/errors.hpp"
#include "riesz/suites/suites.hpp"

using namespace riesz;
using namespace riesz::suites;

TEST_CASE("every suite passes on a reduced case count") {
  SuiteConfig cfg;
  cfg.seed = 5;
  cfg.trials = 4;
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    SuiteResult r = run_suite(name, cfg);
    CHECK_MESSAGE(r.ok(), name << ": " << r.to_json().dump());
    CHECK(r.total_cases() > 0);
  }
}

TEST_CASE("reports are deterministic") {
  SuiteConfig cfg;
  cfg.seed = 9;
  cfg.trials = 5;
  CHECK(run_suite("l1", cfg).to_json().dump() == run_suite("l1", cfg).to_json().dump());
  CHECK(run_suite("bimorph", cfg).to_json().dump() == run_suite("bimorph", cfg).to_json().dump());
}

TEST_CASE("case counts follow the configuration") {
  SuiteConfig cfg;
  cfg.trials = 3;
  auto r = part_kar(cfg);
  CHECK(r.cases == 3);
  CHECK(r.ok());
  SuiteResult defaults = part_l1_bound(SuiteConfig{});
  CHECK(defaults.cases == 1100);
  CHECK(defaults.ok());
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), DomainError); }
