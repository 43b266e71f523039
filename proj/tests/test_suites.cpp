#include <doctest.h>

#include "idemarith/suites.hpp"

using namespace idemarith;

TEST_CASE("every suite passes at desk scale") {
  const SuiteConfig config{8, 840, 1e-9};
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto results = run_suite(name, config);
    REQUIRE(results.size() == 1);
    CHECK(results.front().report.passed());
    CHECK(results.front().report.checks.size() > 0);
  }
}

TEST_CASE("zero tolerance fails the float oracles only") {
  const SuiteConfig config{6, 120, 0.0};
  const auto results = run_suite("all", config);
  CHECK(results.size() == suite_names().size());
  CHECK_FALSE(all_passed(results));
  for (const auto& r : results) {
    for (const auto& c : r.report.checks) {
      if (!c.pass) {
        CAPTURE(c.identity);
        const bool float_oracle = c.identity.find("dft oracle") != std::string::npos ||
                                  c.identity.find("root-of-unity") != std::string::npos ||
                                  c.identity.find("eps") != std::string::npos ||
                                  c.identity.find("RF") != std::string::npos ||
                                  c.identity.find("R(alpha)") != std::string::npos;
        CHECK(float_oracle);
      }
    }
  }
}

TEST_CASE("product-law enumerates every case") {
  const auto r = run_suite("product-law", {2, 4, 1e-9});
  CHECK(r.front().cases == 9);
  CHECK(r.front().report.passed());
}

TEST_CASE("errata never fail a run") {
  const auto r = run_suite("analytic", {6, 64, 1e-9});
  CHECK(r.front().report.passed());
  CHECK_FALSE(r.front().report.errata.empty());
}

TEST_CASE("suite configuration errors") {
  CHECK_THROWS_AS(run_suite("nope", {}), DomainError);
  CHECK_THROWS_AS(run_suite("axioms", {0, 10, 1e-9}), DomainError);
  CHECK_THROWS_AS(run_suite("axioms", {12, 8, 1e-9}), DomainError);
  CHECK_THROWS_AS(run_suite("axioms", {4, 8, -1.0}), DomainError);
}

TEST_CASE("reports are deterministic") {
  const SuiteConfig config{5, 60, 1e-9};
  CHECK(suites_json(run_suite("all", config), config).dump() ==
        suites_json(run_suite("all", config), config).dump());
}
