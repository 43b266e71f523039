#pragma once

// Named identity suites behind `idemarith check`. Exact identities report a
// residual of exactly 0; float-oracle comparisons (DFT projections, root of
// unity sums) report their rounding residual, so tolerance 0 fails them.

#include <string>
#include <string_view>
#include <vector>

#include "idemarith/json_io.hpp"
#include "idemarith/report.hpp"

namespace idemarith {

struct SuiteConfig {
  Integer n_max = 12;
  std::size_t dim = 2520;
  double tolerance = kDefaultTolerance;
};

struct SuiteResult {
  std::string name;
  Report report;
  // Enumerated parameter tuples (for product-law: every (k, n, l, m)).
  Integer cases = 0;
};

// axioms, product-law, ramanujan, transforms, even-identity, analytic.
const std::vector<std::string>& suite_names();

// `name` is one of suite_names() or "all". Throws DomainError otherwise,
// or when n_max < 1, dim < n_max or tolerance < 0.
std::vector<SuiteResult> run_suite(std::string_view name, const SuiteConfig& config);

// {"config": ..., "suites": [{name, cases, checks, erratum, summary}], "summary": ...}
Json suites_json(const std::vector<SuiteResult>& results, const SuiteConfig& config);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace idemarith
