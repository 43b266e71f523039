#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "idemarith/arith.hpp"

namespace idemarith {

using Params = std::vector<std::pair<std::string, Integer>>;

// One evaluated identity: the largest residual seen over everything the
// check covers, and whether it stayed within tolerance.
struct IdentityCheck {
  std::string identity;
  Params params;
  double max_residual = 0.0;
  bool pass = true;
};

// Evaluations of displayed formulas known not to hold as written. They are
// recorded with their values and never count as failures.
struct ErratumEntry {
  std::string identity;
  Params params;
  std::vector<std::pair<std::string, double>> values;
  bool holds = false;
  std::string note;
};

struct Report {
  std::vector<IdentityCheck> checks;
  std::vector<ErratumEntry> errata;

  IdentityCheck& add(std::string identity, Params params, double residual, double tol) {
    checks.push_back({std::move(identity), std::move(params), residual, residual <= tol});
    return checks.back();
  }

  void merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
    for (auto& e : other.errata) errata.push_back(std::move(e));
  }

  std::size_t failures() const {
    std::size_t out = 0;
    for (const auto& c : checks) out += c.pass ? 0 : 1;
    return out;
  }

  bool passed() const { return failures() == 0; }

  double max_residual() const {
    double out = 0.0;
    for (const auto& c : checks) out = out < c.max_residual ? c.max_residual : out;
    return out;
  }
};

}  // namespace idemarith
