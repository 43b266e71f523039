#pragma once

// Wire formats:
//   diagonal  {"kind":"diag","n":N,"offset":o,"entries":[[re,im],...]}
//   dense     {"kind":"dense","n":N,"entries":[[re,im],...]}   (row-major)
//   reports   {identity, params, max_residual, pass} per check
//   tables    CSV "n,value"; growth CSV "m,root_value"
// Integral components are written as JSON integers.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "idemarith/algebra.hpp"
#include "idemarith/analytic.hpp"
#include "idemarith/idempotent.hpp"
#include "idemarith/report.hpp"

namespace idemarith {

using Json = nlohmann::ordered_json;
using Element = std::variant<DiagonalOperator, DenseMatrix>;

Json to_json(const DiagonalOperator& x);
Json to_json(const DenseMatrix& x);
Json to_json(const Element& x);

// Throws DomainError on schema violations.
Element element_from_json(const Json& j);

Json to_json(const IdentityCheck& c);
Json to_json(const ErratumEntry& e);
// {"checks": [...], "erratum": [...], "summary": {...}}
Json to_json(const Report& r);

// {"checks": [{axiom, n, j, r, pass}], "summary": {...}}
Json to_json(const AxiomReport& r);

struct TableRow {
  Integer n;
  Rational value;
};

std::string table_csv(const std::vector<TableRow>& rows);
Json table_json(const std::string& function, const std::vector<TableRow>& rows);

std::string growth_csv(const GrowthDiagnostic& g);

// Integral finite doubles become JSON integers.
Json number_json(double v);

}  // namespace idemarith
