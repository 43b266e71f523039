#include "idemarith/json_io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace idemarith {

namespace {

Json complex_json(Complex c) { return Json::array({number_json(c.real()), number_json(c.imag())}); }

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DomainError("element json: entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

Json number_json(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

Json to_json(const DiagonalOperator& x) {
  Json entries = Json::array();
  for (const Complex& c : x.entries()) entries.push_back(complex_json(c));
  return Json{{"kind", "diag"}, {"n", x.dim()}, {"offset", x.offset()}, {"entries", entries}};
}

Json to_json(const DenseMatrix& x) {
  Json entries = Json::array();
  for (const Complex& c : x.entries()) entries.push_back(complex_json(c));
  return Json{{"kind", "dense"}, {"n", x.dim()}, {"entries", entries}};
}

Json to_json(const Element& x) {
  return std::visit([](const auto& e) { return to_json(e); }, x);
}

Element element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("entries")) {
    throw DomainError("element json: missing kind, n or entries");
  }
  const auto kind = j.at("kind").get<std::string>();
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Complex> entries;
  for (const auto& e : j.at("entries")) entries.push_back(complex_from(e));
  if (kind == "diag") {
    if (entries.size() != n) throw DomainError("element json: diag needs n entries");
    return DiagonalOperator(j.value("offset", 0), std::move(entries));
  }
  if (kind == "dense") {
    if (entries.size() != n * n) throw DomainError("element json: dense needs n*n entries");
    return DenseMatrix(n, std::move(entries));
  }
  throw DomainError("element json: unknown kind '" + kind + "'");
}

Json to_json(const IdentityCheck& c) {
  return Json{{"identity", c.identity},
              {"params", params_json(c.params)},
              {"max_residual", c.max_residual},
              {"pass", c.pass}};
}

Json to_json(const ErratumEntry& e) {
  Json values = Json::object();
  for (const auto& [k, v] : e.values) values[k] = number_json(v);
  return Json{{"identity", e.identity},
              {"params", params_json(e.params)},
              {"values", values},
              {"holds", e.holds},
              {"note", e.note}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json errata = Json::array();
  for (const auto& e : r.errata) errata.push_back(to_json(e));
  return Json{{"checks", checks},
              {"erratum", errata},
              {"summary",
               {{"total", r.checks.size()},
                {"failed", r.failures()},
                {"max_residual", r.max_residual()},
                {"errata", r.errata.size()}}}};
}

Json to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"axiom", c.axiom},
                          {"n", c.n},
                          {"j", c.j},
                          {"r", c.r},
                          {"residual", c.residual},
                          {"pass", c.pass}});
  }
  return Json{{"checks", checks},
              {"summary",
               {{"dim", r.dim},
                {"n_limit", r.n_limit},
                {"r_max", r.r_max},
                {"total", r.checks.size()},
                {"failed", r.failures()}}}};
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,value\n";
  for (const auto& row : rows) out << row.n << ',' << rational_string(row.value) << '\n';
  return out.str();
}

Json table_json(const std::string& function, const std::vector<TableRow>& rows) {
  Json out_rows = Json::array();
  for (const auto& row : rows) {
    Json value = row.value.denominator() == 1 ? Json(row.value.numerator())
                                               : Json(rational_string(row.value));
    out_rows.push_back(Json{{"n", row.n}, {"value", value}});
  }
  return Json{{"function", function}, {"rows", out_rows}};
}

std::string growth_csv(const GrowthDiagnostic& g) {
  std::ostringstream out;
  out << "m,root_value\n" << std::setprecision(17);
  for (std::size_t i = 0; i < g.values.size(); ++i) out << (i + 1) << ',' << g.values[i] << '\n';
  return out.str();
}

}  // namespace idemarith
