// idemarith: function tables, identity suites and operator exports.
//
//   idemarith table ramanujan:6 --range 1..6
//   idemarith check all --n-max 12 --dim 2520
//   idemarith export T:3:0:6 --dim 6
//
// Exit codes: 0 pass, 1 identity failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idemarith/analytic.hpp"
#include "idemarith/json_io.hpp"
#include "idemarith/ramanujan_ops.hpp"
#include "idemarith/suites.hpp"

using namespace idemarith;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kDefaultDim = 2520;
constexpr std::size_t kMaxDenseDim = 1024;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Integer parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": '" + s + "'");
  }
}

std::pair<Integer, Integer> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B, got '" + s + "'");
  const Integer a = parse_int(s.substr(0, dots), "range start");
  const Integer b = parse_int(s.substr(dots + 2), "range end");
  if (a < 1 || b < a) throw UsageError("range must satisfy 1 <= A <= B, got '" + s + "'");
  return {a, b};
}

std::size_t default_dim() {
  if (const char* env = std::getenv("IDEMARITH_DIM")) {
    const Integer v = parse_int(env, "IDEMARITH_DIM");
    if (v < 1) throw UsageError("IDEMARITH_DIM must be positive");
    return static_cast<std::size_t>(v);
  }
  return kDefaultDim;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------

std::vector<TableRow> table_rows(const std::string& spec, Integer a, Integer b) {
  const auto parts = split(spec, ':');
  const std::string& name = parts.front();
  auto arg = [&](const char* what) {
    if (parts.size() != 2) throw UsageError("function '" + name + "' needs one argument " + what);
    return parse_int(parts[1], what);
  };
  auto plain = [&] {
    if (parts.size() != 1) throw UsageError("function '" + name + "' takes no argument");
  };

  std::function<Rational(Integer)> fn;
  if (name == "mobius") {
    plain();
    fn = [](Integer n) { return Rational(mobius(n)); };
  } else if (name == "totient") {
    plain();
    fn = [](Integer n) { return Rational(totient(n)); };
  } else if (name == "tau") {
    plain();
    fn = [](Integer n) { return Rational(tau(n)); };
  } else if (name == "omega") {
    plain();
    fn = [](Integer n) { return Rational(omega(n)); };
  } else if (name == "jordan") {
    const Integer r = arg("r");
    if (r < 1) throw UsageError("jordan:r needs r >= 1");
    fn = [r](Integer n) { return Rational(jordan_totient(static_cast<int>(r), n)); };
  } else if (name == "ramanujan") {
    const Integer q = arg("n");
    if (q < 1) throw UsageError("ramanujan:n needs n >= 1");
    fn = [q](Integer j) { return Rational(ramanujan_sum(q, j)); };
  } else if (name == "nu") {
    const Integer k = arg("k");
    fn = [k](Integer n) {
      const Integer p = ipow(n, static_cast<int>(k < 0 ? -k : k));
      return k < 0 ? Rational(1, p) : Rational(p);
    };
  } else if (name == "lcm-count") {
    const Integer s = arg("s");
    if (s < 1) throw UsageError("lcm-count:s needs s >= 1");
    fn = [s](Integer n) { return Rational(lcm_tuple_count(static_cast<int>(s), n)); };
  } else {
    throw UsageError("unknown function '" + name +
                     "' (mobius, totient, jordan:r, ramanujan:n, nu:k, tau, omega, lcm-count:s)");
  }
  std::vector<TableRow> rows;
  for (Integer n = a; n <= b; ++n) rows.push_back({n, fn(n)});
  return rows;
}

// ---------------------------------------------------------------------------

Element export_element(const std::string& spec, std::size_t dim, int offset) {
  const auto parts = split(spec, ':');
  const std::string& name = parts.front();
  auto ints = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw UsageError("export '" + name + "' needs " + std::to_string(count) + " indices");
    }
    std::vector<Integer> out;
    for (std::size_t i = 1; i < parts.size(); ++i) out.push_back(parse_int(parts[i], "index"));
    return out;
  };
  auto level = [&](Integer n) {
    if (n < 1) throw UsageError("level n must be positive");
    if (static_cast<Integer>(dim) < n) {
      throw UsageError("dimension " + std::to_string(dim) + " is smaller than n = " +
                       std::to_string(n));
    }
    return n;
  };
  const OperatorFamily ops{IdempotentSystem(dim, offset)};

  if (name == "P") {
    const auto v = ints(2);
    return ops.p(v[0], level(v[1]));
  }
  if (name == "C") {
    const auto v = ints(2);
    return ops.c(v[0], level(v[1]));
  }
  if (name == "T") {
    const auto v = ints(3);
    const Integer n = level(v[2]);
    if (v[0] < 1 || n % v[0] != 0) {
      throw UsageError("T:r:j:n needs r | n, got r = " + parts[1] + ", n = " + parts[3]);
    }
    return ops.t(v[0], v[1], n);
  }
  if (name == "S") {
    const auto v = ints(1);
    return ops.s(level(v[0]));
  }
  if (name == "theta") {
    ints(0);
    return DiagonalOperator::from_index(dim, offset, [](Integer m) { return double(m); });
  }
  if (name == "IU*") {
    ints(0);
    if (offset != 1) throw UsageError("IU* lives on the offset-1 space; pass --offset 1");
    if (dim > kMaxDenseDim) {
      throw UsageError("IU* is dense; pass --dim <= " + std::to_string(kMaxDenseDim));
    }
    const auto shifts = shift_operators(TruncatedSpace(dim, 1));
    return shifts.integration * shifts.u_star;
  }
  throw UsageError("unknown operator '" + name + "' (P:j:n, C:j:n, T:r:j:n, S:n, theta, IU*)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic functions, idempotent systems and operator-valued Ramanujan sums"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  std::string range = "1..60";
  std::string target;
  std::optional<std::size_t> dim_flag;
  double tolerance = kDefaultTolerance;
  Integer n_max = 12;
  int offset = 0;
  Integer prefix = 64;

  auto* table = app.add_subcommand("table", "Tabulate an arithmetic function");
  table->add_option("function", target, "mobius, totient, jordan:r, ramanujan:n, nu:k, tau, omega, lcm-count:s")
      ->required();
  table->add_option("--range", range, "A..B")->capture_default_str();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_option("--out", out_path);

  auto* check = app.add_subcommand("check", "Run an identity suite and print a JSON report");
  check->add_option("suite", target, "axioms, product-law, ramanujan, transforms, even-identity, analytic, all")
      ->required();
  check->add_option("--n-max", n_max)->capture_default_str();
  check->add_option("--dim", dim_flag, "truncation dimension (default 2520 or $IDEMARITH_DIM)");
  check->add_option("--tolerance", tolerance)->capture_default_str();
  check->add_option("--out", out_path);

  auto* exp = app.add_subcommand("export", "Export an operator as JSON");
  exp->add_option("operator", target, "P:j:n, C:j:n, T:r:j:n, S:n, theta, IU*")->required();
  exp->add_option("--dim", dim_flag, "truncation dimension (default 2520 or $IDEMARITH_DIM)");
  exp->add_option("--offset", offset, "first basis index, 0 or 1")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  exp->add_option("--out", out_path);

  auto* growth = app.add_subcommand("growth", "Root-test prefix |(nu0*alpha)(m)|^{1/m} as CSV");
  growth->add_option("function", target, "any table function")->required();
  growth->add_option("--prefix", prefix, "M >= 4")->capture_default_str();
  growth->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (table->parsed()) {
      const auto [a, b] = parse_range(range);
      const auto rows = table_rows(target, a, b);
      emit(format == "json" ? table_json(target, rows).dump(2) + "\n" : table_csv(rows), out_path);
      return 0;
    }
    if (check->parsed()) {
      if (tolerance < 0) throw UsageError("tolerance must be non-negative");
      const SuiteConfig config{n_max, dim_flag.value_or(default_dim()), tolerance};
      const auto results = run_suite(target, config);
      emit(suites_json(results, config).dump(2) + "\n", out_path);
      if (all_passed(results)) return 0;
      for (const auto& r : results) {
        for (const auto& c : r.report.checks) {
          if (c.pass) continue;
          std::cerr << "FAIL [" << r.name << "] " << c.identity << " residual " << c.max_residual;
          for (const auto& [k, v] : c.params) std::cerr << ' ' << k << '=' << v;
          std::cerr << '\n';
        }
      }
      return kExitFailure;
    }
    if (exp->parsed()) {
      const std::size_t dim = dim_flag.value_or(default_dim());
      emit(to_json(export_element(target, dim, offset)).dump() + "\n", out_path);
      return 0;
    }
    if (growth->parsed()) {
      if (prefix < 4) throw UsageError("prefix must be at least 4");
      const auto rows = table_rows(target, 1, prefix);
      const auto alpha = AlgFunction<Rational>::tabulate(
          prefix, [&](Integer n) { return rows[static_cast<std::size_t>(n - 1)].value; });
      const auto diag = growth_indicator(alpha, prefix);
      emit(growth_csv(diag), out_path);
      std::cerr << "indicator " << diag.indicator << " at m = " << diag.indicator_at << ": "
                << growth_class_name(diag.classification) << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
