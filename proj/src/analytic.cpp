#include "idemarith/analytic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace idemarith {

TruncatedSpace::TruncatedSpace(std::size_t dim_, int offset_) : dim(dim_), offset(offset_) {
  if (dim == 0) throw DomainError("truncated space: dimension must be positive");
  if (offset != 0 && offset != 1) throw DomainError("truncated space: offset must be 0 or 1");
}

C0T0 c0_t0_diagonals(Integer n, const TruncatedSpace& space) {
  if (n < 1) throw DomainError("c0_t0_diagonals: n must be positive");
  return {
      DiagonalOperator::from_index(space.dim, space.offset,
                                   [n](Integer m) { return static_cast<double>(ramanujan_sum(n, m)); }),
      DiagonalOperator::from_index(space.dim, space.offset,
                                   [n](Integer m) { return std::gcd(n, m) == 1 ? 1.0 : 0.0; }),
  };
}

DetC0 det_c0(Integer n, Integer N) {
  if (n < 2 || N < 1) throw DomainError("det_c0: needs n >= 2 and N >= 1");
  BigInt direct = 1;
  for (Integer k = 1; k <= N; ++k) direct *= ramanujan_sum(n, k);
  const auto f = factorize(n);
  BigInt closed = 0;
  if (f.squarefree()) {
    closed = 1;
    for (const auto& pp : f) {
      BigInt base = 1 - pp.prime;
      closed *= boost::multiprecision::pow(base, static_cast<unsigned>(N / pp.prime));
    }
  }
  // sign actually produced by the product: (-1)^{N omega(n)} relative to closed
  BigInt corrected = (N * static_cast<Integer>(f.size())) % 2 == 0 ? closed : BigInt(-closed);
  return {direct, closed, corrected, f.squarefree(), direct == closed, direct == corrected};
}

namespace {

Integer floor_div(Integer a, Integer b) {
  const Integer q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

Report trace_identities(Integer n, Integer N) {
  if (n < 2 || N < 1) throw DomainError("trace_identities: needs n >= 2 and N >= 1");
  Report out;
  const Params params{{"n", n}, {"N", N}};
  const auto ops = c0_t0_diagonals(n, TruncatedSpace(static_cast<std::size_t>(N), 1));
  const auto f = factorize(n);
  const auto divs = divisors(f);

  Integer c0_formula = 0;
  Integer t0_formula = 0;
  for (Integer d : divs) {
    c0_formula += d * mobius(n / d) * floor_div(N, d);
    t0_formula += mobius(d) * floor_div(N, d);
  }
  Integer coprime_count = 0;
  for (Integer m = 1; m <= N; ++m) coprime_count += std::gcd(m, n) == 1 ? 1 : 0;

  const double c0_trace = trace(ops.c0).real();
  const double t0_trace = trace(ops.t0).real();
  out.add("trace C_0(n)|_N = sum_{d|n} d mu(n/d) floor(N/d)", params,
          std::abs(c0_trace - static_cast<double>(c0_formula)), 0.0);
  out.add("trace T_0(n)|_N = #{m <= N : gcd(m, n) = 1}", params,
          std::abs(t0_trace - static_cast<double>(coprime_count)), 0.0);
  out.add("#{m <= N : gcd(m, n) = 1} = sum_{r|n} mu(r) floor(N/r)", params,
          static_cast<double>(std::abs(coprime_count - t0_formula)), 0.0);

  // Displayed middle expressions of the two chains.
  Integer progression_sum = 0;
  for (Integer k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) progression_sum += floor_div(N - k, n);
  }
  Integer omega_form = N * static_cast<Integer>(f.size());
  for (const auto& pp : f) omega_form -= floor_div(N, pp.prime);
  out.errata.push_back({"sum_{gcd(k,n)=1} floor((N-k)/n) = N omega(n) - sum_{p|n} floor(N/p) "
                        "= sum_{r|n} mu(r) floor(N/r)",
                        params,
                        {{"progression_sum", static_cast<double>(progression_sum)},
                         {"omega_form", static_cast<double>(omega_form)},
                         {"mobius_form", static_cast<double>(t0_formula)}},
                        progression_sum == t0_formula && omega_form == t0_formula,
                        "only the mobius form is asserted (it equals the coprime count)"});

  Integer prime_power_form = 0;
  for (const auto& [p, a] : f) {
    const Integer pa = ipow(p, a);
    prime_power_form += pa * floor_div(N, pa) - (pa / p) * floor_div(N, pa / p);
  }
  out.errata.push_back({"sum_{k<=N} c_n(k) = sum_l (p_l^a floor(N/p_l^a) - p_l^{a-1} "
                        "floor(N/p_l^{a-1}))",
                        params,
                        {{"prime_power_form", static_cast<double>(prime_power_form)},
                         {"divisor_form", static_cast<double>(c0_formula)}},
                        prime_power_form == c0_formula,
                        "additive over primes; only agrees with the divisor form in special cases"});
  return out;
}

Report p_operator_identities(const TruncatedSpace& space, Integer n_max,
                             const std::vector<std::pair<ScalarFunction, ScalarFunction>>& pairs,
                             double tol) {
  if (space.offset != 1) throw DomainError("p_operator_identities: needs the offset-1 space");
  Report out;
  const Integer dim = static_cast<Integer>(space.dim);
  const Integer table = std::max(n_max, dim);
  const Params params{{"n_max", n_max}, {"dim", dim}};

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto a = pairs[i].first.truncate(table);
    const auto b = pairs[i].second.truncate(table);
    const auto box = lcm_convolve(a, b);
    const auto lhs = p_operator(box, space);
    const auto rhs = p_operator(a, space) * p_operator(b, space);
    Params pp = params;
    pp.emplace_back("pair", static_cast<Integer>(i));
    out.add("P(alpha box beta) = P(alpha) P(beta)", pp, distance(lhs, rhs), tol);
  }

  const auto phi = totient_function(table);
  const auto theta = DiagonalOperator::from_index(space.dim, 1, [](Integer m) { return double(m); });
  auto power = phi;
  DiagonalOperator theta_power = theta;
  for (int r = 1; r <= 3; ++r) {
    if (r > 1) {
      power = lcm_convolve(power, phi);
      theta_power *= theta;
    }
    Params pr = params;
    pr.emplace_back("r", r);
    const auto jordan = jordan_function(r, table);
    double table_gap = 0.0;
    for (Integer m = 1; m <= table; ++m) {
      table_gap = std::max(table_gap, std::abs(static_cast<double>(power(m) - jordan(m))));
    }
    out.add("J_r = phi box ... box phi (r times)", pr, table_gap, 0.0);

    const auto transform = nu0_transform(jordan.truncate(n_max));
    double scalar_gap = 0.0;
    for (Integer m = 1; m <= n_max; ++m) {
      scalar_gap = std::max(scalar_gap, std::abs(static_cast<double>(transform(m) - ipow(m, r))));
    }
    out.add("(nu0 * J_r)(m) = m^r", pr, scalar_gap, 0.0);
    out.add("P(J_r) = theta^r", pr, distance(p_operator(jordan, space), theta_power), tol);
  }
  return out;
}

ShiftOperators shift_operators(const TruncatedSpace& space) {
  const std::size_t n = space.dim;
  ShiftOperators out{DenseMatrix::zero(n), DenseMatrix::zero(n), DenseMatrix::zero(n),
                     DenseMatrix::zero(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double m = static_cast<double>(static_cast<Integer>(i) + space.offset);
    if (i + 1 < n) {
      out.u(i + 1, i) = 1.0;
      out.integration(i + 1, i) = 1.0 / (m + 1.0);
    }
    if (i >= 1) out.u_star(i - 1, i) = 1.0;
    out.theta(i, i) = m;
  }
  return out;
}

Report iu_star_representation(const TruncatedSpace& space, Integer n_max) {
  if (space.offset != 1) throw DomainError("iu_star_representation: needs the offset-1 space");
  Report out;
  const Integer dim = static_cast<Integer>(space.dim);
  const Integer limit = std::min(n_max, dim);
  const Params params{{"n_max", n_max}, {"dim", dim}};
  const auto shifts = shift_operators(space);
  const DenseMatrix iu = shifts.integration * shifts.u_star;

  double off_diag = 0.0;
  for (std::size_t r = 0; r < iu.dim(); ++r) {
    for (std::size_t c = 0; c < iu.dim(); ++c) {
      if (r != c) off_diag = std::max(off_diag, std::abs(iu(r, c)));
    }
  }
  out.add("I U* is diagonal", params, off_diag, 0.0);

  const Integer table = std::max<Integer>(limit, 1);
  const auto mu = convert<Integer, Rational>(mobius_function(table));
  const auto inv_candidate = nu0_transform(dirichlet_convolve(mu, nu_rational(-1, table)));
  const auto id_candidate =
      nu0_transform(dirichlet_convolve(mobius_function(table), nu_function(1, table)));

  double inv_gap = 0.0;
  double iu_gap = 0.0;
  double theta_gap = 0.0;
  Integer first_theta_mismatch = 0;
  for (Integer m = 1; m <= limit; ++m) {
    inv_gap = std::max(inv_gap, boost::rational_cast<double>(abs(inv_candidate(m) - Rational(1, m))));
    theta_gap = std::max(theta_gap, std::abs(static_cast<double>(id_candidate(m) - m)));
    if (m >= 2) {
      const auto i = static_cast<std::size_t>(m - 1);
      const double expected = boost::rational_cast<double>(inv_candidate(m));
      iu_gap = std::max(iu_gap, std::abs(iu(i, i) - expected));
      if (first_theta_mismatch == 0 &&
          std::abs(iu(i, i) - static_cast<double>(id_candidate(m))) > 0.0) {
        first_theta_mismatch = m;
      }
    }
  }
  out.add("(nu0 * mu * nu_{-1})(m) = 1/m", params, inv_gap, 0.0);
  out.add("I U* e_m = (1/m) e_m = P(mu * nu_{-1}) e_m, 2 <= m", params, iu_gap, 0.0);
  out.add("(nu0 * mu * nu_1)(m) = m, i.e. P(mu * nu_1) = theta", params, theta_gap, 0.0);

  out.errata.push_back({"P(mu * nu_1) = I U*",
                        params,
                        {{"first_mismatch_m", static_cast<double>(first_theta_mismatch)}},
                        first_theta_mismatch == 0 && limit >= 2,
                        "mu * nu_1 = phi gives theta; mu * nu_{-1} reproduces the 1/m diagonal"});
  out.errata.push_back({"I U* e_1 = P(mu * nu_{-1}) e_1",
                        params,
                        {{"iu_star_e1", iu(0, 0).real()}, {"p_operator_e1", 1.0}},
                        false,
                        "U* e_1 = 0 in the truncated offset-1 model, while 1/m = 1 at m = 1"});
  return out;
}

std::string growth_class_name(GrowthClass c) {
  return c == GrowthClass::plausibly_continuous ? "plausibly-continuous" : "not-continuous";
}

namespace detail {

GrowthDiagnostic growth_from_transform(const std::vector<Complex>& transform) {
  const Integer M = static_cast<Integer>(transform.size());
  GrowthDiagnostic out{M, {}, 0.0, 0, false, GrowthClass::not_continuous};
  out.values.reserve(transform.size());
  std::vector<double> logs;
  logs.reserve(transform.size());
  for (Integer m = 1; m <= M; ++m) {
    const double mag = std::abs(transform[static_cast<std::size_t>(m - 1)]);
    const double lg = mag > 0.0 ? std::log(mag) / static_cast<double>(m)
                                : -std::numeric_limits<double>::infinity();
    logs.push_back(lg);
    out.values.push_back(mag > 0.0 ? std::exp(lg) : 0.0);
  }
  const Integer lo = (M + 1) / 2;
  const Integer mid = (3 * M + 3) / 4;
  out.indicator = -1.0;
  for (Integer m = lo; m <= M; ++m) {
    const double v = out.values[static_cast<std::size_t>(m - 1)];
    if (v > out.indicator) {
      out.indicator = v;
      out.indicator_at = m;
    }
  }
  double early = -std::numeric_limits<double>::infinity();
  double late = -std::numeric_limits<double>::infinity();
  for (Integer m = lo; m < mid; ++m) early = std::max(early, logs[static_cast<std::size_t>(m - 1)]);
  for (Integer m = mid; m <= M; ++m) late = std::max(late, logs[static_cast<std::size_t>(m - 1)]);
  out.decreasing_trend = early <= 0.0 ? late <= 0.0 : late < 0.9 * early;
  const bool bounded = out.indicator <= 1.0 + 1e-6;
  out.classification =
      bounded || out.decreasing_trend ? GrowthClass::plausibly_continuous : GrowthClass::not_continuous;
  return out;
}

}  // namespace detail

}  // namespace idemarith
