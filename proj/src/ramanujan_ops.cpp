#include "idemarith/ramanujan_ops.hpp"

#include <numeric>

namespace idemarith {

DiagonalOperator s_operator(Integer n, std::size_t dim, int offset) {
  if (n < 1) throw DomainError("s_operator: order must be positive");
  return DiagonalOperator::from_index(dim, offset, [n](Integer k) { return unit_root(n, k); });
}

DiagonalOperator OperatorFamily::c(Integer j, Integer n, CConstruction how) const {
  if (n < 1) throw DomainError("c_operator: level must be positive");
  switch (how) {
    case CConstruction::root_of_unity: {
      const DiagonalOperator step = s(n);
      DiagonalOperator power = step;
      DiagonalOperator out = system_.zero();
      for (Integer k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) out += unit_root(n, -j * k) * power;
        power *= step;
      }
      return out;
    }
    case CConstruction::mobius_sum: {
      DiagonalOperator out = system_.zero();
      for (Integer d : divisors(n)) {
        const int mu = mobius(d);
        if (mu != 0) out += Complex(static_cast<double>(mu * (n / d))) * p(j, n / d);
      }
      return out;
    }
    case CConstruction::prime_product: {
      DiagonalOperator out = system_.unit();
      for (const auto& [prime, a] : factorize(n)) {
        const Integer pa = ipow(prime, a);
        out *= Complex(static_cast<double>(pa)) * p(j, pa) -
               Complex(static_cast<double>(pa / prime)) * p(j, pa / prime);
      }
      return out;
    }
    case CConstruction::entrywise:
      return DiagonalOperator::from_index(dimension(), offset(), [&](Integer m) {
        return static_cast<double>(ramanujan_sum(n, m - j));
      });
  }
  throw DomainError("c_operator: unknown construction");
}

DiagonalOperator OperatorFamily::t(Integer r, Integer j, Integer n) const {
  if (n < 1 || r < 1 || n % r != 0) {
    throw DomainError("t_operator: r = " + std::to_string(r) + " does not divide n = " +
                      std::to_string(n));
  }
  DiagonalOperator out = system_.zero();
  for (Integer k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == n / r) out += p(k + j, n);
  }
  return out;
}

namespace {

Params jn_params(const OperatorFamily& ops, Integer j, Integer n) {
  return {{"j", j}, {"n", n}, {"dim", static_cast<Integer>(ops.dimension())}};
}

}  // namespace

Report t_top_identities(const OperatorFamily& ops, Integer j, Integer n, double tol) {
  Report out;
  const auto params = jn_params(ops, j, n);
  const DiagonalOperator top = ops.t_top(j, n);
  const DiagonalOperator e = ops.system().unit();

  DiagonalOperator mobius_form = ops.system().zero();
  for (Integer delta : divisors(n)) {
    const int mu = mobius(delta);
    if (mu != 0) mobius_form += Complex(static_cast<double>(mu)) * ops.p(j, delta);
  }
  DiagonalOperator product_form = e;
  for (const auto& pp : factorize(n)) product_form *= e - ops.p(j, pp.prime);

  out.add("T_{n,j}(n) = sum_{delta|n} mu(delta) P_j(delta)", params,
          distance(top, mobius_form), tol);
  out.add("T_{n,j}(n) = prod_{p|n} (e - P_j(p))", params, distance(top, product_form), tol);

  const auto entrywise = DiagonalOperator::from_index(
      ops.dimension(), ops.offset(),
      [&](Integer m) { return std::gcd(mod_floor(m - j, n), n) == 1 ? 1.0 : 0.0; });
  out.add("T_{n,j}(n) e_m = [gcd(m - j, n) = 1] e_m", params, distance(top, entrywise), tol);

  const auto f = factorize(n);
  if (f.size() == 1) {
    const auto& [prime, a] = f.pairs().front();
    const DiagonalOperator drop = e - ops.p(j, prime);
    out.add("T_j(p^k) = e - P_j(p), k >= 1", params, distance(top, drop), tol);
    if (a >= 2) {
      const double norm = operator_norm(top);
      out.errata.push_back({"T_j(p^k) = 0 for k >= 2",
                            params,
                            {{"norm_T", norm}, {"prime", double(prime)}, {"k", double(a)}},
                            norm == 0.0,
                            "the coprime indicator mod p^k equals e - P_j(p) for every k >= 1"});
    }
  }
  return out;
}

Report t_decomposition(const OperatorFamily& ops, Integer j, Integer n, double tol) {
  Report out;
  const auto params = jn_params(ops, j, n);
  const auto divs = divisors(n);
  std::vector<DiagonalOperator> members;
  members.reserve(divs.size());
  for (Integer r : divs) members.push_back(ops.t(r, j, n));

  DiagonalOperator total = ops.system().zero();
  for (const auto& t : members) total += t;
  out.add("sum_{r|n} T_{r,j}(n) = e", params, distance(total, ops.system().unit()), tol);

  double orth = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      const auto expected = a == b ? members[a] : ops.system().zero();
      orth = std::max(orth, distance(DiagonalOperator(members[a] * members[b]), expected));
    }
  }
  out.add("T_{r,j}(n) T_{r',j}(n) = delta_{rr'} T_{r,j}(n)", params, orth, tol);

  double entry = 0.0;
  for (std::size_t a = 0; a < divs.size(); ++a) {
    const Integer r = divs[a];
    const auto expected = DiagonalOperator::from_index(
        ops.dimension(), ops.offset(),
        [&](Integer m) { return std::gcd(mod_floor(m - j, n), n) == n / r ? 1.0 : 0.0; });
    entry = std::max(entry, distance(members[a], expected));
  }
  out.add("T_{r,j}(n) e_m = [gcd(m - j, n) = n/r] e_m", params, entry, tol);

  const auto count_gap = static_cast<double>(std::abs(static_cast<Integer>(members.size()) - tau(n)));
  out.add("#{T_{r,j}(n) : r | n} = tau(n)", params, count_gap, tol);
  return out;
}

Report c_t_transforms(const OperatorFamily& ops, Integer j, Integer n, double tol) {
  Report out;
  const auto params = jn_params(ops, j, n);
  DiagonalOperator forward = ops.system().zero();
  DiagonalOperator backward = ops.system().zero();
  for (Integer r : divisors(n)) {
    const Complex weight(static_cast<double>(ramanujan_sum(n, n / r)));
    forward += weight * ops.t(r, j, n);
    backward += weight * ops.c(j, r);
  }
  backward /= static_cast<double>(n);
  out.add("C_j(n) = sum_{r|n} c_n(n/r) T_{r,j}(n)", params, distance(ops.c(j, n), forward), tol);
  out.add("T_{n,j}(n) = (1/n) sum_{r|n} c_n(n/r) C_j(r)", params,
          distance(ops.t_top(j, n), backward), tol);
  return out;
}

Report c_constructions(const OperatorFamily& ops, Integer j, Integer n, double tol) {
  Report out;
  const auto params = jn_params(ops, j, n);
  const auto mob = ops.c(j, n, CConstruction::mobius_sum);
  out.add("C_j(n) = mu*nu_1 P_j(n) vs root-of-unity sum", params,
          distance(mob, ops.c(j, n, CConstruction::root_of_unity)), tol);
  out.add("C_j(n) = n prod (P_j(p^a) - P_j(p^{a-1})/p)", params,
          distance(mob, ops.c(j, n, CConstruction::prime_product)), tol);
  out.add("C_j(n) e_m = c_n(m - j) e_m", params,
          distance(mob, ops.c(j, n, CConstruction::entrywise)), tol);
  return out;
}

Report even_function_identity(const OperatorFamily& ops, const EvenFunction& alpha,
                              Integer j, Integer n, double tol) {
  if (n < 1 || n % alpha.modulus() != 0) {
    throw DomainError("even_function_identity: alpha is not even mod " + std::to_string(n));
  }
  const auto alpha_n = EvenFunction::from_divisor_values(n, [&](Integer r) { return alpha(r); });
  const auto coeffs = rf_transform(alpha_n).paper.coefficients;

  DiagonalOperator lhs = ops.system().zero();
  DiagonalOperator rhs = ops.system().zero();
  for (Integer r : divisors(n)) {
    lhs += alpha_n(n / r) * ops.c(j, r);
    rhs += coeffs.at(r) * ops.t(r, j, n);
  }
  Report out;
  out.add("sum_{r|n} alpha(n/r) C_j(r) = sum_{r|n} R(alpha)(r) T_{r,j}(n)",
          jn_params(ops, j, n), distance(lhs, rhs), tol);
  return out;
}

std::size_t default_truncation(Integer n) {
  if (n < 1) throw DomainError("default_truncation: level must be positive");
  const Integer k = (32 + n - 1) / n;
  return static_cast<std::size_t>(k * n);
}

}  // namespace idemarith
