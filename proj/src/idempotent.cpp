#include "idemarith/idempotent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace idemarith {

Complex unit_root(Integer n, Integer k) {
  if (n < 1) throw DomainError("unit_root: order must be positive");
  const Integer r = mod_floor(k, n);
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(n));
}

IdempotentSystem::IdempotentSystem(std::size_t dim, int offset, ProviderMode mode)
    : dim_(dim), offset_(offset), mode_(mode) {
  if (dim_ == 0) throw DomainError("idempotent system: dimension must be positive");
  if (offset_ != 0 && offset_ != 1) throw DomainError("idempotent system: offset must be 0 or 1");
}

DiagonalOperator IdempotentSystem::projection(Integer j, Integer n) const {
  if (n < 1) throw DomainError("projection: level must be positive");
  const Integer jr = mod_floor(j, n);
  if (mode_ == ProviderMode::congruence_exact) {
    return DiagonalOperator::from_index(dim_, offset_, [&](Integer k) {
      return mod_floor(k, n) == jr ? 1.0 : 0.0;
    });
  }
  // sum_l eps_n^{-lj} S(n)^l / n, with S(n) e_k = eps_n^k e_k
  std::vector<Complex> acc(dim_, Complex(0.0));
  for (Integer l = 0; l < n; ++l) {
    const Complex phase = unit_root(n, -l * jr);
    for (std::size_t i = 0; i < dim_; ++i) {
      const Integer k = static_cast<Integer>(i) + offset_;
      acc[i] += phase * unit_root(n, l * mod_floor(k, n));
    }
  }
  for (auto& x : acc) x /= static_cast<double>(n);
  return DiagonalOperator(offset_, std::move(acc));
}

AlgFunction<DiagonalOperator> IdempotentSystem::slice(Integer j, Integer n_max) const {
  return AlgFunction<DiagonalOperator>::tabulate(n_max,
                                                 [&](Integer n) { return projection(j, n); });
}

ProductLawResult product_law(const IdempotentSystem& system, Integer k, Integer n,
                             Integer l, Integer m, double tol) {
  const auto [g, lcm] = euclid(n, m);
  const auto j = crt_solve(k, n, l, m);
  DiagonalOperator predicted = j ? system.projection(*j, lcm) : system.zero();
  DiagonalOperator product = system.projection(k, n) * system.projection(l, m);
  const double residual = distance(product, predicted);
  return {j, lcm, std::move(predicted), std::move(product), residual, residual <= tol};
}

DivisorProductResult divisor_product_law(const IdempotentSystem& system, Integer j,
                                         Integer n, Integer k, Integer m, double tol) {
  if (n < 1 || m < 1 || m % n != 0) {
    throw DomainError("divisor_product_law: level n must divide m");
  }
  const bool congruent = mod_floor(k - j, n) == 0;
  DiagonalOperator predicted = congruent ? system.projection(k, m) : system.zero();
  DiagonalOperator product = system.projection(j, n) * system.projection(k, m);
  const double residual = distance(product, predicted);
  return {congruent, std::move(predicted), std::move(product), residual, residual <= tol};
}

namespace {

template <AlgebraElement T>
double max_gap(const AlgFunction<T>& a, const AlgFunction<T>& b) {
  double out = 0.0;
  for (Integer n = 1; n <= a.n_max(); ++n) out = std::max(out, distance(a(n), b(n)));
  return out;
}

}  // namespace

Report weighted_product_identities(const ScalarFunction& alpha, const ScalarFunction& beta,
                                   const IdempotentSystem& system, Integer j,
                                   Integer n_max, double tol) {
  Report out;
  const Params params{{"j", j}, {"n_max", n_max}, {"dim", Integer(system.dimension())}};
  const auto a = alpha.truncate(n_max);
  const auto b = beta.truncate(n_max);
  const auto p = system.slice(j, n_max);

  out.add("weighted lcm product (alpha P_j box beta P_j) = (alpha box beta) P_j", params,
          max_gap(lcm_convolve(weight(a, p), weight(b, p)), weight(lcm_convolve(a, b), p)),
          tol);
  out.add("weighted unitary product (alpha P_j u beta P_j) = (alpha u beta) P_j", params,
          max_gap(unitary_convolve(weight(a, p), weight(b, p)),
                  weight(unitary_convolve(a, b), p)),
          tol);

  const auto m2 = ScalarFunction::tabulate(n_max, [](Integer n) { return lcm_tuple_count(2, n); });
  const auto two_omega =
      ScalarFunction::tabulate(n_max, [](Integer n) { return ipow(2, omega(n)); });
  out.add("P_j box P_j = M_2 P_j", params, max_gap(lcm_convolve(p, p), weight(m2, p)), tol);
  out.add("P_j u P_j = 2^omega P_j", params, max_gap(unitary_convolve(p, p), weight(two_omega, p)),
          tol);
  return out;
}

Report lehmer_identity_check(const ScalarFunction& alpha, const ScalarFunction& beta,
                             const IdempotentSystem& system, Integer j, Integer n_max,
                             double tol) {
  Report out;
  const auto a = alpha.truncate(n_max);
  const auto b = beta.truncate(n_max);
  const auto box = lcm_convolve(a, b);

  const auto na = nu0_transform(a);
  const auto nb = nu0_transform(b);
  const auto nbox = nu0_transform(box);
  double scalar_res = 0.0;
  for (Integer m = 1; m <= n_max; ++m) {
    scalar_res = std::max(scalar_res, std::abs(static_cast<double>(na(m) * nb(m) - nbox(m))));
  }
  out.add("(nu0*alpha)(nu0*beta) = nu0*(alpha box beta)", {{"n_max", n_max}}, scalar_res, tol);

  const auto p = system.slice(j, n_max);
  const auto nu0 = lift(nu_function(0, n_max), system.unit());
  const auto lhs_a = dirichlet_convolve(nu0, weight(a, p));
  const auto lhs_b = dirichlet_convolve(nu0, weight(b, p));
  const auto rhs = dirichlet_convolve(nu0, weight(box, p));
  double op_res = 0.0;
  for (Integer m = 1; m <= n_max; ++m) {
    op_res = std::max(op_res, distance(DiagonalOperator(lhs_a(m) * lhs_b(m)), rhs(m)));
  }
  out.add("(nu0*alpha P_j)(nu0*beta P_j) = nu0*(alpha box beta) P_j",
          {{"j", j}, {"n_max", n_max}, {"dim", Integer(system.dimension())}}, op_res, tol);
  return out;
}

}  // namespace idemarith
