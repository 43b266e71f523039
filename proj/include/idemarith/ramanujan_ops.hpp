#pragma once

// Operator-valued Ramanujan sums C_j(n) and the divisor-class idempotents
// T_{r,j}(n), built on an IdempotentSystem. In the diagonal realization
//   C_j(n) e_m     = c_n(m - j) e_m
//   T_{r,j}(n) e_m = [gcd(m - j, n) = n / r] e_m
// so each operator identity below is a scalar Ramanujan-sum identity
// evaluated entrywise.

#include "idemarith/arith.hpp"
#include "idemarith/idempotent.hpp"
#include "idemarith/report.hpp"

namespace idemarith {

// S(n) e_k = eps_n^k e_k.
DiagonalOperator s_operator(Integer n, std::size_t dim, int offset = 0);

enum class CConstruction {
  // sum_{gcd(k,n)=1} eps_n^{-jk} S(n)^k
  root_of_unity,
  // sum_{d | n} mu(d) (n/d) P_j(n/d)
  mobius_sum,
  // prod over p^a || n of (p^a P_j(p^a) - p^{a-1} P_j(p^{a-1}))
  prime_product,
  // entries c_n(m - j) read off directly
  entrywise,
};

class OperatorFamily {
 public:
  explicit OperatorFamily(IdempotentSystem system) : system_(system) {}

  const IdempotentSystem& system() const { return system_; }
  std::size_t dimension() const { return system_.dimension(); }
  int offset() const { return system_.offset(); }

  DiagonalOperator s(Integer n) const { return s_operator(n, dimension(), offset()); }
  DiagonalOperator p(Integer j, Integer n) const { return system_.projection(j, n); }
  DiagonalOperator c(Integer j, Integer n,
                     CConstruction how = CConstruction::mobius_sum) const;
  // Throws DomainError unless r | n.
  DiagonalOperator t(Integer r, Integer j, Integer n) const;
  // T_{n,j}(n)
  DiagonalOperator t_top(Integer j, Integer n) const { return t(n, j, n); }

 private:
  IdempotentSystem system_;
};

// T_{n,j}(n) = sum_{delta | n} mu(delta) P_j(delta) = prod_{p | n} (e - P_j(p)),
// and T_j(p^k) = e - P_j(p) for every k >= 1. The displayed "0 for k >= 2"
// case is evaluated into the erratum list.
Report t_top_identities(const OperatorFamily& ops, Integer j, Integer n,
                        double tol = kDefaultTolerance);

// The tau(n) operators T_{r,j}(n), r | n, sum to e and are mutually
// orthogonal idempotents.
Report t_decomposition(const OperatorFamily& ops, Integer j, Integer n,
                       double tol = kDefaultTolerance);

// C_j(n) = sum_{r|n} c_n(n/r) T_{r,j}(n) and
// T_{n,j}(n) = (1/n) sum_{r|n} c_n(n/r) C_j(r).
Report c_t_transforms(const OperatorFamily& ops, Integer j, Integer n,
                      double tol = kDefaultTolerance);

// Agreement of the four C_j(n) constructions, the entrywise
// characterization against arith-core and the prime-power closed form.
Report c_constructions(const OperatorFamily& ops, Integer j, Integer n,
                       double tol = kDefaultTolerance);

// sum_{r|n} alpha(n/r) C_j(r) = sum_{r|n} R(alpha)(r) T_{r,j}(n) with R in
// the paper normalization (no 1/n). alpha must be even mod a divisor of n;
// otherwise DomainError.
Report even_function_identity(const OperatorFamily& ops, const EvenFunction& alpha,
                              Integer j, Integer n, double tol = kDefaultTolerance);

// Smallest multiple of n that is >= 32.
std::size_t default_truncation(Integer n);

}  // namespace idemarith
