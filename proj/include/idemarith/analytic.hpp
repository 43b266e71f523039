#pragma once

// Truncated monomial model of analytic functions on a disc. Basis vectors
// are e_k = z^k for k in [offset, offset + N); offset 0 is the whole space,
// offset 1 the subspace of functions vanishing at 0.
//
// P(alpha) = sum_n alpha(n) P_0(n) acts on z^m (m >= 1) as multiplication by
// (nu0 * alpha)(m), so every operator identity here is a divisor-sum identity.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "idemarith/algebra.hpp"
#include "idemarith/conv.hpp"
#include "idemarith/report.hpp"

namespace idemarith {

using BigInt = boost::multiprecision::cpp_int;

struct TruncatedSpace {
  std::size_t dim;
  int offset;

  TruncatedSpace(std::size_t dim, int offset);
  Integer first_index() const { return offset; }
  Integer last_index() const { return offset + static_cast<Integer>(dim) - 1; }
};

struct C0T0 {
  DiagonalOperator c0;  // e_m -> c_n(m) e_m
  DiagonalOperator t0;  // e_m -> [gcd(n, m) = 1] e_m
};

C0T0 c0_t0_diagonals(Integer n, const TruncatedSpace& space);

struct DetC0 {
  BigInt direct;       // prod_{k=1}^{N} c_n(k)
  BigInt closed_form;  // prod_{p|n} (1-p)^{floor(N/p)} if n squarefree, else 0
  BigInt sign_corrected;  // (-1)^{N omega(n)} closed_form
  bool squarefree;
  bool agree;            // direct == closed_form
  bool corrected_agree;  // direct == sign_corrected
};

// Determinant of C_0(n) restricted to e_1..e_N, two ways, exactly. The
// displayed closed form misses a factor (-1)^{N omega(n)}: for squarefree n
// each prime contributes (p-1)^{floor(N/p)} (-1)^{N - floor(N/p)}.
DetC0 det_c0(Integer n, Integer N);

// trace C_0(n)|_N = sum_{d|n} d mu(n/d) floor(N/d) and
// trace T_0(n)|_N = #{m <= N : gcd(m, n) = 1} = sum_{r|n} mu(r) floor(N/r).
// The other displayed expressions of those chains go to the erratum list.
Report trace_identities(Integer n, Integer N);

// Diagonal of P(alpha) on an offset-1 space: entries (nu0 * alpha)(m),
// m = 1..N. Throws DomainError for offset 0 or a table shorter than N.
template <class S>
DiagonalOperator p_operator(const AlgFunction<S>& alpha, const TruncatedSpace& space) {
  if (space.offset != 1) {
    throw DomainError("p_operator: needs the offset-1 space (the constant term diverges)");
  }
  if (alpha.n_max() < static_cast<Integer>(space.dim)) {
    throw DomainError("p_operator: alpha must be tabulated up to the dimension");
  }
  const auto transform = nu0_transform(alpha.truncate(static_cast<Integer>(space.dim)));
  return DiagonalOperator::from_index(space.dim, 1,
                                      [&](Integer m) { return to_complex(transform(m)); });
}

// P(alpha box beta) = P(alpha) P(beta) for the given pairs, and
// (nu0 * J_r)(m) = m^r with J_r built as the r-fold lcm power of phi,
// for r <= 3, m <= n_max.
Report p_operator_identities(const TruncatedSpace& space, Integer n_max,
                             const std::vector<std::pair<ScalarFunction, ScalarFunction>>& pairs,
                             double tol = kDefaultTolerance);

struct ShiftOperators {
  DenseMatrix u;            // e_m -> e_{m+1}, dropped at the top edge
  DenseMatrix u_star;       // e_m -> e_{m-1}, e_first -> 0
  DenseMatrix integration;  // e_m -> e_{m+1} / (m+1), dropped at the top edge
  DenseMatrix theta;        // e_m -> m e_m
};

ShiftOperators shift_operators(const TruncatedSpace& space);

// Compares the diagonal of I U* with P(mu*nu_1) and P(mu*nu_{-1}) on an
// offset-1 space. Checks: I U* is diagonal; (nu0*mu*nu_{-1})(m) = 1/m
// exactly; I U* entry m equals 1/m for 2 <= m <= min(n_max, N). Which
// candidate matches, and the e_1 edge, are recorded as errata.
Report iu_star_representation(const TruncatedSpace& space, Integer n_max);

enum class GrowthClass { plausibly_continuous, not_continuous };

struct GrowthDiagnostic {
  Integer prefix;                // M
  std::vector<double> values;    // |(nu0*alpha)(m)|^{1/m}, m = 1..M
  double indicator;              // max over m in [ceil(M/2), M]
  Integer indicator_at;          // argmax m
  bool decreasing_trend;         // log-excess shrinks across the upper half
  GrowthClass classification;
};

// Finite-prefix stand-in for limsup |(nu0*alpha)(m)|^{1/m} <= 1. Never a
// limit: the indicator passes at <= 1 + 1e-6, otherwise the upper half is
// split in two and the max of log(value) over the later quarter must be
// below 0.9 times that of the earlier quarter.
template <class S>
GrowthDiagnostic growth_indicator(const AlgFunction<S>& alpha, Integer M);

std::string growth_class_name(GrowthClass c);

// ---------------------------------------------------------------------------

namespace detail {
GrowthDiagnostic growth_from_transform(const std::vector<Complex>& transform);
}

template <class S>
GrowthDiagnostic growth_indicator(const AlgFunction<S>& alpha, Integer M) {
  if (M < 4) throw DomainError("growth_indicator: prefix must be at least 4");
  if (alpha.n_max() < M) throw DomainError("growth_indicator: alpha shorter than the prefix");
  // Complex carrier so that fast-growing alpha does not overflow.
  const auto as_complex = AlgFunction<Complex>::tabulate(
      M, [&](Integer n) { return to_complex(alpha(n)); });
  const auto t = nu0_transform(as_complex);
  return detail::growth_from_transform(std::vector<Complex>(t.values().begin(), t.values().end()));
}

}  // namespace idemarith
