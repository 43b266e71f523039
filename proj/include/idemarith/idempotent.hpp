#pragma once

// Arithmetic systems of orthogonal idempotents realized on a truncated
// monomial basis e_offset .. e_{offset+N-1}: P_j(n) is the diagonal that
// keeps exactly the basis vectors e_k with k = j (mod n).

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "idemarith/algebra.hpp"
#include "idemarith/conv.hpp"
#include "idemarith/report.hpp"

namespace idemarith {

enum class ProviderMode {
  // 0/1 congruence indicators, exact.
  congruence_exact,
  // (1/n) sum_l eps_n^{-lj} S(n)^l evaluated in floating point; oracle only.
  dft_float,
};

// eps_n^k = exp(2 pi i k / n), with the quarter turns returned exactly.
Complex unit_root(Integer n, Integer k);

class IdempotentSystem {
 public:
  IdempotentSystem(std::size_t dim, int offset,
                   ProviderMode mode = ProviderMode::congruence_exact);

  std::size_t dimension() const { return dim_; }
  int offset() const { return offset_; }
  ProviderMode mode() const { return mode_; }

  // P_j(n) for any integer j (reduced mod n) and n >= 1.
  DiagonalOperator projection(Integer j, Integer n) const;
  DiagonalOperator unit() const { return DiagonalOperator::identity(dim_, offset_); }
  DiagonalOperator zero() const { return DiagonalOperator::zero(dim_, offset_); }

  // n -> P_j(n) on 1..n_max.
  AlgFunction<DiagonalOperator> slice(Integer j, Integer n_max) const;

 private:
  std::size_t dim_;
  int offset_;
  ProviderMode mode_;
};

// Anything that hands out P_j(n) on a fixed truncated basis.
template <class P>
concept ProjectionProvider = requires(const P& p, Integer j, Integer n) {
  { p.projection(j, n) } -> std::same_as<DiagonalOperator>;
  { p.dimension() } -> std::convertible_to<std::size_t>;
  { p.offset() } -> std::convertible_to<int>;
};

struct AxiomCheck {
  // "I", "II", "III" or "completeness"
  std::string axiom;
  Integer n;
  Integer j;
  // Second index: i for axiom I, r for axiom III, 0 otherwise.
  Integer r;
  double residual;
  bool pass;
};

struct AxiomReport {
  std::size_t dim = 0;
  Integer n_limit = 0;
  int r_max = 0;
  std::vector<AxiomCheck> checks;

  std::size_t failures() const {
    std::size_t out = 0;
    for (const auto& c : checks) out += c.pass ? 0 : 1;
    return out;
  }
  bool passed() const { return failures() == 0; }
};

// Level bound n_limit * r_max must stay under this.
inline constexpr Integer kMaxAxiomLevel = 1'000'000;

// Checks, for n <= n_limit and j < n:
//   I    P_i(n) P_j(n) = delta_ij P_i(n)
//   II   P_{j+n}(n) = P_j(n)
//   III  P_j(n) = sum_{k=1}^{r} P_{j+kn}(nr), r <= r_max
//   completeness  sum_j P_j(n) = e
template <ProjectionProvider P>
AxiomReport verify_axioms(const P& provider, Integer n_limit, int r_max = 6,
                          double tol = kDefaultTolerance) {
  if (n_limit < 1 || r_max < 1) throw DomainError("verify_axioms: limits must be positive");
  if (n_limit * r_max > kMaxAxiomLevel) throw DomainError("verify_axioms: level bound exceeded");
  AxiomReport out;
  out.dim = provider.dimension();
  out.n_limit = n_limit;
  out.r_max = r_max;
  auto push = [&](const char* axiom, Integer n, Integer j, Integer r, double res) {
    out.checks.push_back({axiom, n, j, r, res, res <= tol});
  };
  const auto e = DiagonalOperator::identity(provider.dimension(), provider.offset());
  const auto zero = DiagonalOperator::zero(provider.dimension(), provider.offset());
  for (Integer n = 1; n <= n_limit; ++n) {
    std::vector<DiagonalOperator> level;
    level.reserve(static_cast<std::size_t>(n));
    for (Integer j = 0; j < n; ++j) level.push_back(provider.projection(j, n));

    for (Integer i = 0; i < n; ++i) {
      for (Integer j = 0; j < n; ++j) {
        const auto& pi = level[static_cast<std::size_t>(i)];
        const auto expected = i == j ? pi : zero;
        push("I", n, j, i, distance(pi * level[static_cast<std::size_t>(j)], expected));
      }
    }
    for (Integer j = 0; j < n; ++j) {
      push("II", n, j, 0, distance(provider.projection(j + n, n), level[static_cast<std::size_t>(j)]));
    }
    for (Integer j = 0; j < n; ++j) {
      for (Integer r = 1; r <= r_max; ++r) {
        DiagonalOperator sum = zero;
        for (Integer k = 1; k <= r; ++k) sum += provider.projection(j + k * n, n * r);
        push("III", n, j, r, distance(sum, level[static_cast<std::size_t>(j)]));
      }
    }
    DiagonalOperator total = zero;
    for (const auto& p : level) total += p;
    push("completeness", n, 0, 0, distance(total, e));
  }
  return out;
}

struct ProductLawResult {
  // CRT solution mod lcm(n, m), empty when gcd(n, m) does not divide l - k.
  std::optional<Integer> j;
  Integer lcm;
  DiagonalOperator predicted;
  DiagonalOperator product;
  double residual;
  bool agree;
};

// P_k(n) P_l(m) against P_j(lcm(n, m)) or zero.
ProductLawResult product_law(const IdempotentSystem& system, Integer k, Integer n,
                             Integer l, Integer m, double tol = kDefaultTolerance);

struct DivisorProductResult {
  bool congruent;  // k = j (mod n)
  DiagonalOperator predicted;
  DiagonalOperator product;
  double residual;
  bool agree;
};

// P_j(n) P_k(m) for n | m: P_k(m) when k = j (mod n), else zero.
// Throws DomainError when n does not divide m.
DivisorProductResult divisor_product_law(const IdempotentSystem& system, Integer j,
                                         Integer n, Integer k, Integer m,
                                         double tol = kDefaultTolerance);

// (alpha P_j box beta P_j)(n) = (alpha box beta)(n) P_j(n) and the unitary
// analogue, for n <= n_max; plus P_j box P_j = M_2 P_j and
// P_j unitary P_j = 2^omega P_j.
Report weighted_product_identities(const ScalarFunction& alpha, const ScalarFunction& beta,
                                   const IdempotentSystem& system, Integer j,
                                   Integer n_max, double tol = kDefaultTolerance);

// Scalar form (nu0*alpha)(m) (nu0*beta)(m) = (nu0*(alpha box beta))(m) and
// the operator form (nu0*alpha P_j)(nu0*beta P_j) = nu0*(alpha box beta)P_j.
Report lehmer_identity_check(const ScalarFunction& alpha, const ScalarFunction& beta,
                             const IdempotentSystem& system, Integer j, Integer n_max,
                             double tol = kDefaultTolerance);

}  // namespace idemarith
