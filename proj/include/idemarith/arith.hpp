#pragma once

// Exact scalar number theory: factorization, Moebius/totient/Jordan,
// Ramanujan sums, the CRT solver and Ramanujan-Fourier coefficients of
// even functions. Everything here is integer or rational arithmetic; the
// complex values in EvenFunction are only data carried through.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

// Boost < 1.75 under C++20: rational == integer picks the reversed template
// operator, which calls itself forever. Exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
}  // namespace boost

namespace idemarith {

using Integer = std::int64_t;
using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

// Largest argument accepted by factorize().
inline constexpr Integer kMaxFactorizable = 1'000'000'000'000LL;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimePower {
  Integer prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes; empty for n = 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  Integer value() const;
  bool squarefree() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

// Deterministic trial division. Throws DomainError for n = 0 or n > 10^12.
Factorization factorize(Integer n);

bool is_prime(Integer n);

// Divisors of n, ascending.
std::vector<Integer> divisors(Integer n);
std::vector<Integer> divisors(const Factorization& f);

struct GcdLcm {
  Integer gcd;
  Integer lcm;

  friend bool operator==(const GcdLcm&, const GcdLcm&) = default;
};

GcdLcm euclid(Integer a, Integer b);

// Non-negative remainder of a modulo n (n >= 1).
Integer mod_floor(Integer a, Integer n);

int mobius(Integer n);
Integer totient(Integer n);
Integer jordan_totient(int r, Integer n);
int omega(Integer n);
Integer tau(Integer n);
Integer ipow(Integer base, int exp);

// c_n(j) by the divisor formula sum_{d | gcd(j,n)} d mu(n/d). Any integer j.
Integer ramanujan_sum(Integer n, Integer j);

// c_n(j) as the floating root-of-unity sum; oracle only.
Complex ramanujan_sum_roots(Integer n, Integer j);

// Number of s-tuples of positive integers whose lcm is n:
// prod_k ((a_k + 1)^s - a_k^s).
Integer lcm_tuple_count(int s, Integer n);

enum class StandardKind { omega, tau, nu, epsilon, one };

struct StandardScalar {
  Rational value;
  bool integral;
};

// omega, tau, nu_k, epsilon and the constant one. Only nu with k < 0 can be
// non-integral.
StandardScalar standard_scalar(StandardKind kind, Integer n, int k = 0);

// Unique j in [0, lcm(n, m)) with j = k (mod n) and j = l (mod m), or empty
// when gcd(n, m) does not divide l - k.
std::optional<Integer> crt_solve(Integer k, Integer n, Integer l, Integer m);

// sum_{r | n} c_n(n/r) c_r(l); equals n when gcd(l, n) = 1, else 0.
Integer ramanujan_orthogonality(Integer n, Integer l);

// Function on the positive integers whose value depends only on gcd(., d).
class EvenFunction {
 public:
  // `values` must be keyed by exactly the divisors of `modulus`.
  EvenFunction(Integer modulus, std::map<Integer, Complex> values);

  // Builds from a table of alpha(1..d); throws DomainError if the table is
  // not even mod d.
  static EvenFunction from_table(Integer modulus,
                                 const std::vector<Complex>& values,
                                 double tol = 1e-12);

  template <class Fn>
  static EvenFunction from_divisor_values(Integer modulus, Fn&& fn) {
    std::map<Integer, Complex> values;
    for (Integer r : divisors(modulus)) values.emplace(r, Complex(fn(r)));
    return EvenFunction(modulus, std::move(values));
  }

  Integer modulus() const { return modulus_; }
  const std::map<Integer, Complex>& values() const { return values_; }
  Complex operator()(Integer n) const;

 private:
  Integer modulus_;
  std::map<Integer, Complex> values_;
};

enum class RfNormalization { paper, orthogonal };

struct RfCoefficients {
  Integer modulus;
  RfNormalization normalization;
  std::map<Integer, Complex> coefficients;
};

struct RfTransform {
  RfCoefficients paper;
  RfCoefficients orthogonal;
  // max_r |paper(r) - d * orthogonal(r)|
  double scale_residual;
  // max_{1<=n<=d} |alpha(n) - sum_r orthogonal(r) c_r(n)|
  double reconstruction_residual;
};

// Both Ramanujan-Fourier normalizations:
//   paper:      R(r) = sum_{delta | d} alpha(d/delta) c_delta(d/r)
//   orthogonal: a(r) = 1/(d phi(r)) sum_{k=1}^{d} alpha(k) c_r(k)
// Throws DomainError if either residual exceeds `tol`.
RfTransform rf_transform(const EvenFunction& alpha, double tol = 1e-9);

}  // namespace idemarith
