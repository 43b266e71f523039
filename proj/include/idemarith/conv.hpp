#pragma once

// Algebra-valued arithmetic functions on 1..n_max and the Dirichlet, lcm and
// unitary products.
//
// Order convention for non-commuting values: every product sums
// f(k) * g(l) with f's value on the left.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "idemarith/algebra.hpp"

namespace idemarith {

// Right inverse exists but the left check f^-1 * f = I failed.
class InverseCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <AlgebraElement T>
class AlgFunction {
 public:
  // values[i] holds f(i + 1).
  explicit AlgFunction(std::vector<T> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("arithmetic function: n_max must be positive");
    for (const T& v : values_) {
      if (!same_shape(v, values_.front())) {
        throw ShapeError("arithmetic function: values have differing shapes");
      }
    }
  }

  template <class Fn>
  static AlgFunction tabulate(Integer n_max, Fn&& fn) {
    if (n_max < 1) throw DomainError("arithmetic function: n_max must be positive");
    std::vector<T> values;
    values.reserve(static_cast<std::size_t>(n_max));
    for (Integer n = 1; n <= n_max; ++n) values.push_back(T(fn(n)));
    return AlgFunction(std::move(values));
  }

  Integer n_max() const { return static_cast<Integer>(values_.size()); }
  std::span<const T> values() const { return values_; }
  const T& prototype() const { return values_.front(); }

  const T& operator()(Integer n) const {
    if (n < 1 || n > n_max()) {
      throw std::out_of_range("arithmetic function: argument " + std::to_string(n) +
                              " outside 1.." + std::to_string(n_max()));
    }
    return values_[static_cast<std::size_t>(n - 1)];
  }

  // Restriction to 1..n_max.
  AlgFunction truncate(Integer n_max) const {
    if (n_max < 1 || n_max > this->n_max()) throw DomainError("truncate: bad n_max");
    return AlgFunction(std::vector<T>(values_.begin(), values_.begin() + n_max));
  }

 private:
  std::vector<T> values_;
};

using ScalarFunction = AlgFunction<Integer>;
using RationalFunction = AlgFunction<Rational>;

// ---------------------------------------------------------------------------
// Standard scalar tables

inline ScalarFunction mobius_function(Integer n_max) {
  return ScalarFunction::tabulate(n_max, [](Integer n) { return Integer(mobius(n)); });
}
inline ScalarFunction totient_function(Integer n_max) {
  return ScalarFunction::tabulate(n_max, [](Integer n) { return totient(n); });
}
inline ScalarFunction jordan_function(int r, Integer n_max) {
  return ScalarFunction::tabulate(n_max, [r](Integer n) { return jordan_totient(r, n); });
}
// nu_k(n) = n^k, k >= 0; nu_0 is the constant one.
inline ScalarFunction nu_function(int k, Integer n_max) {
  if (k < 0) throw DomainError("nu_function: use nu_rational for negative k");
  return ScalarFunction::tabulate(n_max, [k](Integer n) { return ipow(n, k); });
}
inline RationalFunction nu_rational(int k, Integer n_max) {
  return RationalFunction::tabulate(
      n_max, [k](Integer n) { return standard_scalar(StandardKind::nu, n, k).value; });
}
inline ScalarFunction epsilon_function(Integer n_max) {
  return ScalarFunction::tabulate(n_max, [](Integer n) { return Integer(n == 1 ? 1 : 0); });
}
inline ScalarFunction tau_function(Integer n_max) {
  return ScalarFunction::tabulate(n_max, [](Integer n) { return tau(n); });
}

template <AlgebraElement T, AlgebraElement U>
AlgFunction<U> convert(const AlgFunction<T>& f) {
  return AlgFunction<U>::tabulate(f.n_max(), [&](Integer n) { return U(f(n)); });
}

// ---------------------------------------------------------------------------
// Lifting scalars into an algebra

inline Complex to_complex(Integer v) { return Complex(static_cast<double>(v)); }
inline Complex to_complex(const Rational& v) { return Complex(boost::rational_cast<double>(v)); }
inline Complex to_complex(Complex v) { return v; }

// s * x for a scalar s of any carrier.
template <class S, AlgebraElement T>
T scalar_times(const S& s, const T& x) {
  if constexpr (std::is_same_v<S, T>) {
    return s * x;
  } else if constexpr (std::is_same_v<T, Rational> && std::is_same_v<S, Integer>) {
    return Rational(s) * x;
  } else {
    return to_complex(s) * x;
  }
}

// n -> alpha(n) e.
template <class S, AlgebraElement T>
AlgFunction<T> lift(const AlgFunction<S>& alpha, const T& unit) {
  return AlgFunction<T>::tabulate(alpha.n_max(),
                                  [&](Integer n) { return scalar_times(alpha(n), unit); });
}

// n -> alpha(n) f(n).
template <class S, AlgebraElement T>
AlgFunction<T> weight(const AlgFunction<S>& alpha, const AlgFunction<T>& f) {
  if (alpha.n_max() != f.n_max()) throw ShapeError("weight: n_max mismatch");
  return AlgFunction<T>::tabulate(f.n_max(),
                                  [&](Integer n) { return scalar_times(alpha(n), f(n)); });
}

// ---------------------------------------------------------------------------
// Products

namespace detail {

template <AlgebraElement T>
void require_compatible(const AlgFunction<T>& f, const AlgFunction<T>& g, const char* op) {
  if (f.n_max() != g.n_max() || !same_shape(f.prototype(), g.prototype())) {
    throw ShapeError(std::string(op) + ": operands differ in n_max or element shape");
  }
}

}  // namespace detail

template <AlgebraElement T>
AlgFunction<T> dirichlet_convolve(const AlgFunction<T>& f, const AlgFunction<T>& g) {
  detail::require_compatible(f, g, "dirichlet_convolve");
  const Integer n_max = f.n_max();
  std::vector<T> out(static_cast<std::size_t>(n_max), zero_like(f.prototype()));
  for (Integer k = 1; k <= n_max; ++k) {
    for (Integer l = 1; k * l <= n_max; ++l) {
      out[static_cast<std::size_t>(k * l - 1)] += f(k) * g(l);
    }
  }
  return AlgFunction<T>(std::move(out));
}

template <AlgebraElement T>
AlgFunction<T> lcm_convolve(const AlgFunction<T>& f, const AlgFunction<T>& g) {
  detail::require_compatible(f, g, "lcm_convolve");
  const Integer n_max = f.n_max();
  std::vector<T> out(static_cast<std::size_t>(n_max), zero_like(f.prototype()));
  for (Integer k = 1; k <= n_max; ++k) {
    for (Integer l = 1; l <= n_max; ++l) {
      const Integer L = k / std::gcd(k, l) * l;
      if (L <= n_max) out[static_cast<std::size_t>(L - 1)] += f(k) * g(l);
    }
  }
  return AlgFunction<T>(std::move(out));
}

template <AlgebraElement T>
AlgFunction<T> unitary_convolve(const AlgFunction<T>& f, const AlgFunction<T>& g) {
  detail::require_compatible(f, g, "unitary_convolve");
  const Integer n_max = f.n_max();
  std::vector<T> out(static_cast<std::size_t>(n_max), zero_like(f.prototype()));
  for (Integer k = 1; k <= n_max; ++k) {
    for (Integer l = 1; k * l <= n_max; ++l) {
      if (std::gcd(k, l) == 1) out[static_cast<std::size_t>(k * l - 1)] += f(k) * g(l);
    }
  }
  return AlgFunction<T>(std::move(out));
}

// I(1) = e, I(n) = 0 otherwise; `like` supplies the shape.
template <AlgebraElement T>
AlgFunction<T> dirichlet_identity(const T& like, Integer n_max) {
  const T e = unit_like(like);
  const T z = zero_like(like);
  return AlgFunction<T>::tabulate(n_max, [&](Integer n) { return n == 1 ? e : z; });
}

// (nu_0 * alpha)(m) = sum_{d | m} alpha(d), exact in alpha's carrier.
template <AlgebraElement S>
AlgFunction<S> nu0_transform(const AlgFunction<S>& alpha) {
  const auto one = AlgFunction<S>::tabulate(
      alpha.n_max(), [&](Integer) { return unit_like(alpha.prototype()); });
  return dirichlet_convolve(one, alpha);
}

namespace detail {

template <AlgebraElement T, class Product>
void require_two_sided(const AlgFunction<T>& f, const AlgFunction<T>& inv, Product&& product,
                       double tol, const char* op) {
  const auto id = dirichlet_identity(f.prototype(), f.n_max());
  auto max_gap = [&](const AlgFunction<T>& h) {
    double out = 0.0;
    for (Integer n = 1; n <= f.n_max(); ++n) out = std::max(out, distance(h(n), id(n)));
    return out;
  };
  if (max_gap(product(f, inv)) > tol) {
    throw InverseCheckError(std::string(op) + ": right-inverse check failed");
  }
  if (max_gap(product(inv, f)) > tol) {
    throw InverseCheckError(std::string(op) + ": left-inverse check failed");
  }
}

}  // namespace detail

// Right inverse by recursion, then both f * g = I and g * f = I are checked.
// Throws NonInvertibleError if f(1) is singular, InverseCheckError if a
// side of the two-sided check misses `tol`.
template <AlgebraElement T>
AlgFunction<T> dirichlet_inverse(const AlgFunction<T>& f, double tol = kDefaultTolerance) {
  const Integer n_max = f.n_max();
  const T lead_inv = invert(f(1));
  std::vector<T> g;
  g.reserve(static_cast<std::size_t>(n_max));
  g.push_back(lead_inv);
  for (Integer n = 2; n <= n_max; ++n) {
    T acc = zero_like(f.prototype());
    for (Integer d = 2; d <= n; ++d) {
      if (n % d == 0) acc += f(d) * g[static_cast<std::size_t>(n / d - 1)];
    }
    g.push_back(T(zero_like(acc) - lead_inv * acc));
  }
  AlgFunction<T> inv(std::move(g));
  detail::require_two_sided(f, inv, [](const auto& a, const auto& b) { return dirichlet_convolve(a, b); },
                            tol, "dirichlet_inverse");
  return inv;
}

// Inverse for the unitary product; same contract as dirichlet_inverse.
template <AlgebraElement T>
AlgFunction<T> unitary_inverse(const AlgFunction<T>& f, double tol = kDefaultTolerance) {
  const Integer n_max = f.n_max();
  const T lead_inv = invert(f(1));
  std::vector<T> g;
  g.reserve(static_cast<std::size_t>(n_max));
  g.push_back(lead_inv);
  for (Integer n = 2; n <= n_max; ++n) {
    T acc = zero_like(f.prototype());
    for (Integer d = 2; d <= n; ++d) {
      if (n % d == 0 && std::gcd(d, n / d) == 1) acc += f(d) * g[static_cast<std::size_t>(n / d - 1)];
    }
    g.push_back(T(zero_like(acc) - lead_inv * acc));
  }
  AlgFunction<T> inv(std::move(g));
  detail::require_two_sided(f, inv, [](const auto& a, const auto& b) { return unitary_convolve(a, b); },
                            tol, "unitary_inverse");
  return inv;
}

// Inverse for the lcm product. g(n) is multiplied by (nu0 * f)(n), so every
// value of nu0 * f must be invertible, not only f(1); NonInvertibleError
// otherwise.
template <AlgebraElement T>
AlgFunction<T> lcm_inverse(const AlgFunction<T>& f, double tol = kDefaultTolerance) {
  const Integer n_max = f.n_max();
  const auto divisor_sums = nu0_transform(f);
  std::vector<T> g;
  g.reserve(static_cast<std::size_t>(n_max));
  for (Integer n = 1; n <= n_max; ++n) {
    T acc = n == 1 ? unit_like(f.prototype()) : zero_like(f.prototype());
    for (Integer b = 1; b < n; ++b) {
      if (n % b != 0) continue;
      for (Integer a = 1; a <= n; ++a) {
        if (n % a == 0 && std::lcm(a, b) == n) acc = T(acc - f(a) * g[static_cast<std::size_t>(b - 1)]);
      }
    }
    g.push_back(T(invert(divisor_sums(n)) * acc));
  }
  AlgFunction<T> inv(std::move(g));
  detail::require_two_sided(f, inv, [](const auto& a, const auto& b) { return lcm_convolve(a, b); },
                            tol, "lcm_inverse");
  return inv;
}

// ---------------------------------------------------------------------------
// Multiplicativity

struct MultiplicativityResult {
  bool multiplicative = true;
  // First failing coprime pair (n, m): pairs with n, m >= 2 are scanned
  // first in (n, m) order, then pairs involving 1.
  std::optional<std::pair<Integer, Integer>> counterexample;
  double max_residual = 0.0;
  // f(n) equals the ordered product of f(p^a) over the factorization.
  bool prime_power_reconstruction = true;
  bool unit_idempotent = true;
};

template <AlgebraElement T>
MultiplicativityResult is_multiplicative(const AlgFunction<T>& f,
                                         double tol = kDefaultTolerance) {
  MultiplicativityResult out;
  const Integer n_max = f.n_max();
  auto record = [&](Integer n, Integer m) {
    const double r = distance(f(n * m), T(f(n) * f(m)));
    out.max_residual = std::max(out.max_residual, r);
    if (r > tol && !out.counterexample) {
      out.multiplicative = false;
      out.counterexample = std::make_pair(n, m);
    }
  };
  for (Integer n = 2; n <= n_max; ++n) {
    for (Integer m = 2; n * m <= n_max; ++m) {
      if (std::gcd(n, m) == 1) record(n, m);
    }
  }
  for (Integer m = 1; m <= n_max; ++m) {
    record(1, m);
    record(m, 1);
  }
  for (Integer n = 2; n <= n_max; ++n) {
    T prod = unit_like(f.prototype());
    for (const auto& [p, a] : factorize(n)) prod = prod * f(ipow(p, a));
    const double r = distance(prod, f(n));
    out.max_residual = std::max(out.max_residual, r);
    if (r > tol) out.prime_power_reconstruction = false;
  }
  out.unit_idempotent = is_idempotent(f(1), tol);
  return out;
}

// n -> b f(n) b^-1. Throws NonInvertibleError for singular b.
template <AlgebraElement T>
AlgFunction<T> conjugate(const AlgFunction<T>& f, const T& b) {
  if (!same_shape(b, f.prototype())) throw ShapeError("conjugate: shape mismatch");
  const T b_inv = invert(b);
  return AlgFunction<T>::tabulate(f.n_max(), [&](Integer n) { return T(b * f(n) * b_inv); });
}

// Coprime pairs (n, m) where n -> ||f(n)|| fails to be multiplicative.
// Norms are only submultiplicative in general; this collects the evidence.
template <AlgebraElement T, class Norm>
std::vector<std::pair<Integer, Integer>> norm_multiplicativity_failures(
    const AlgFunction<T>& f, Norm&& norm, double tol = kDefaultTolerance) {
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer n = 2; n <= f.n_max(); ++n) {
    for (Integer m = n + 1; n * m <= f.n_max(); ++m) {
      if (std::gcd(n, m) != 1) continue;
      if (std::abs(norm(f(n * m)) - norm(f(n)) * norm(f(m))) > tol) out.emplace_back(n, m);
    }
  }
  return out;
}


}  // namespace idemarith
