#include "idemarith/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace idemarith {

Factorization::Factorization(std::vector<PrimePower> pairs)
    : pairs_(std::move(pairs)) {
  Integer last = 1;
  for (const auto& [p, a] : pairs_) {
    if (p <= last || a < 1 || !is_prime(p)) {
      throw DomainError("factorization: primes must be increasing and exponents positive");
    }
    last = p;
  }
}

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& [p, a] : pairs_) v *= ipow(p, a);
  return v;
}

bool Factorization::squarefree() const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

Factorization factorize(Integer n) {
  if (n < 1 || n > kMaxFactorizable) {
    throw DomainError("factorize: argument " + std::to_string(n) +
                      " outside [1, 10^12]");
  }
  std::vector<PrimePower> pairs;
  auto strip = [&](Integer p) {
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) pairs.push_back({p, a});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (Integer p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) pairs.push_back({n, 1});
  return Factorization(std::move(pairs));
}

bool is_prime(Integer n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (Integer p = 5; p * p <= n; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

std::vector<Integer> divisors(const Factorization& f) {
  std::vector<Integer> out{1};
  for (const auto& [p, a] : f) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int e = 1; e <= a; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> divisors(Integer n) { return divisors(factorize(n)); }

GcdLcm euclid(Integer a, Integer b) {
  if (a < 1 || b < 1) throw DomainError("euclid: arguments must be positive");
  const Integer g = std::gcd(a, b);
  return {g, a / g * b};
}

Integer mod_floor(Integer a, Integer n) {
  const Integer r = a % n;
  return r < 0 ? r + n : r;
}

Integer ipow(Integer base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

int mobius(Integer n) {
  const auto f = factorize(n);
  if (!f.squarefree()) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

Integer totient(Integer n) {
  Integer out = n;
  for (const auto& pp : factorize(n)) out = out / pp.prime * (pp.prime - 1);
  return out;
}

Integer jordan_totient(int r, Integer n) {
  if (r < 1) throw DomainError("jordan_totient: order must be positive");
  // n^r prod (1 - p^-r) = prod p^{r(a-1)} (p^r - 1)
  Integer out = 1;
  for (const auto& [p, a] : factorize(n)) {
    out *= ipow(p, r * (a - 1)) * (ipow(p, r) - 1);
  }
  return out;
}

int omega(Integer n) { return static_cast<int>(factorize(n).size()); }

Integer tau(Integer n) {
  Integer out = 1;
  for (const auto& pp : factorize(n)) out *= pp.exponent + 1;
  return out;
}

Integer ramanujan_sum(Integer n, Integer j) {
  if (n < 1) throw DomainError("ramanujan_sum: modulus must be positive");
  const Integer g = std::gcd(mod_floor(j, n), n);  // gcd(0, n) = n
  Integer out = 0;
  for (Integer d : divisors(g)) out += d * mobius(n / d);
  return out;
}

Complex ramanujan_sum_roots(Integer n, Integer j) {
  if (n < 1) throw DomainError("ramanujan_sum_roots: modulus must be positive");
  Complex sum{0.0, 0.0};
  const Integer jr = mod_floor(j, n);
  for (Integer k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>((jr * k) % n) /
                         static_cast<double>(n);
    sum += std::polar(1.0, angle);
  }
  return sum;
}

Integer lcm_tuple_count(int s, Integer n) {
  if (s < 1) throw DomainError("lcm_tuple_count: tuple length must be positive");
  Integer out = 1;
  for (const auto& pp : factorize(n)) {
    out *= ipow(pp.exponent + 1, s) - ipow(pp.exponent, s);
  }
  return out;
}

StandardScalar standard_scalar(StandardKind kind, Integer n, int k) {
  if (n < 1) throw DomainError("standard_scalar: argument must be positive");
  switch (kind) {
    case StandardKind::omega:
      return {Rational(omega(n)), true};
    case StandardKind::tau:
      return {Rational(tau(n)), true};
    case StandardKind::nu:
      if (k >= 0) return {Rational(ipow(n, k)), true};
      return {Rational(1, ipow(n, -k)), n == 1};
    case StandardKind::epsilon:
      return {Rational(n == 1 ? 1 : 0), true};
    case StandardKind::one:
      return {Rational(1), true};
  }
  throw DomainError("standard_scalar: unknown kind");
}

std::optional<Integer> crt_solve(Integer k, Integer n, Integer l, Integer m) {
  if (n < 1 || m < 1) throw DomainError("crt_solve: moduli must be positive");
  const auto [g, lcm] = euclid(n, m);
  if (mod_floor(l - k, g) != 0) return std::nullopt;
  // j = k + n t with n t = l - k (mod m); divide through by g.
  const Integer m_red = m / g;
  const Integer rhs = mod_floor(l - k, m) / g;
  Integer inv = 1;
  if (m_red > 1) {
    // extended Euclid for (n/g)^-1 mod m_red
    Integer old_r = mod_floor(n / g, m_red), r = m_red;
    Integer old_s = 1, s = 0;
    while (r != 0) {
      const Integer q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
    }
    inv = mod_floor(old_s, m_red);
  }
  const Integer t = m_red > 1 ? (rhs % m_red) * inv % m_red : 0;
  return mod_floor(k + n * t, lcm);
}

Integer ramanujan_orthogonality(Integer n, Integer l) {
  Integer out = 0;
  for (Integer r : divisors(n)) out += ramanujan_sum(n, n / r) * ramanujan_sum(r, l);
  return out;
}

EvenFunction::EvenFunction(Integer modulus, std::map<Integer, Complex> values)
    : modulus_(modulus), values_(std::move(values)) {
  if (modulus_ < 1) throw DomainError("even function: modulus must be positive");
  const auto divs = divisors(modulus_);
  if (values_.size() != divs.size() ||
      !std::all_of(divs.begin(), divs.end(),
                   [&](Integer d) { return values_.contains(d); })) {
    throw DomainError("even function: keys must be exactly the divisors of the modulus");
  }
}

EvenFunction EvenFunction::from_table(Integer modulus,
                                      const std::vector<Complex>& values,
                                      double tol) {
  if (modulus < 1 || values.size() != static_cast<std::size_t>(modulus)) {
    throw DomainError("even function: table must hold alpha(1..d)");
  }
  std::map<Integer, Complex> by_divisor;
  for (Integer n = 1; n <= modulus; ++n) {
    const Integer g = std::gcd(n, modulus);
    const Complex at_g = values[static_cast<std::size_t>(g - 1)];
    if (std::abs(values[static_cast<std::size_t>(n - 1)] - at_g) > tol) {
      throw DomainError("even function: alpha(" + std::to_string(n) +
                        ") differs from alpha(gcd(n, d))");
    }
    by_divisor.emplace(g, at_g);
  }
  return EvenFunction(modulus, std::move(by_divisor));
}

Complex EvenFunction::operator()(Integer n) const {
  if (n < 1) throw DomainError("even function: argument must be positive");
  return values_.at(std::gcd(n, modulus_));
}

RfTransform rf_transform(const EvenFunction& alpha, double tol) {
  const Integer d = alpha.modulus();
  const auto divs = divisors(d);
  RfTransform out{{d, RfNormalization::paper, {}},
                  {d, RfNormalization::orthogonal, {}},
                  0.0,
                  0.0};
  for (Integer r : divs) {
    Complex paper{0.0, 0.0};
    for (Integer delta : divs) {
      paper += alpha(d / delta) * static_cast<double>(ramanujan_sum(delta, d / r));
    }
    Complex orth{0.0, 0.0};
    for (Integer k = 1; k <= d; ++k) {
      orth += alpha(k) * static_cast<double>(ramanujan_sum(r, k));
    }
    orth /= static_cast<double>(d * totient(r));
    out.paper.coefficients.emplace(r, paper);
    out.orthogonal.coefficients.emplace(r, orth);
    out.scale_residual = std::max(
        out.scale_residual, std::abs(paper - static_cast<double>(d) * orth));
  }
  for (Integer n = 1; n <= d; ++n) {
    Complex recon{0.0, 0.0};
    for (const auto& [r, a] : out.orthogonal.coefficients) {
      recon += a * static_cast<double>(ramanujan_sum(r, n));
    }
    out.reconstruction_residual =
        std::max(out.reconstruction_residual, std::abs(alpha(n) - recon));
  }
  if (out.reconstruction_residual > tol) {
    throw DomainError("rf_transform: reconstruction residual exceeds tolerance");
  }
  if (out.scale_residual > tol) {
    throw DomainError("rf_transform: paper coefficients are not d times the orthogonal ones");
  }
  return out;
}

}  // namespace idemarith
