// Acceptance criteria, one PASS/FAIL line each.
//
// Exit status is nonzero for any failure except those listed in
// kKnownUnattainable, which still print FAIL. --strict counts those too.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "idemarith/analytic.hpp"
#include "idemarith/ramanujan_ops.hpp"

using namespace idemarith;

namespace {

constexpr double kFloatTol = 1e-9;

// The displayed closed form for prod c_n(k) lacks (-1)^{N omega(n)}.
const std::set<int> kKnownUnattainable{6};

struct Outcome {
  bool pass;
  std::string detail;
};

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

Outcome scalar_oracle() {
  double worst = 0.0;
  Integer exact_misses = 0;
  for (Integer n = 1; n <= 200; ++n) {
    for (Integer j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(Complex(double(ramanujan_sum(n, j))) - ramanujan_sum_roots(n, j)));
    }
    exact_misses += ramanujan_sum(n, 1) != mobius(n);
    exact_misses += ramanujan_sum(n, n) != totient(n);
  }
  return {worst <= kFloatTol && exact_misses == 0,
          cat("max |divisor - roots| = ", worst, ", exact mismatches = ", exact_misses)};
}

Outcome product_law_exhaustive() {
  Integer cases = 0, misses = 0;
  for (Integer n = 1; n <= 12; ++n) {
    for (Integer m = 1; m <= 12; ++m) {
      const IdempotentSystem system(static_cast<std::size_t>(std::lcm(n, m) * 3), 0);
      for (Integer k = 0; k < n; ++k) {
        for (Integer l = 0; l < m; ++l) {
          misses += product_law(system, k, n, l, m, 0.0).residual != 0.0;
          ++cases;
        }
      }
    }
  }
  return {misses == 0, cat(cases, " cases, ", misses, " mismatches")};
}

Outcome multiplicativity() {
  const OperatorFamily ops{IdempotentSystem(2520, 0)};
  double worst = 0.0;
  bool all = true;
  for (Integer j : {0, 1, 5}) {
    const auto p = ops.system().slice(j, 30);
    const auto c = AlgFunction<DiagonalOperator>::tabulate(30, [&](Integer n) { return ops.c(j, n); });
    const auto t = AlgFunction<DiagonalOperator>::tabulate(30, [&](Integer n) { return ops.t_top(j, n); });
    for (const auto* f : {&p, &c, &t}) {
      const auto r = is_multiplicative(*f, 0.0);
      all = all && r.multiplicative && r.unit_idempotent;
      worst = std::max(worst, r.max_residual);
    }
  }
  return {all && worst == 0.0, cat("max residual ", worst, " over P, C, T and j in {0,1,5}")};
}

Outcome section_three() {
  double exact_worst = 0.0, float_worst = 0.0;
  std::size_t checks = 0;
  for (Integer n = 1; n <= 30; ++n) {
    const std::size_t dim = default_truncation(n);
    const OperatorFamily exact{IdempotentSystem(dim, 0)};
    const OperatorFamily dft{IdempotentSystem(dim, 0, ProviderMode::dft_float)};
    for (Integer j : {0, 1, 2}) {
      for (const auto* ops : {&exact, &dft}) {
        Report r;
        r.merge(c_constructions(*ops, j, n));
        r.merge(t_top_identities(*ops, j, n));
        r.merge(t_decomposition(*ops, j, n));
        r.merge(c_t_transforms(*ops, j, n));
        for (const auto& c : r.checks) {
          ++checks;
          const bool oracle = ops == &dft || c.identity.find("root-of-unity") != std::string::npos;
          double& worst = oracle ? float_worst : exact_worst;
          worst = std::max(worst, c.max_residual);
        }
      }
    }
  }
  return {exact_worst == 0.0 && float_worst <= kFloatTol,
          cat(checks, " checks, congruence max ", exact_worst, ", float oracle max ", float_worst)};
}

Outcome even_identity() {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> value(-9, 9);
  double worst = 0.0;
  int functions = 0;
  for (Integer n : {4, 6, 12, 24}) {
    const OperatorFamily ops{IdempotentSystem(static_cast<std::size_t>(2 * n), 0)};
    for (int trial = 0; trial < 20; ++trial) {
      const auto alpha = EvenFunction::from_divisor_values(n, [&](Integer) {
        return Complex(value(rng), value(rng));
      });
      const Integer j = static_cast<Integer>(rng() % static_cast<std::uint64_t>(n));
      worst = std::max(worst, even_function_identity(ops, alpha, j, n).max_residual());
      ++functions;
    }
  }
  return {worst <= kFloatTol, cat(functions, " even functions, max residual ", worst)};
}

Outcome determinant_and_trace() {
  Integer det_cases = 0, det_misses = 0, nonsquarefree_nonzero = 0, trace_failures = 0;
  Integer sign_only = 0;
  std::string first;
  for (Integer n = 2; n <= 30; ++n) {
    for (Integer N = 1; N <= 64; ++N) {
      const DetC0 d = det_c0(n, N);
      ++det_cases;
      if (!d.agree) {
        if (det_misses++ == 0) first = cat(" first (n, N) = (", n, ", ", N, "): ", d.direct, " vs ", d.closed_form);
        sign_only += d.corrected_agree;
      }
      if (!d.squarefree && d.direct != 0) ++nonsquarefree_nonzero;
      trace_failures += trace_identities(n, N).failures();
    }
  }
  return {det_misses == 0 && nonsquarefree_nonzero == 0 && trace_failures == 0,
          cat("det closed form misses ", det_misses, "/", det_cases, " (", sign_only,
              " differ only by (-1)^{N omega(n)}),", first, "; non-squarefree nonzero ",
              nonsquarefree_nonzero, "; trace failures ", trace_failures)};
}

Outcome euler_representation() {
  Integer misses = 0;
  const auto phi_t = nu0_transform(totient_function(512));
  for (Integer m = 1; m <= 512; ++m) misses += phi_t(m) != m;
  for (int r = 1; r <= 3; ++r) {
    const auto t = nu0_transform(jordan_function(r, 512));
    for (Integer m = 1; m <= 512; ++m) misses += t(m) != ipow(m, r);
  }
  const auto mu_t = nu0_transform(mobius_function(512));
  for (Integer m = 1; m <= 512; ++m) misses += mu_t(m) != (m == 1 ? 1 : 0);
  const auto mu = convert<Integer, Rational>(mobius_function(128));
  const auto inv = nu0_transform(dirichlet_convolve(mu, nu_rational(-1, 128)));
  for (Integer m = 2; m <= 128; ++m) misses += inv(m) != Rational(1, m);
  return {misses == 0, cat(misses, " exact mismatches")};
}

Outcome convolution_algebra() {
  std::mt19937_64 rng(80);
  auto random_fn = [&](Integer n_max, int lo, int hi) {
    std::uniform_int_distribution<int> v(lo, hi);
    return ScalarFunction::tabulate(n_max, [&](Integer) { return Integer(v(rng)); });
  };
  auto equal = [](const ScalarFunction& a, const ScalarFunction& b) {
    for (Integer n = 1; n <= a.n_max(); ++n) {
      if (a(n) != b(n)) return false;
    }
    return true;
  };
  using Product = ScalarFunction (*)(const ScalarFunction&, const ScalarFunction&);
  const Product products[] = {&dirichlet_convolve<Integer>, &lcm_convolve<Integer>,
                              &unitary_convolve<Integer>};
  const auto id = dirichlet_identity(Integer{1}, 60);
  Integer misses = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_fn(60, -3, 3), g = random_fn(60, -3, 3), h = random_fn(60, -3, 3);
    for (Product p : products) {
      misses += !equal(p(p(f, g), h), p(f, p(g, h)));
      misses += !equal(p(f, id), f) || !equal(p(id, f), f);
    }
    // Unit-led f for the Dirichlet and unitary inverses; f = mu * s with
    // s = +-1 makes every divisor sum a unit, as the lcm inverse needs.
    auto unit_led = random_fn(60, -3, 3);
    std::vector<Integer> v(unit_led.values().begin(), unit_led.values().end());
    v[0] = trial % 2 == 0 ? 1 : -1;
    const ScalarFunction lead(v);
    const auto signs = ScalarFunction::tabulate(60, [&](Integer) { return rng() % 2 ? Integer{1} : Integer{-1}; });
    const auto lcm_ready = dirichlet_convolve(mobius_function(60), signs);
    try {
      misses += !equal(dirichlet_convolve(lead, dirichlet_inverse(lead, 0.0)), id);
      misses += !equal(unitary_convolve(lead, unitary_inverse(lead, 0.0)), id);
      misses += !equal(lcm_convolve(lcm_ready, lcm_inverse(lcm_ready, 0.0)), id);
    } catch (const std::exception&) {
      ++misses;
    }
  }
  Integer lehmer_failures = 0;
  const IdempotentSystem system(64, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_fn(200, -5, 5), b = random_fn(200, -5, 5);
    const auto r = lehmer_identity_check(a, b, system, trial % 3, 200, 0.0);
    lehmer_failures += r.failures();
  }
  return {misses == 0 && lehmer_failures == 0,
          cat("product-law mismatches ", misses, ", Lehmer failures ", lehmer_failures)};
}

Outcome rf_normalization() {
  std::mt19937_64 rng(90);
  std::uniform_int_distribution<Integer> modulus(1, 48);
  std::uniform_real_distribution<double> value(-5.0, 5.0);
  double scale = 0.0, recon = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Integer d = modulus(rng);
    const auto alpha = EvenFunction::from_divisor_values(d, [&](Integer) {
      return Complex(value(rng), value(rng));
    });
    const auto rf = rf_transform(alpha, 1.0);
    scale = std::max(scale, rf.scale_residual);
    recon = std::max(recon, rf.reconstruction_residual);
  }
  return {scale < kFloatTol && recon < kFloatTol,
          cat("max |paper - d * orthogonal| = ", scale, ", reconstruction residual ", recon)};
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"scalar oracle agreement, n <= 200", scalar_oracle},
      {"product law exhaustive, n, m <= 12", product_law_exhaustive},
      {"multiplicativity of P_j, C_j, T_{n,j} at N = 2520", multiplicativity},
      {"C/T identity suite, n <= 30, j in {0,1,2}", section_three},
      {"even-function identity, n in {4,6,12,24}, N = 2n", even_identity},
      {"determinant and trace identities, 2 <= n <= 30, N <= 64", determinant_and_trace},
      {"Euler representation", euler_representation},
      {"convolution algebra and Lehmer identity", convolution_algebra},
      {"RF normalization: paper = d * orthogonal", rf_normalization},
  };
  int unexpected = 0, failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool known = kKnownUnattainable.count(index) > 0;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << index << "] " << name << ": " << o.detail
              << " (" << secs << " s)" << (!o.pass && known ? " [known unattainable]" : "") << '\n';
    if (!o.pass) {
      ++failed;
      if (strict || !known) ++unexpected;
    }
    if (secs > 60.0) {
      std::cout << "FAIL  [" << index << "] exceeded the 60 s budget\n";
      ++unexpected;
    }
  }
  std::cout << (9 - failed) << "/9 criteria pass\n";
  return unexpected == 0 ? 0 : 1;
}
