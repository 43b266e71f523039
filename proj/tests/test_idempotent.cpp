#include <doctest.h>

#include "idemarith/idempotent.hpp"

using namespace idemarith;

namespace {

DiagonalOperator diag0(std::vector<Complex> entries) { return DiagonalOperator(0, std::move(entries)); }

// Writes 2 where P_{j}(n) should hold a 1, for one chosen (j, n).
struct CorruptedProvider {
  IdempotentSystem base;
  Integer bad_j;
  Integer bad_n;

  DiagonalOperator projection(Integer j, Integer n) const {
    DiagonalOperator p = base.projection(j, n);
    if (n == bad_n && mod_floor(j, n) == bad_j) {
      return DiagonalOperator::from_index(p.dim(), p.offset(), [&](Integer k) {
        return p.at_basis(k) * 2.0;
      });
    }
    return p;
  }
  std::size_t dimension() const { return base.dimension(); }
  int offset() const { return base.offset(); }
};

static_assert(ProjectionProvider<IdempotentSystem>);
static_assert(ProjectionProvider<CorruptedProvider>);

}  // namespace

TEST_CASE("projection values") {
  const IdempotentSystem s(4, 0);
  CHECK(s.projection(0, 1) == DiagonalOperator::identity(4, 0));
  CHECK(s.projection(1, 2) == diag0({0, 1, 0, 1}));
  CHECK(s.projection(-1, 2) == diag0({0, 1, 0, 1}));
  CHECK_THROWS_AS(s.projection(0, 0), DomainError);
}

TEST_CASE("dft provider matches the congruence indicator") {
  const IdempotentSystem exact(60, 0);
  const IdempotentSystem dft(60, 0, ProviderMode::dft_float);
  for (Integer n = 1; n <= 12; ++n) {
    for (Integer j = 0; j < n; ++j) CHECK(distance(exact.projection(j, n), dft.projection(j, n)) < 1e-12);
  }
}

TEST_CASE("unit roots") {
  CHECK(unit_root(4, 1) == Complex(0.0, 1.0));
  CHECK(unit_root(2, 1) == Complex(-1.0, 0.0));
  CHECK(unit_root(1, 7) == Complex(1.0, 0.0));
  CHECK(std::abs(unit_root(3, 1) - Complex(-0.5, std::sqrt(3.0) / 2)) < 1e-15);
}

TEST_CASE("axioms hold for the congruence realization") {
  const IdempotentSystem s(64, 0);
  const auto report = verify_axioms(s, 12);
  CHECK(report.passed());
  CHECK(report.checks.size() > 0);
  for (const auto& c : report.checks) CHECK(c.residual == 0.0);
  const auto trivial = verify_axioms(IdempotentSystem(5, 1), 1);
  CHECK(trivial.passed());
}

TEST_CASE("axiom I catches a corrupted provider") {
  const CorruptedProvider bad{IdempotentSystem(64, 0), 1, 3};
  const auto report = verify_axioms(bad, 6);
  CHECK_FALSE(report.passed());
  bool axiom_one = false;
  for (const auto& c : report.checks) axiom_one = axiom_one || (c.axiom == "I" && !c.pass && c.n == 3);
  CHECK(axiom_one);
}

TEST_CASE("verify_axioms rejects oversize levels") {
  const IdempotentSystem s(8, 0);
  CHECK_THROWS_AS(verify_axioms(s, 0), DomainError);
  CHECK_THROWS_AS(verify_axioms(s, kMaxAxiomLevel, 2), DomainError);
}

TEST_CASE("product law") {
  const IdempotentSystem s(36, 0);
  const auto a = product_law(s, 1, 2, 2, 3);
  REQUIRE(a.j.has_value());
  CHECK(*a.j == 5);
  CHECK(a.product == s.projection(5, 6));
  CHECK(a.agree);

  const auto b = product_law(s, 0, 2, 1, 2);
  CHECK_FALSE(b.j.has_value());
  CHECK(b.product == s.zero());

  for (Integer j = 0; j < 4; ++j) {
    CHECK(DiagonalOperator(s.projection(j, 4) * s.projection(j, 9)) == s.projection(j, 36));
  }
}

TEST_CASE("exhaustive product law on a tiny window") {
  const IdempotentSystem s(4, 0);
  int cases = 0;
  for (Integer n = 1; n <= 2; ++n) {
    for (Integer m = 1; m <= 2; ++m) {
      for (Integer k = 0; k < n; ++k) {
        for (Integer l = 0; l < m; ++l) {
          CHECK(product_law(s, k, n, l, m).agree);
          ++cases;
        }
      }
    }
  }
  CHECK(cases == 9);
}

TEST_CASE("divisor product law") {
  const IdempotentSystem s(24, 0);
  const auto a = divisor_product_law(s, 1, 2, 3, 4);
  CHECK(a.congruent);
  CHECK(a.product == s.projection(3, 4));
  const auto b = divisor_product_law(s, 0, 2, 3, 4);
  CHECK_FALSE(b.congruent);
  CHECK(b.product == s.zero());
  for (Integer k = 0; k < 6; ++k) CHECK(divisor_product_law(s, 0, 1, k, 6).product == s.projection(k, 6));
  CHECK_THROWS_AS(divisor_product_law(s, 0, 4, 0, 6), DomainError);
}

TEST_CASE("weighted products and the lcm tuple count") {
  const IdempotentSystem s(48, 0);
  const auto one = nu_function(0, 16);
  const auto r = weighted_product_identities(one, one, s, 1, 16);
  CHECK(r.passed());
  const auto p = s.slice(1, 16);
  const auto box = lcm_convolve(p, p);
  CHECK(box(4) == DiagonalOperator(Complex(5.0) * s.projection(1, 4)));
  const auto uni = unitary_convolve(p, p);
  CHECK(uni(12) == DiagonalOperator(Complex(4.0) * s.projection(1, 12)));
  CHECK(box(1) == s.projection(1, 1));
}

TEST_CASE("lehmer identity") {
  const IdempotentSystem s(60, 0);
  const auto r = lehmer_identity_check(totient_function(30), tau_function(30), s, 2, 30);
  CHECK(r.passed());
  for (const auto& c : r.checks) CHECK(c.max_residual == 0.0);
}
