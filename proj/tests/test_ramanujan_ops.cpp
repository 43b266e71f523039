#include <doctest.h>

#include "idemarith/ramanujan_ops.hpp"

using namespace idemarith;

namespace {

OperatorFamily family(std::size_t dim, ProviderMode mode = ProviderMode::congruence_exact) {
  return OperatorFamily(IdempotentSystem(dim, 0, mode));
}

std::vector<Integer> support(const DiagonalOperator& d) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    if (d[i] != Complex(0.0)) out.push_back(static_cast<Integer>(i) + d.offset());
  }
  return out;
}

}  // namespace

TEST_CASE("S(n)") {
  CHECK(s_operator(1, 5) == DiagonalOperator::identity(5, 0));
  CHECK(s_operator(2, 4) == DiagonalOperator(0, {1.0, -1.0, 1.0, -1.0}));
  CHECK_THROWS_AS(s_operator(0, 4), DomainError);
}

TEST_CASE("C_j(n) constructions agree") {
  const auto ops = family(60);
  CHECK(ops.c(0, 1) == DiagonalOperator::identity(60, 0));
  CHECK(ops.c(0, 1, CConstruction::root_of_unity) == DiagonalOperator::identity(60, 0));
  for (Integer j : {0, 1, 2}) {
    for (Integer n = 1; n <= 30; ++n) CHECK(c_constructions(ops, j, n).passed());
  }
  const auto c6 = ops.c(0, 6);
  CHECK(c6.at_basis(6) == Complex(2.0));
  CHECK(c6.at_basis(1) == Complex(1.0));
  CHECK(c6.at_basis(2) == Complex(-1.0));
}

TEST_CASE("T_{r,j}(n) selects a gcd class") {
  const auto ops = family(6);
  CHECK(support(ops.t(3, 0, 6)) == std::vector<Integer>{2, 4});
  CHECK(support(ops.t(6, 0, 6)) == std::vector<Integer>{1, 5});
  CHECK(support(ops.t(1, 0, 6)) == std::vector<Integer>{0});
  CHECK_THROWS_AS(ops.t(4, 0, 6), DomainError);
}

TEST_CASE("T_{n,j}(n) top identities") {
  const auto ops = family(64);
  for (Integer j : {0, 1, 2}) {
    for (Integer n = 1; n <= 30; ++n) CHECK(t_top_identities(ops, j, n).passed());
  }
}

TEST_CASE("displayed prime-power case is an erratum for k >= 2") {
  const auto ops = family(32);
  const auto r = t_top_identities(ops, 0, 4);
  CHECK(r.passed());
  REQUIRE(r.errata.size() == 1);
  CHECK_FALSE(r.errata.front().holds);
  CHECK(ops.t_top(0, 4) == DiagonalOperator(ops.system().unit() - ops.p(0, 2)));
  CHECK(t_top_identities(ops, 0, 5).errata.empty());
}

TEST_CASE("tau(n) orthogonal idempotents") {
  const auto ops = family(24);
  const auto r = t_decomposition(ops, 0, 12);
  CHECK(r.passed());
  CHECK(divisors(12).size() == 6);
  CHECK(t_decomposition(ops, 0, 1).passed());
  CHECK(ops.t(1, 0, 1) == ops.system().unit());
  CHECK(t_decomposition(ops, 3, 7).passed());
}

TEST_CASE("C/T transforms") {
  CHECK(c_t_transforms(family(36), 0, 6).passed());
  CHECK(c_t_transforms(family(32), 2, 4).passed());
  const auto one = family(8);
  CHECK(one.c(3, 1) == one.t_top(3, 1));
  const auto dft = family(36, ProviderMode::dft_float);
  CHECK(c_t_transforms(dft, 1, 6).passed());
}

TEST_CASE("even function identity") {
  const auto g4 = EvenFunction::from_divisor_values(4, [](Integer r) { return double(r); });
  const auto r = even_function_identity(family(16), g4, 0, 4);
  CHECK(r.passed());
  const auto one = EvenFunction::from_divisor_values(1, [](Integer) { return 1.0; });
  CHECK(even_function_identity(family(36), one, 0, 6).passed());
  CHECK(even_function_identity(family(8), one, 0, 1).passed());
  CHECK_THROWS_AS(even_function_identity(family(16), g4, 0, 6), DomainError);
}

TEST_CASE("default truncation") {
  CHECK(default_truncation(1) == 32);
  CHECK(default_truncation(5) == 35);
  CHECK(default_truncation(40) == 40);
}
