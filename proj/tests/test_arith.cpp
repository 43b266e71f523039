#include <doctest.h>

#include "idemarith/arith.hpp"

using namespace idemarith;

namespace {

// Values below were produced by a separate sympy / brute-force script.
const std::vector<int> kMobius{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1,
                               0, -1, 0, -1, 0, 1, 1, -1, 0, 0, 1, 0, 0, -1, -1};
const std::vector<Integer> kTotient{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8,
                                    8, 16, 6, 18, 8, 12, 10, 22, 8, 20, 12, 18, 12, 28, 8};

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1).size() == 0);
  const auto f12 = factorize(12);
  REQUIRE(f12.size() == 2);
  CHECK(f12.pairs()[0] == PrimePower{2, 2});
  CHECK(f12.pairs()[1] == PrimePower{3, 1});
  CHECK(f12.value() == 12);
  CHECK(factorize(97).pairs() == std::vector<PrimePower>{{97, 1}});
  CHECK(factorize(999'999'999'989).size() == 1);
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK_THROWS_AS(factorize(-4), DomainError);
  CHECK_THROWS_AS(factorize(kMaxFactorizable + 1), DomainError);
}

TEST_CASE("euclid") {
  CHECK(euclid(4, 6).gcd == 2);
  CHECK(euclid(4, 6).lcm == 12);
  CHECK(euclid(1, 35).lcm == 35);
  CHECK(euclid(7, 7).gcd == 7);
  CHECK_THROWS_AS(euclid(0, 3), DomainError);
}

TEST_CASE("mobius and totient tables") {
  for (Integer n = 1; n <= 30; ++n) {
    CHECK(mobius(n) == kMobius[static_cast<std::size_t>(n - 1)]);
    CHECK(totient(n) == kTotient[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(totient(13) == 12);
}

TEST_CASE("jordan totient") {
  CHECK(jordan_totient(1, 12) == 4);
  CHECK(jordan_totient(2, 6) == 24);
  CHECK(jordan_totient(2, 10) == 72);
  CHECK(jordan_totient(3, 12) == 1456);
  CHECK(jordan_totient(5, 1) == 1);
}

TEST_CASE("ramanujan sums") {
  CHECK(ramanujan_sum(6, 6) == 2);
  CHECK(ramanujan_sum(5, 1) == -1);
  CHECK(ramanujan_sum(9, 3) == -3);
  CHECK(ramanujan_sum(4, 2) == -2);
  const std::vector<Integer> c12{4, 0, 2, 0, -2, 0, -4, 0, -2, 0, 2, 0};
  for (Integer j = 0; j < 12; ++j) CHECK(ramanujan_sum(12, j) == c12[static_cast<std::size_t>(j)]);
  const std::vector<Integer> c30{-1, 1, 2, 1, 4, -2, -1, 1, 2, -4};
  for (Integer j = 1; j <= 10; ++j) CHECK(ramanujan_sum(30, j) == c30[static_cast<std::size_t>(j - 1)]);
  CHECK(ramanujan_sum(12, -5) == ramanujan_sum(12, 5));
  CHECK(std::abs(ramanujan_sum_roots(9, 3) - Complex(-3.0)) < 1e-12);
}

TEST_CASE("lcm tuple counts") {
  CHECK(lcm_tuple_count(2, 4) == 5);
  CHECK(lcm_tuple_count(2, 12) == 15);
  CHECK(lcm_tuple_count(3, 12) == 133);
  CHECK(lcm_tuple_count(3, 30) == 343);
  CHECK(lcm_tuple_count(1, 12) == 1);
  CHECK(lcm_tuple_count(4, 1) == 1);
}

TEST_CASE("standard scalars") {
  CHECK(omega(12) == 2);
  CHECK(tau(1) == 1);
  CHECK(standard_scalar(StandardKind::nu, 5, 2).value == 25);
  const auto inv = standard_scalar(StandardKind::nu, 4, -1);
  CHECK(inv.value == Rational(1, 4));
  CHECK_FALSE(inv.integral);
  CHECK(standard_scalar(StandardKind::epsilon, 1).value == 1);
  CHECK(standard_scalar(StandardKind::epsilon, 7).value == 0);
}

TEST_CASE("crt") {
  CHECK(crt_solve(1, 2, 2, 3) == 5);
  CHECK_FALSE(crt_solve(0, 2, 1, 2).has_value());
  CHECK(crt_solve(3, 5, 3, 5) == 3);
  CHECK(crt_solve(3, 4, 5, 6) == 11);
  CHECK(crt_solve(2, 9, 5, 12) == 29);
}

TEST_CASE("orthogonality of ramanujan sums") {
  CHECK(ramanujan_orthogonality(6, 5) == 6);
  CHECK(ramanujan_orthogonality(6, 4) == 0);
  CHECK(ramanujan_orthogonality(1, 1) == 1);
}

TEST_CASE("even functions") {
  const auto g4 = EvenFunction::from_divisor_values(4, [](Integer r) { return double(r); });
  CHECK(g4(6) == Complex(2.0));
  CHECK(g4(8) == Complex(4.0));
  CHECK_THROWS_AS(EvenFunction(4, {{1, 1.0}, {2, 1.0}}), DomainError);
  CHECK_THROWS_AS(EvenFunction::from_table(4, {1.0, 2.0, 3.0, 4.0}), DomainError);
  CHECK_NOTHROW(EvenFunction::from_table(4, {1.0, 2.0, 1.0, 4.0}));
}

TEST_CASE("ramanujan-fourier coefficients of gcd(., 4)") {
  const auto alpha = EvenFunction::from_divisor_values(4, [](Integer r) { return double(r); });
  const auto rf = rf_transform(alpha);
  const std::map<Integer, double> orth{{1, 2.0}, {2, 1.0}, {4, 0.5}};
  const std::map<Integer, double> paper{{1, 8.0}, {2, 4.0}, {4, 2.0}};
  for (const auto& [r, v] : orth) CHECK(std::abs(rf.orthogonal.coefficients.at(r) - v) < 1e-12);
  for (const auto& [r, v] : paper) CHECK(std::abs(rf.paper.coefficients.at(r) - v) < 1e-12);
  CHECK(rf.reconstruction_residual < 1e-12);

  const auto one = EvenFunction::from_divisor_values(1, [](Integer) { return 1.0; });
  CHECK(std::abs(rf_transform(one).orthogonal.coefficients.at(1) - 1.0) < 1e-12);
}

TEST_CASE("ramanujan-fourier coefficients of tau(gcd(., 6))") {
  const auto alpha = EvenFunction::from_divisor_values(6, [](Integer r) { return double(tau(r)); });
  const auto rf = rf_transform(alpha);
  const std::map<Integer, double> orth{{1, 2.0}, {2, 2.0 / 3}, {3, 0.5}, {6, 1.0 / 6}};
  const std::map<Integer, double> paper{{1, 12.0}, {2, 4.0}, {3, 3.0}, {6, 1.0}};
  for (const auto& [r, v] : orth) CHECK(std::abs(rf.orthogonal.coefficients.at(r) - v) < 1e-12);
  for (const auto& [r, v] : paper) CHECK(std::abs(rf.paper.coefficients.at(r) - v) < 1e-12);
}
