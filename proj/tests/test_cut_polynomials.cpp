#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "bitensor/cut_polynomials.hpp"
#include "bitensor/errors.hpp"

using namespace bitensor;

namespace {

// Σ over k-subsets {j_1 < ... < j_k} of {1..n-1} of n!/(j_1!(j_2-j_1)!...(n-j_k)!).
Integer a_nk_oracle(int n, int k) {
  Integer total = 0;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (std::popcount(mask) != k) continue;
    Integer term = factorial(static_cast<unsigned long>(n));
    int last = 0;
    for (int j = 1; j < n; ++j)
      if (mask & (1u << (j - 1))) {
        term /= factorial(static_cast<unsigned long>(j - last));
        last = j;
      }
    term /= factorial(static_cast<unsigned long>(n - last));
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("a_nk") {
  for (int n = 1; n <= 6; ++n) CHECK(a_nk(n, 0) == 1);
  CHECK(a_nk(2, 1) == 2);
  CHECK(a_nk(3, 1) == 6);
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k < n; ++k) CHECK(a_nk(n, k) == a_nk_oracle(n, k));
  CHECK_THROWS_AS(a_nk(3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(a_nk(0, 0), IndexOutOfRange);
  CHECK_THROWS_AS(a_nk(3, -1), IndexOutOfRange);
}

TEST_CASE("pn_polynomial") {
  CHECK(pn_polynomial(0).is_zero());
  CHECK(pn_polynomial(1) == Polynomial::constant(1));
  CHECK(pn_polynomial(2) == Polynomial({1, 2}));
  CHECK(pn_polynomial(3) == Polynomial({1, 6, 6}));
  CHECK(pn_polynomial(3).to_string() == "1 + 6t + 6t^2");
  // The top coefficient counts ordered set partitions into singletons: n!.
  for (int n = 1; n <= 10; ++n)
    CHECK(pn_polynomial(n).coeff(static_cast<std::size_t>(n - 1)) == Rational(factorial(static_cast<unsigned long>(n))));
}

TEST_CASE("pn_integral") {
  CHECK(pn_integral(0) == 0);
  CHECK(pn_integral(1) == 1);
  CHECK(pn_integral(2) == 0);
  CHECK(pn_integral(7) == 0);
  for (int n = 2; n <= 12; ++n) CHECK(pn_integral(n) == 0);
}

TEST_CASE("generating function") {
  CHECK(gf_coefficient_check(1));
  CHECK(gf_coefficient_check(3));
  CHECK(gf_coefficient_check(10));
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial t = Polynomial::t();
  const Polynomial p = Polynomial::constant(1) + t;
  CHECK(p * p == Polynomial({1, 2, 1}));
  CHECK((p * p).integrate(-1, 0) == Rational(1, 3));
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(Polynomial().to_string() == "0");
  CHECK((Rational(-1) * t).to_string() == "-t");
}
