#include <doctest.h>

#include "matroot/pseries/coefficients.hpp"
#include "matroot/pseries/iterates.hpp"
#include "oracles.hpp"

using namespace matroot;
using namespace matroot::pseries;

namespace {

oracle::Poly as_poly(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST_CASE("rising_factorial") {
  CHECK(rising_factorial(Rational(-1, 2), 0) == 1);
  CHECK(rising_factorial(2, 3) == 24);
  CHECK(rising_factorial(Rational(-1, 3), 2) == Rational(-2, 9));
}

TEST_CASE("binomial_coeffs examples") {
  CHECK(binomial_coeffs(2, 0) == TruncatedSeries{1});
  CHECK(binomial_coeffs(3, 1) == TruncatedSeries{1, Rational(-1, 3)});
  // Frozen from the binomial-theorem oracle.
  const TruncatedSeries expected{1, Rational(-1, 2), Rational(-1, 8), Rational(-1, 16), Rational(-5, 128)};
  CHECK(as_poly(expected) == oracle::binomial_series(2, 4));
  CHECK(binomial_coeffs(2, 4) == expected);
  CHECK_THROWS_AS(binomial_coeffs(1, 3), std::invalid_argument);
}

TEST_CASE("binomial_coeffs match rising factorials and the binomial theorem") {
  for (int p = 2; p <= 10; ++p) {
    const auto b = binomial_coeffs(p, 40);
    CHECK(as_poly(b) == oracle::binomial_series(p, 40));
    mpz_class fact = 1;
    for (std::size_t i = 0; i <= 40; ++i) {
      if (i > 0) fact *= static_cast<unsigned long>(i);
      CHECK(b[i] == rising_factorial(Rational(-1, p), i) / Rational(fact));
    }
  }
}

TEST_CASE("binomial signs and tail sums for p in 2..10 up to N = 500") {
  for (int p = 2; p <= 10; ++p) {
    const auto b = binomial_coeffs(p, 500);
    const auto s = tail_sums(b);
    REQUIRE(s.size() == 501);
    CHECK(b[0] == 1);
    bool signs_ok = true, decreasing = true, in_range = true;
    for (std::size_t i = 1; i <= 500; ++i) signs_ok = signs_ok && b[i] < 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      in_range = in_range && s[j] > 0 && s[j] <= 1;
      if (j > 0) decreasing = decreasing && s[j] < s[j - 1];
    }
    CHECK(signs_ok);
    CHECK(decreasing);
    CHECK(in_range);
    // Two routes to s_k.
    CHECK(s[500] == tail_sum_product(p, 501));
    CHECK(s[99] == tail_sum_product(p, 100));
  }
}

TEST_CASE("tail_sums examples for p = 2") {
  const auto s = tail_sums(binomial_coeffs(2, 3));
  CHECK(s[0] == 1);
  CHECK(s[1] == Rational(1, 2));
  CHECK(s[2] == Rational(3, 8));
}

TEST_CASE("a coefficients") {
  // (1 - t/2)^{-2} = sum (i+1)(t/2)^i
  CHECK(a_coeffs_direct(2, 1, 3) == TruncatedSeries{1, 1, Rational(3, 4), Rational(1, 2)});
  CHECK(a_coeffs_direct(3, 2, 2) == TruncatedSeries{1, 1, 1});
  CHECK(a_coeffs_direct(5, 3, 0) == TruncatedSeries{1});

  CHECK(a_coeffs_recursive(2, 1, 2)[2] == Rational(3, 4));
  CHECK(a_coeffs_recursive(2, 1, 1)[1] == 1);
  CHECK(a_coeffs_recursive(3, 2, 2)[2] == 1);
  CHECK(a_coeffs_recursive(4, 3, 1) == TruncatedSeries{1, 1});
}

TEST_CASE("recursive and direct a_i agree; a_i > 0; a_0..a_m = 1") {
  for (int p : {2, 3, 4, 7})
    for (int m : {1, 2, 3, 5}) {
      const auto direct = a_coeffs_direct(p, m, 60);
      CHECK(direct == a_coeffs_recursive(p, m, 60));
      for (std::size_t i = 0; i <= 60; ++i) {
        CHECK(direct[i] > 0);
        if (i <= static_cast<std::size_t>(m)) CHECK(direct[i] == 1);
        if (i > static_cast<std::size_t>(m)) CHECK(direct[i] < direct[i - 1]);
      }
    }
}

TEST_CASE("f and g coefficients") {
  const auto c = f_coeffs(2, 1, 3);
  CHECK(c[0] == 0);
  CHECK(c[1] == 0);
  CHECK(c[2] == Rational(1, 4));

  const auto d = g_coeffs(2, 1, 3);
  CHECK(d[2] == Rational(1, 4));
  CHECK(d[3] == Rational(1, 8));
  for (int p : {2, 5})
    for (int m : {1, 2, 3}) {
      CHECK(f_coeffs(p, m, 10)[0] == 0);
      CHECK(g_coeffs(p, m, 10)[static_cast<std::size_t>(m)] == 0);
    }
}

TEST_CASE("g equals T_m times f as series") {
  for (int p : {2, 3})
    for (int m : {1, 2, 4}) {
      const auto tm = taylor_polynomial(p, m, 30);
      CHECK(g_coeffs(p, m, 30) == series_mul(tm, f_coeffs(p, m, 30)));
    }
}

TEST_CASE("pade10 first iterate") {
  CHECK(pade10_first_iterate(2, 2) == TruncatedSeries{1, Rational(-1, 2), Rational(1, 4)});
  CHECK(pade10_first_iterate(7, 0)[0] == 1);
  CHECK(pade10_first_iterate(3, 3) == TruncatedSeries(oracle::geometric(Rational(-1, 3), 3)));
}
