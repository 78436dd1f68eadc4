#include <cmath>
#include <numbers>
#include <stdexcept>

#include "charavg/special.hpp"
#include "doctest.h"

using namespace charavg;
using std::numbers::pi;

namespace {

// Independent digamma oracle: psi(x) = -gamma - 1/x + sum_{k>=1} x/(k(k+x)),
// truncated at K with an Euler-Maclaurin tail correction on
// f(t) = x/(t(t+x)). Accurate well below 1e-13 for x in (0, 20].
double digamma_series_oracle(double x) {
  constexpr int K = 200'000;
  // gamma from the harmonic-sum definition, to ~1e-22 at this K
  double h = 0.0;
  for (int k = K; k >= 1; --k) h += 1.0 / k;
  const double gamma = h - std::log(static_cast<double>(K)) - 0.5 / K +
                       1.0 / (12.0 * double(K) * K) -
                       1.0 / (120.0 * double(K) * K * double(K) * K);

  double s = 0.0;
  for (int k = K; k >= 1; --k) s += x / (k * (k + x));
  const auto f = [x](double t) { return x / (t * (t + x)); };
  const double fp = [x](double t) {
    return -x * (2 * t + x) / (t * t * (t + x) * (t + x));
  }(double(K));
  // tail: integral from K to inf minus EM corrections at the left endpoint
  const double tail = std::log1p(x / K) - f(K) / 2.0 - fp / 12.0;
  return -gamma - 1.0 / x + s + tail;
}

}  // namespace

TEST_CASE("bernoulli numbers and polynomials") {
  const auto t = bernoulli_table(kBernoulliCap);
  CHECK(t.numbers[0] == 1);
  CHECK(t.numbers[1] == BigRational(-1, 2));
  CHECK(t.numbers[2] == BigRational(1, 6));
  CHECK(t.numbers[4] == BigRational(-1, 30));
  CHECK(t.numbers[12] == BigRational(-691, 2730));
  for (unsigned k = 3; k <= t.max_index; k += 2) CHECK(t.numbers[k] == 0);
  CHECK_THROWS_AS(bernoulli_table(kBernoulliCap + 1), std::invalid_argument);

  CHECK(bernoulli_poly(2, BigRational(4), t) == BigRational(73, 6));
  CHECK(bernoulli_poly(1, BigRational(1), t) == BigRational(1, 2));
  CHECK(bernoulli_poly(3, BigRational(1), t) == bernoulli_poly(3, BigRational(0), t));
  // B_n(1-x) = (-1)^n B_n(x)
  for (unsigned n = 0; n <= 10; ++n) {
    const BigRational x(3, 7);
    const BigRational lhs = bernoulli_poly(n, 1 - x, t);
    const BigRational rhs = bernoulli_poly(n, x, t);
    CHECK(lhs == (n % 2 ? -rhs : rhs));
  }
}

TEST_CASE("faulhaber sums") {
  CHECK(faulhaber_sum(3, 1) == 6);
  CHECK(faulhaber_sum(3, 0) == 3);
  CHECK(faulhaber_sum(10, 3) == 3025);
  CHECK(faulhaber_sum(10, 3) == faulhaber_sum(10, 1) * faulhaber_sum(10, 1));
  CHECK_THROWS_AS(faulhaber_sum(0, 1), std::invalid_argument);

  for (std::uint64_t k = 1; k <= 30; ++k)
    for (unsigned m = 0; m <= 12; ++m) {
      BigInt loop = 0;
      for (std::uint64_t a = 1; a <= k; ++a) {
        BigInt p = 1;
        for (unsigned i = 0; i < m; ++i) p *= a;
        loop += p;
      }
      CHECK(faulhaber_sum(k, m) == loop);
    }
}

TEST_CASE("gamma and integer zeta values") {
  CHECK(std::abs(euler_gamma() - 0.57721566490153286) < 1e-14);
  CHECK(std::abs(zeta_int(2) - pi * pi / 6.0) < 1e-14);
  CHECK(std::abs(zeta_int(4) - pi * pi * pi * pi / 90.0) < 1e-14);
  CHECK(std::abs(zeta_int(3) - 1.2020569031595943) < 1e-14);
  CHECK_THROWS_AS(zeta_int(1), std::invalid_argument);
}

TEST_CASE("digamma special values, recurrence, oracle") {
  const double g = euler_gamma();
  CHECK(std::abs(digamma(1.0) + g) < 1e-14);
  CHECK(std::abs(digamma(2.0) - (1.0 - g)) < 1e-14);
  CHECK(std::abs(digamma(0.5) - (-g - 2.0 * std::log(2.0))) < 1e-13);
  CHECK_THROWS_AS(digamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(digamma(-1.0), std::invalid_argument);

  for (double x = 0.1; x <= 20.0 + 1e-12; x += 0.1)
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-13);

  for (double x : {0.05, 0.3, 1.0 / 3, 0.5, 0.9, 1.0, 2.5, 7.0, 19.5})
    CHECK(std::abs(digamma(x) - digamma_series_oracle(x)) < 1e-12);
}

TEST_CASE("hurwitz zeta") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - 3.0 * pi * pi / 6.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(0.5, 1.0) - (-1.4603545088095868)) < 1e-11);
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::invalid_argument);

  // ladder against the unrestricted core
  for (double s : {0.5, 2.0, 3.0})
    for (double a = 0.1; a < 1.0; a += 0.1)
      CHECK(std::abs(hurwitz_zeta(s, a) - detail::hurwitz_zeta_unrestricted(s, a + 1.0) -
                     std::pow(a, -s)) < 1e-11);

  // direct-series oracle for s comfortably > 1
  for (double a : {0.25, 0.5, 0.75, 1.0}) {
    double direct = 0.0;
    for (int n = 200'000; n >= 0; --n) direct += std::pow(n + a, -3.0);
    // tail of sum_{n>N} (n+a)^-3 ~ 1/(2 N^2): add the integral correction
    direct += 0.5 * std::pow(200'000.0 + a + 0.5, -2.0);
    CHECK(std::abs(hurwitz_zeta(3.0, a) - direct) < 1e-11);
  }
}

TEST_CASE("taylor coefficient sequences") {
  const auto tc = taylor_coefficients(10);
  const double g = euler_gamma();
  CHECK(std::abs(tc.gamma - g) < 1e-15);
  CHECK(tc.a[0] == tc.gamma);
  CHECK(std::abs(tc.a[1] + pi * pi / 6.0) < 1e-13);
  CHECK(std::abs(tc.c[0] - g * g) < 1e-13);
  CHECK(std::abs(tc.c[1] + 2.0 * g * pi * pi / 6.0) < 1e-13);
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(std::abs(tc.a[n]) > 1.0);
    CHECK(std::abs(tc.a[n]) <= pi * pi / 6.0 + 1e-15);
    if (n >= 2) CHECK(std::abs(tc.a[n]) < std::abs(tc.a[n - 1]));
  }
}

TEST_CASE("lambda: digamma route and series route") {
  const double g = euler_gamma();
  CHECK(std::abs(lambda_digamma(1.0).value - (g - 1.0)) < 1e-13);
  CHECK(std::abs(lambda_digamma(0.5).value - (g + 2.0 * std::log(2.0) - 2.0)) < 1e-13);
  const double psi_third = -g - 1.5 * std::log(3.0) - pi / (2.0 * std::sqrt(3.0));
  CHECK(std::abs(lambda_digamma(1.0 / 3).value - (-psi_third - 3.0)) < 1e-12);
  CHECK_THROWS_AS(lambda_digamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(lambda_digamma(1.5), std::invalid_argument);

  CHECK_THROWS_AS(lambda_series(1.0, 10), std::invalid_argument);

  const auto s_half = lambda_series(0.5, 20);
  CHECK(s_half.remainder_bound == doctest::Approx(9.54e-7).epsilon(1e-3));
  CHECK(std::abs(s_half.value - lambda_digamma(0.5).value) <= s_half.remainder_bound);

  const auto s_third = lambda_series(1.0 / 3, 10);
  CHECK(s_third.remainder_bound == doctest::Approx(1.70e-5).epsilon(1e-2));
  CHECK(std::abs(s_third.value - lambda_digamma(1.0 / 3).value) <= s_third.remainder_bound);

  // alpha -> 0: partial sum collapses to gamma
  CHECK(std::abs(lambda_series(1e-12, 5).value - g) < 1e-11);
}
