#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charavg/arith.hpp"

namespace charavg {

using BigRational = boost::multiprecision::cpp_rational;

/// Exact Bernoulli numbers B_0..B_max_index, convention B_1 = -1/2.
struct BernoulliTable {
  unsigned max_index = 0;
  std::vector<BigRational> numbers;
};

constexpr unsigned kBernoulliCap = 64;

/// Throws std::invalid_argument for N > kBernoulliCap.
BernoulliTable bernoulli_table(unsigned N);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k), exact.
BigRational bernoulli_poly(unsigned n, const BigRational& x, const BernoulliTable& table);

/// Sum of a^m over 1 <= a <= k, via (B_{m+1}(k+1) - B_{m+1}(1))/(m+1).
/// Always integer-valued.
BigInt faulhaber_sum(std::uint64_t k, unsigned m);

/// Euler-Mascheroni constant, evaluated as -digamma(1).
double euler_gamma();

/// zeta(m) for integer m >= 2, Euler-Maclaurin. Relative error <= 1e-14.
double zeta_int(unsigned m);

/// psi(x) for x > 0: recurrence shift to x >= 10 followed by the
/// asymptotic series through B_16. Absolute error <= 1e-13.
double digamma(double x);

/// Hurwitz zeta(s, alpha) for s > 0, s != 1, 0 < alpha <= 1.
/// Relative error <= 1e-12.
double hurwitz_zeta(double s, double alpha);

namespace detail {
/// Euler-Maclaurin core without the alpha <= 1 restriction (any a > 0);
/// used internally and by the ladder identity tests.
double hurwitz_zeta_unrestricted(double s, double a);
}  // namespace detail

/// a_0 = gamma, a_n = (-1)^n zeta(n+1); c_n = sum_{i+j=n} a_i a_j.
struct TaylorCoefficients {
  double gamma = 0.0;
  std::vector<double> a;
  std::vector<double> c;
};

TaylorCoefficients taylor_coefficients(unsigned N);

/// lambda(alpha) = lim_{s->1}(zeta(s,alpha) - alpha^{-s} - 1/(s-1))
///              = -psi(alpha) - 1/alpha.
struct LambdaValue {
  double alpha = 0.0;
  double value = 0.0;
};

/// Requires 0 < alpha <= 1. Absolute error <= 1e-12.
LambdaValue lambda_digamma(double alpha);

struct SeriesValue {
  double value = 0.0;
  double remainder_bound = 0.0;
};

/// Partial sum gamma + sum_{n=1..N-1} (-1)^n zeta(n+1) alpha^n together
/// with the certified remainder bound zeta(N+1) * alpha^N (O-constant 1).
/// Requires 0 < alpha < 1 (the terms do not vanish at alpha = 1).
SeriesValue lambda_series(double alpha, unsigned N);

}  // namespace charavg
