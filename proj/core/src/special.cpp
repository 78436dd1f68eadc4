#include "charavg/special.hpp"

#include <cmath>
#include <stdexcept>

#include "charavg/kahan.hpp"

namespace charavg {

namespace {

// B_2, B_4, ..., B_16 as doubles, for the digamma/Hurwitz asymptotics.
constexpr double kEvenBernoulli[8] = {
    1.0 / 6,    -1.0 / 30,   1.0 / 42,     -1.0 / 30,
    5.0 / 66,   -691.0 / 2730, 7.0 / 6,    -3617.0 / 510};

std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

}  // namespace

BernoulliTable bernoulli_table(unsigned N) {
  if (N > kBernoulliCap)
    throw std::invalid_argument("bernoulli_table: N exceeds cap");
  BernoulliTable t;
  t.max_index = N;
  t.numbers.resize(N + 1);
  t.numbers[0] = 1;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
  for (unsigned m = 1; m <= N; ++m) {
    const auto binom = binomial_row(m + 1);
    BigRational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += BigRational(binom[j]) * t.numbers[j];
    t.numbers[m] = -acc / BigRational(binom[m]);
  }
  return t;
}

BigRational bernoulli_poly(unsigned n, const BigRational& x, const BernoulliTable& table) {
  if (n > table.max_index)
    throw std::invalid_argument("bernoulli_poly: degree exceeds table");
  const auto binom = binomial_row(n);
  // Horner in x over k descending: sum_k C(n,k) B_k x^{n-k}.
  BigRational acc = 0;
  for (unsigned k = 0; k <= n; ++k) {
    acc = acc * x + BigRational(binom[k]) * table.numbers[k];
  }
  return acc;
}

BigInt faulhaber_sum(std::uint64_t k, unsigned m) {
  if (k == 0) throw std::invalid_argument("faulhaber_sum: k must be >= 1");
  static thread_local BernoulliTable table = bernoulli_table(kBernoulliCap);
  if (m + 1 > table.max_index)
    throw std::invalid_argument("faulhaber_sum: m exceeds Bernoulli cap");
  const BigRational diff =
      bernoulli_poly(m + 1, BigRational(BigInt(k) + 1), table) -
      bernoulli_poly(m + 1, BigRational(1), table);
  const BigRational s = diff / (m + 1);
  if (denominator(s) != 1)
    throw std::logic_error("faulhaber_sum: non-integer result");
  return numerator(s);
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: x must be > 0");
  // Shift into the asymptotic regime.
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double result = std::log(x) - 0.5 * inv;
  double power = inv2;
  for (unsigned j = 1; j <= 8; ++j) {
    result -= kEvenBernoulli[j - 1] / (2.0 * j) * power;
    power *= inv2;
  }
  return result + acc;
}

double euler_gamma() {
  static const double g = -digamma(1.0);
  return g;
}

namespace detail {

double hurwitz_zeta_unrestricted(double s, double a) {
  if (!(s > 0.0) || s == 1.0)
    throw std::invalid_argument("hurwitz_zeta: need s > 0, s != 1");
  if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta: need a > 0");
  // Euler-Maclaurin: shift so the expansion point is >= 18, correction
  // terms through B_16.
  unsigned M = 0;
  while (a + M < 18.0) ++M;
  KahanSum head;
  for (unsigned n = 0; n < M; ++n) head.add(std::pow(a + n, -s));
  const double x = a + M;
  double result = head.value();
  result += std::pow(x, 1.0 - s) / (s - 1.0);
  result += 0.5 * std::pow(x, -s);
  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
  double rising = s;           // s(s+1)...(s+2j-2), starts at j=1
  double factorial = 2.0;      // (2j)!
  double xpow = std::pow(x, -s - 1.0);
  for (unsigned j = 1; j <= 8; ++j) {
    result += kEvenBernoulli[j - 1] / factorial * rising * xpow;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    xpow /= x * x;
  }
  return result;
}

}  // namespace detail

double hurwitz_zeta(double s, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("hurwitz_zeta: need 0 < alpha <= 1");
  return detail::hurwitz_zeta_unrestricted(s, alpha);
}

double zeta_int(unsigned m) {
  if (m < 2) throw std::invalid_argument("zeta_int: m must be >= 2");
  return detail::hurwitz_zeta_unrestricted(static_cast<double>(m), 1.0);
}

TaylorCoefficients taylor_coefficients(unsigned N) {
  TaylorCoefficients t;
  t.gamma = euler_gamma();
  t.a.resize(N + 1);
  t.c.resize(N + 1);
  t.a[0] = t.gamma;
  for (unsigned n = 1; n <= N; ++n) {
    const double z = zeta_int(n + 1);
    t.a[n] = (n % 2 == 0) ? z : -z;
  }
  for (unsigned n = 0; n <= N; ++n) {
    KahanSum conv;
    for (unsigned i = 0; i <= n; ++i) conv.add(t.a[i] * t.a[n - i]);
    t.c[n] = conv.value();
  }
  return t;
}

LambdaValue lambda_digamma(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("lambda_digamma: need 0 < alpha <= 1");
  return {alpha, -digamma(alpha) - 1.0 / alpha};
}

SeriesValue lambda_series(double alpha, unsigned N) {
  if (!(alpha > 0.0) || alpha >= 1.0)
    throw std::invalid_argument("lambda_series: need 0 < alpha < 1");
  if (N == 0) throw std::invalid_argument("lambda_series: N must be >= 1");
  KahanSum sum;
  sum.add(euler_gamma());
  double apow = alpha;
  for (unsigned n = 1; n < N; ++n) {
    const double z = zeta_int(n + 1);
    sum.add((n % 2 == 0 ? z : -z) * apow);
    apow *= alpha;
  }
  // apow is now alpha^N.
  return {sum.value(), zeta_int(N + 1) * apow};
}

}  // namespace charavg
