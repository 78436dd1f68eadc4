#include "charavg/arith.hpp"

#include <numeric>
#include <stdexcept>

#include "charavg/special.hpp"

namespace charavg {

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization f;
  f.n = n;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

ArithmeticTables sieve_tables(std::uint64_t N, std::uint64_t cap) {
  if (N == 0) throw std::invalid_argument("sieve_tables: N must be >= 1");
  if (N > cap) throw std::invalid_argument("sieve_tables: N exceeds memory cap");

  ArithmeticTables t;
  t.limit = N;
  t.spf.assign(N + 1, 0);
  t.phi.assign(N + 1, 0);
  t.mu.assign(N + 1, 0);
  t.d.assign(N + 1, 0);
  std::vector<std::uint8_t> exp_spf(N + 1, 0);  // exponent of spf[n] in n

  t.phi[1] = 1;
  t.mu[1] = 1;
  t.d[1] = 1;
  for (std::uint64_t i = 2; i <= N; ++i) {
    if (t.spf[i] == 0) {
      for (std::uint64_t j = i; j <= N; j += i) {
        if (t.spf[j] == 0) t.spf[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
  for (std::uint64_t n = 2; n <= N; ++n) {
    const std::uint64_t p = t.spf[n];
    const std::uint64_t m = n / p;
    if (m % p == 0) {
      exp_spf[n] = static_cast<std::uint8_t>(exp_spf[m] + 1);
      t.phi[n] = static_cast<std::uint32_t>(t.phi[m] * p);
      t.mu[n] = 0;
      t.d[n] = static_cast<std::uint32_t>(t.d[m] / (exp_spf[m] + 1) * (exp_spf[m] + 2));
    } else {
      exp_spf[n] = 1;
      t.phi[n] = static_cast<std::uint32_t>(t.phi[m] * (p - 1));
      t.mu[n] = static_cast<std::int8_t>(-t.mu[m]);
      t.d[n] = t.d[m] * 2;
    }
  }
  return t;
}

std::uint64_t totient(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::uint64_t r = 1;
  for (const auto& pp : f.factors) {
    std::uint64_t pe = 1;
    for (unsigned i = 1; i < pp.exponent; ++i) pe *= pp.prime;
    r *= pe * (pp.prime - 1);
  }
  return r;
}

int moebius(std::uint64_t n) {
  const Factorization f = factorize(n);
  for (const auto& pp : f.factors)
    if (pp.exponent > 1) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::uint64_t divisor_count(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::uint64_t r = 1;
  for (const auto& pp : f.factors) r *= pp.exponent + 1;
  return r;
}

std::uint64_t truncated_divisor_count(std::uint64_t q, std::uint64_t n) {
  if (q < 3) throw std::invalid_argument("truncated_divisor_count: q must be >= 3");
  if (n == 0 || n > q * q)
    throw std::invalid_argument("truncated_divisor_count: need 1 <= n <= q^2");
  std::uint64_t count = 0;
  for (std::uint64_t u = 1; u * u <= n; ++u) {
    if (n % u != 0) continue;
    const std::uint64_t v = n / u;
    if (u <= q && v <= q) count += (u == v) ? 1 : 2;
  }
  return count;
}

BigInt coprime_power_sum_direct(std::uint64_t q, unsigned m) {
  if (q == 0) throw std::invalid_argument("coprime_power_sum_direct: q must be >= 1");
  BigInt sum = 0;
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    BigInt term = 1;
    for (unsigned i = 0; i < m; ++i) term *= a;
    sum += term;
  }
  return sum;
}

BigInt coprime_power_sum_moebius(std::uint64_t q, unsigned m) {
  if (q == 0) throw std::invalid_argument("coprime_power_sum_moebius: q must be >= 1");
  BigInt sum = 0;
  for (std::uint64_t d = 1; d <= q; ++d) {
    if (q % d != 0) continue;
    const int mu = moebius(d);
    if (mu == 0) continue;
    BigInt dm = 1;
    for (unsigned i = 0; i < m; ++i) dm *= d;
    sum += mu * dm * faulhaber_sum(q / d, m);
  }
  return sum;
}

BigInt coprime_power_sum_as_printed(std::uint64_t q, unsigned m) {
  if (q == 0) throw std::invalid_argument("coprime_power_sum_as_printed: q must be >= 1");
  BigInt sum = 0;
  for (std::uint64_t k = 1; k <= q; ++k) {
    if (q % k != 0) continue;
    const int mu = moebius(q / k);
    if (mu == 0) continue;
    sum += mu * faulhaber_sum(k, m);
  }
  return sum;
}

}  // namespace charavg
