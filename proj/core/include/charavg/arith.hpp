#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace charavg {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Canonical prime-power decomposition: primes strictly increasing,
/// exponents >= 1, empty for n = 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

/// Trial division. Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

/// Sieved tables of smallest prime factor, totient, Moebius and divisor
/// count for 1..limit. Indexing is by n; index 0 is unused.
struct ArithmeticTables {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> spf;
  std::vector<std::uint32_t> phi;
  std::vector<std::int8_t> mu;
  std::vector<std::uint32_t> d;
};

constexpr std::uint64_t kDefaultSieveCap = 10'000'000;

/// Throws std::invalid_argument for N = 0 or N > cap.
ArithmeticTables sieve_tables(std::uint64_t N, std::uint64_t cap = kDefaultSieveCap);

std::uint64_t totient(std::uint64_t n);
int moebius(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);

/// a_q(n): number of ordered pairs (u, v) with 1 <= u, v <= q and u*v = n.
/// Requires q >= 3 and 1 <= n <= q^2.
std::uint64_t truncated_divisor_count(std::uint64_t q, std::uint64_t n);

/// Sum of a^m over 1 <= a <= q with gcd(a, q) = 1, by direct enumeration.
BigInt coprime_power_sum_direct(std::uint64_t q, unsigned m);

/// Same quantity through Moebius inversion and Faulhaber sums:
///   sum_{d|q} mu(d) * d^m * S_m(q/d),   S_m(k) = sum_{a=1..k} a^m.
/// Exact; agrees with coprime_power_sum_direct for all q, m.
BigInt coprime_power_sum_moebius(std::uint64_t q, unsigned m);

/// The tempting but wrong form of the inversion, without the d^m factor:
///   sum_{k|q} mu(q/k) * S_m(k).
/// Kept for documentation; does NOT equal the direct sum in general
/// (already wrong at q = 3, m = 1: gives 5 instead of 3).
BigInt coprime_power_sum_as_printed(std::uint64_t q, unsigned m);

}  // namespace charavg
