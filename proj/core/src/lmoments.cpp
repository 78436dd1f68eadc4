#include "charavg/lmoments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "charavg/arith.hpp"
#include "charavg/kahan.hpp"
#include "charavg/special.hpp"

namespace charavg {

namespace {

double logsum_over_primes(std::uint64_t q) {
  const Factorization f = factorize(q);
  KahanSum s;
  s.add(std::log(static_cast<double>(q)));
  for (const auto& pp : f.factors)
    s.add(std::log(static_cast<double>(pp.prime)) / static_cast<double>(pp.prime - 1));
  return s.value();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q) {
  // extended Euclid; a coprime to q
  std::int64_t r0 = static_cast<std::int64_t>(q), r1 = static_cast<std::int64_t>(a % q);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::int64_t tmp = r0 - k * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - k * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(t0);
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

PrincipalLimit principal_limit(std::uint64_t q) {
  if (q < 3) throw std::invalid_argument("principal_limit: q must be >= 3");
  const double phi = static_cast<double>(totient(q));
  const double value =
      phi / static_cast<double>(q) * (logsum_over_primes(q) + euler_gamma());
  return {q, value};
}

MomentEngine::MomentEngine(std::uint64_t q) : q_(q), group_(q) {
  if (q < 3) throw std::invalid_argument("MomentEngine: q must be >= 3");
  const auto& cop = group_.coprime_residues();
  neg_psi_over_q_.reserve(cop.size());
  inverse_.reserve(cop.size());
  const double qd = static_cast<double>(q_);
  for (auto a : cop) {
    neg_psi_over_q_.push_back(-digamma(static_cast<double>(a) / qd) / qd);
    inverse_.push_back(mod_inverse(a, q_));
  }
}

std::vector<std::complex<double>> MomentEngine::l_values() const {
  const auto chars = group_.enumerate_characters();
  std::vector<std::complex<double>> out(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (chars[i].is_principal()) continue;  // pole; left as 0, never used
    const auto vals = group_.values_on_coprime(chars[i]);
    KahanComplexSum acc;
    for (std::size_t t = 0; t < vals.size(); ++t) acc.add(vals[t] * neg_psi_over_q_[t]);
    out[i] = acc.value();
  }
  return out;
}

std::complex<double> MomentEngine::l_at_one(const CharacterIndex& chi) const {
  if (chi.is_principal())
    throw std::invalid_argument("l_at_one: principal character has a pole at s = 1");
  const auto vals = group_.values_on_coprime(chi);
  KahanComplexSum acc;
  for (std::size_t t = 0; t < vals.size(); ++t) acc.add(vals[t] * neg_psi_over_q_[t]);
  return acc.value();
}

double MomentEngine::m2_bruteforce() const {
  const auto chars = group_.enumerate_characters();
  const auto ls = l_values();
  KahanComplexSum acc;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (chars[i].is_principal()) continue;
    const std::size_t ci = group_.index_of(group_.conjugate(chars[i]));
    acc.add(ls[i] * ls[ci]);  // L(1,chi) * L(1,conj chi) = |L|^2
  }
  const auto v = acc.value();
  if (std::abs(v.imag()) > 1e-9)
    throw std::logic_error("m2_bruteforce: imaginary residue exceeds 1e-9");
  return v.real();
}

double MomentEngine::m4_bruteforce() const {
  const auto chars = group_.enumerate_characters();
  const auto ls = l_values();
  KahanComplexSum acc;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (chars[i].is_principal()) continue;
    const std::size_t ci = group_.index_of(group_.conjugate(chars[i]));
    const std::complex<double> sq = ls[i] * ls[ci];
    acc.add(sq * sq);
  }
  const auto v = acc.value();
  if (std::abs(v.imag()) > 1e-9)
    throw std::logic_error("m4_bruteforce: imaginary residue exceeds 1e-9");
  return v.real();
}

double MomentEngine::m2_exact_identity() const {
  KahanSum acc;
  for (double x : neg_psi_over_q_) acc.add(x * x);
  const double k = principal_limit(q_).value;
  return static_cast<double>(group_.phi()) * acc.value() - k * k;
}

double MomentEngine::a_coefficient(std::uint64_t ell) const {
  if (ell == 0 || std::gcd(ell, q_) != 1)
    throw std::invalid_argument("a_coefficient: need gcd(l, q) = 1");
  const auto& cop = group_.coprime_residues();
  KahanSum acc;
  for (std::size_t i = 0; i < cop.size(); ++i) {
    const std::uint64_t b = ell % q_ * inverse_[i] % q_;
    // b is coprime to q, so b != 0 and lookup below is valid
    const std::size_t bi = static_cast<std::size_t>(
        std::lower_bound(cop.begin(), cop.end(), b) - cop.begin());
    acc.add(neg_psi_over_q_[i] * neg_psi_over_q_[bi]);
  }
  return acc.value();
}

double MomentEngine::m4_exact_identity() const {
  KahanSum acc;
  for (auto ell : group_.coprime_residues()) {
    const double a = a_coefficient(ell);
    acc.add(a * a);
  }
  const double k = principal_limit(q_).value;
  return static_cast<double>(group_.phi()) * acc.value() - k * k * k * k;
}

double MomentEngine::t1_main_term() const {
  const ArithmeticTables tab = sieve_tables(q_);
  KahanSum acc;
  for (std::uint64_t n = 1; n <= q_; ++n) {
    if (std::gcd(n, q_) != 1) continue;
    const double dn = static_cast<double>(tab.d[n]);
    const double nd = static_cast<double>(n);
    acc.add(dn * dn / (nd * nd));
  }
  return static_cast<double>(group_.phi()) * acc.value();
}

TwoRouteSum MomentEngine::residue_class_divisor_sum(std::uint64_t ell) const {
  if (ell == 0 || std::gcd(ell, q_) != 1)
    throw std::invalid_argument("residue_class_divisor_sum: need gcd(l, q) = 1");
  TwoRouteSum out;
  KahanSum divisor_route;
  for (std::uint64_t n = ell; n <= q_ * q_; n += q_) {
    const std::uint64_t c = truncated_divisor_count(q_, n);
    if (c != 0) divisor_route.add(static_cast<double>(c) / static_cast<double>(n));
  }
  out.divisor_route = divisor_route.value();

  const auto& cop = group_.coprime_residues();
  KahanSum pair_route;
  for (std::size_t i = 0; i < cop.size(); ++i) {
    std::uint64_t b = ell % q_ * inverse_[i] % q_;
    if (b == 0) b = q_;
    pair_route.add(1.0 / (static_cast<double>(cop[i]) * static_cast<double>(b)));
  }
  out.pair_route = pair_route.value();
  return out;
}

namespace {

struct Theorem2Shared {
  double phi;
  double q;
  double closed_terms;  // phi sum' 1/a^2 - (phi/q)^2 logsum^2 + gamma^2 (phi/q)^2
};

Theorem2Shared theorem2_shared(std::uint64_t q, const CharacterGroup& group) {
  Theorem2Shared sh;
  sh.phi = static_cast<double>(group.phi());
  sh.q = static_cast<double>(q);
  KahanSum inv2;
  for (auto a : group.coprime_residues()) {
    const double ad = static_cast<double>(a);
    inv2.add(1.0 / (ad * ad));
  }
  const double ratio = sh.phi / sh.q;
  const double ls = logsum_over_primes(q);
  const double g = euler_gamma();
  sh.closed_terms = sh.phi * inv2.value() - ratio * ratio * ls * ls + g * g * ratio * ratio;
  return sh;
}

}  // namespace

Theorem2Value MomentEngine::m2_theorem2(unsigned N) const {
  if (N < 2) throw std::invalid_argument("m2_theorem2: N must be >= 2");
  if (N > kBernoulliCap)
    throw std::invalid_argument("m2_theorem2: N exceeds Bernoulli cap");
  const Theorem2Shared sh = theorem2_shared(q_, group_);
  const TaylorCoefficients tc = taylor_coefficients(N);

  // r_m = (sum'_a a^m) / q^m, exact rational before rounding
  std::vector<double> r(N);
  for (unsigned m = 0; m < N; ++m) {
    BigInt qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q_;
    r[m] = BigRational(coprime_power_sum_moebius(q_, m), qm).convert_to<double>();
  }

  KahanSum s1;  // sum_{n=1..N-1} a_n q^{1-n} P(n-1) = sum a_n r_{n-1}
  for (unsigned n = 1; n < N; ++n) s1.add(tc.a[n] * r[n - 1]);
  KahanSum s2;  // sum_{n=0..N-1} c_n q^{-n} P(n) = sum c_n r_n
  for (unsigned n = 0; n < N; ++n) s2.add(tc.c[n] * r[n]);

  const double q2 = sh.q * sh.q;
  Theorem2Value out;
  out.value = sh.closed_terms + 2.0 * sh.phi / q2 * s1.value() + sh.phi / q2 * s2.value();

  // Certified termwise truncation bound: the lambda-series tail obeys
  // |tail| <= zeta(N+1) alpha^N (O-constant 1); the squared-series tail
  // uses |c_n| <= (n+1) zeta(2)^2 and the closed form
  // sum_{n>=N} (n+1) x^n = x^N (N+1 - N x) / (1-x)^2.
  const double zN1 = zeta_int(N + 1);
  const double z2 = zeta_int(2);
  KahanSum bound;
  for (auto a : group_.coprime_residues()) {
    const double ad = static_cast<double>(a);
    const double alpha = ad / sh.q;
    const double alphaN = std::pow(alpha, static_cast<double>(N));
    const double lam_tail = 2.0 / (ad * sh.q) * zN1 * alphaN;
    const double om = 1.0 - alpha;
    const double sq_tail =
        z2 * z2 * alphaN * (N + 1.0 - N * alpha) / (om * om) / q2;
    bound.add(lam_tail + sq_tail);
  }
  out.truncation_bound = sh.phi * bound.value();
  return out;
}

Theorem2Value MomentEngine::m2_theorem2_as_printed(unsigned N) const {
  if (N < 2) throw std::invalid_argument("m2_theorem2_as_printed: N must be >= 2");
  if (N > kBernoulliCap)
    throw std::invalid_argument("m2_theorem2_as_printed: N exceeds Bernoulli cap");
  const Theorem2Shared sh = theorem2_shared(q_, group_);
  const TaylorCoefficients tc = taylor_coefficients(N);
  std::vector<double> r(N);
  for (unsigned m = 0; m < N; ++m) {
    BigInt qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q_;
    r[m] = BigRational(coprime_power_sum_as_printed(q_, m), qm).convert_to<double>();
  }
  KahanSum s1;
  for (unsigned n = 1; n < N; ++n) s1.add(tc.a[n] * r[n - 1]);
  KahanSum s2;
  for (unsigned n = 0; n < N; ++n) s2.add(tc.c[n] * r[n]);
  const double q2 = sh.q * sh.q;
  Theorem2Value out;
  out.value = sh.closed_terms + 2.0 * sh.phi / q2 * s1.value() + sh.phi / q2 * s2.value();
  out.truncation_bound = 0.0;  // not certified; documentation variant
  return out;
}

double MomentEngine::m2_theorem2_converged() const {
  const Theorem2Shared sh = theorem2_shared(q_, group_);
  const auto& cop = group_.coprime_residues();
  const double g = euler_gamma();
  KahanSum series;  // sum'_a [ 2/(aq) (lambda - gamma) + (lambda/q)^2 ]
  for (std::size_t i = 0; i < cop.size(); ++i) {
    const double ad = static_cast<double>(cop[i]);
    // lambda(a/q) = -psi(a/q) - q/a, from the cached -psi(a/q)/q table
    const double lam = sh.q * neg_psi_over_q_[i] - sh.q / ad;
    series.add(2.0 / (ad * sh.q) * (lam - g) + (lam / sh.q) * (lam / sh.q));
  }
  return sh.closed_terms + sh.phi * series.value();
}

PartialLValue l_at_one_partial_oracle(const CharacterGroup& g, const CharacterIndex& chi,
                                      std::uint64_t N) {
  if (chi.is_principal())
    throw std::invalid_argument("l_at_one_partial_oracle: principal character");
  const std::uint64_t q = g.modulus();
  if (N < q) throw std::invalid_argument("l_at_one_partial_oracle: need N >= q");
  // chi(n) by residue class, one period precomputed
  std::vector<std::complex<double>> period(q);
  for (std::uint64_t r = 0; r < q; ++r)
    period[r] = g.evaluate(chi, static_cast<std::int64_t>(r));
  KahanComplexSum acc;
  std::uint64_t r = 1 % q;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const auto& v = period[r];
    if (v.real() != 0.0 || v.imag() != 0.0) acc.add(v / static_cast<double>(n));
    if (++r == q) r = 0;
  }
  return {acc.value(), 2.0 * static_cast<double>(q) / static_cast<double>(N)};
}

double moment_identity_at_s(std::uint64_t q, double s) {
  if (q < 3) throw std::invalid_argument("moment_identity_at_s: q must be >= 3");
  if (!(s > 1.0) || s > 4.0)
    throw std::invalid_argument("moment_identity_at_s: need 1 < s <= 4");
  const CharacterGroup g(q);
  const auto& cop = g.coprime_residues();

  // Residue-class partial sums of n^{-s}, truncated at a full period.
  const std::uint64_t M = q * (6'000'000 / q);
  std::vector<KahanSum> cls(q);
  const bool s_is_2 = (s == 2.0);
  const bool s_is_3 = (s == 3.0);
  std::uint64_t r = 1 % q;
  for (std::uint64_t n = 1; n <= M; ++n) {
    const double inv = 1.0 / static_cast<double>(n);
    double term;
    if (s_is_2)
      term = inv * inv;
    else if (s_is_3)
      term = inv * inv * inv;
    else
      term = std::pow(static_cast<double>(n), -s);
    cls[r].add(term);
    if (++r == q) r = 0;
  }

  // Direct side: sum over nonprincipal chi of |sum_r chi(r) T_s(r)|^2.
  const auto chars = g.enumerate_characters();
  KahanSum lhs;
  for (const auto& chi : chars) {
    if (chi.is_principal()) continue;
    const auto vals = g.values_on_coprime(chi);
    KahanComplexSum l;
    for (std::size_t i = 0; i < cop.size(); ++i)
      l.add(vals[i] * cls[cop[i] % q].value());
    lhs.add(std::norm(l.value()));
  }

  // Hurwitz side: phi sum'_a z_a^2 - (sum'_a z_a)^2, z_a = q^{-s} zeta(s, a/q).
  const double qs = std::pow(static_cast<double>(q), -s);
  KahanSum zsq, zsum;
  for (auto a : cop) {
    const double z = qs * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
    zsq.add(z * z);
    zsum.add(z);
  }
  const double rhs =
      static_cast<double>(g.phi()) * zsq.value() - zsum.value() * zsum.value();
  return std::abs(lhs.value() - rhs);
}

MomentReport moment_report(std::uint64_t q, unsigned N) {
  MomentReport rep;
  const MomentEngine eng(q);
  rep.q = q;
  rep.phi_q = eng.group().phi();

  double t0 = now_ms();
  rep.m2_bruteforce = eng.m2_bruteforce();
  rep.m4_bruteforce = eng.m4_bruteforce();
  rep.ms_bruteforce = now_ms() - t0;

  t0 = now_ms();
  rep.m2_exact = eng.m2_exact_identity();
  rep.m4_exact = eng.m4_exact_identity();
  rep.t1_main_term = eng.t1_main_term();
  rep.k_q = principal_limit(q).value;
  rep.ms_identities = now_ms() - t0;

  t0 = now_ms();
  const Theorem2Value t2 = eng.m2_theorem2(N);
  rep.m2_theorem2 = t2.value;
  rep.m2_theorem2_bound = t2.truncation_bound;
  const double converged = eng.m2_theorem2_converged();
  rep.ms_theorem2 = now_ms() - t0;

  const double qd = static_cast<double>(q);
  const double phid = static_cast<double>(rep.phi_q);
  const double lq = std::log(qd + 2.0);
  rep.e1 = std::sqrt(qd) * std::abs(rep.m4_bruteforce - rep.t1_main_term) /
           (phid * lq * lq * lq * lq);
  rep.e2 = qd * qd * std::abs(rep.m2_bruteforce - converged) /
           (static_cast<double>(divisor_count(q)) * phid);
  return rep;
}

double m2_bruteforce(std::uint64_t q) { return MomentEngine(q).m2_bruteforce(); }
double m4_bruteforce(std::uint64_t q) { return MomentEngine(q).m4_bruteforce(); }
double m2_exact_identity(std::uint64_t q) { return MomentEngine(q).m2_exact_identity(); }
double m4_exact_identity(std::uint64_t q) { return MomentEngine(q).m4_exact_identity(); }
double t1_main_term(std::uint64_t q) { return MomentEngine(q).t1_main_term(); }

}  // namespace charavg
