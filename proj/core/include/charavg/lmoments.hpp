#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "charavg/chargroup.hpp"

namespace charavg {

/// K(q) = lim_{s->1}(L(s, chi_0) - phi(q)/(q^s (s-1)))
///      = (phi(q)/q) (log q + sum_{p|q} log p/(p-1) + gamma).
struct PrincipalLimit {
  std::uint64_t q = 0;
  double value = 0.0;
};

/// Requires q >= 3.
PrincipalLimit principal_limit(std::uint64_t q);

struct Theorem2Value {
  double value = 0.0;
  double truncation_bound = 0.0;
};

struct TwoRouteSum {
  double divisor_route = 0.0;
  double pair_route = 0.0;
};

/// Per-modulus record: brute-force moments, identity values, theorem
/// main terms and normalized error diagnostics.
struct MomentReport {
  std::uint64_t q = 0;
  std::uint64_t phi_q = 0;
  double m2_bruteforce = 0.0;
  double m2_exact = 0.0;
  double m2_theorem2 = 0.0;
  double m2_theorem2_bound = 0.0;
  double m4_bruteforce = 0.0;
  double m4_exact = 0.0;
  double t1_main_term = 0.0;
  double k_q = 0.0;
  double e1 = 0.0;  // sqrt(q)|m4 - main| / (phi * ln^4(q+2))
  double e2 = 0.0;  // q^2 * (series-converged theorem-2 residual) / (d(q) phi(q))
  double ms_bruteforce = 0.0;
  double ms_identities = 0.0;
  double ms_theorem2 = 0.0;
};

/// Shared per-q state: character group, digamma table over a/q, modular
/// inverses. Immutable after construction; safe to use from many threads.
class MomentEngine {
 public:
  /// Requires q >= 3.
  explicit MomentEngine(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  const CharacterGroup& group() const { return group_; }

  /// L(1, chi) = -(1/q) sum'_a chi(a) psi(a/q). Rejects the principal
  /// character (pole at s = 1).
  std::complex<double> l_at_one(const CharacterIndex& chi) const;

  double m2_bruteforce() const;
  double m4_bruteforce() const;

  /// phi(q) sum'_a (psi(a/q)/q)^2 - K(q)^2.
  double m2_exact_identity() const;

  /// A(1, l, q) = sum over the phi(q) pairs a*b = l (mod q) of
  /// (psi(a/q)/q)(psi(b/q)/q). Requires gcd(l, q) = 1.
  double a_coefficient(std::uint64_t ell) const;

  /// phi(q) sum'_l A(1,l,q)^2 - K(q)^4.
  double m4_exact_identity() const;

  /// phi(q) sum_{n<=q, (n,q)=1} d(n)^2 / n^2.
  double t1_main_term() const;

  /// Both evaluations of sum_{n <= q^2, n = l (q)} a_q(n)/n:
  /// the truncated-divisor-count route and the direct pair route.
  TwoRouteSum residue_class_divisor_sum(std::uint64_t ell) const;

  /// Theorem 2 right-hand side, series truncated at N (terms n <= N-1),
  /// coprime power sums via the corrected Moebius-Faulhaber identity.
  /// The theorem's own O(d(q) phi(q)/q^2) term is not added.
  /// Requires 2 <= N <= kBernoulliCap.
  Theorem2Value m2_theorem2(unsigned N) const;

  /// Same right-hand side with the infinite series summed in closed form
  /// (through lambda(a/q)); residual against m2_bruteforce isolates the
  /// theorem's O(d(q) phi(q)/q^2) error term.
  double m2_theorem2_converged() const;

  /// As-printed series variant (uncorrected power-sum identity); kept for
  /// documentation, deliberately non-conforming.
  Theorem2Value m2_theorem2_as_printed(unsigned N) const;

 private:
  std::uint64_t q_;
  CharacterGroup group_;
  // -psi(a/q)/q per coprime residue, parallel to group_.coprime_residues().
  std::vector<double> neg_psi_over_q_;
  std::vector<std::uint64_t> inverse_;  // a^{-1} mod q, parallel to coprime list

  std::vector<std::complex<double>> l_values() const;
};

/// Truncated Dirichlet series sum_{n<=N} chi(n)/n with the Abel-summation
/// tail bound 2q/N. Requires chi nonprincipal and N >= q.
struct PartialLValue {
  std::complex<double> value;
  double error_bound = 0.0;
};
PartialLValue l_at_one_partial_oracle(const CharacterGroup& g, const CharacterIndex& chi,
                                      std::uint64_t N);

/// |sum_{chi != chi0} |L(s,chi)|^2 (direct truncated series) minus the
/// Hurwitz-route value phi sum'_a |q^{-s} zeta(s,a/q)|^2 -
/// |q^{-s} sum'_a zeta(s,a/q)|^2|. Requires 1 < s <= 4, q >= 3.
double moment_identity_at_s(std::uint64_t q, double s);

/// Full per-modulus record, theorem-2 series truncated at N.
MomentReport moment_report(std::uint64_t q, unsigned N = 40);

// Convenience single-shot wrappers (each builds a MomentEngine).
double m2_bruteforce(std::uint64_t q);
double m4_bruteforce(std::uint64_t q);
double m2_exact_identity(std::uint64_t q);
double m4_exact_identity(std::uint64_t q);
double t1_main_term(std::uint64_t q);

}  // namespace charavg
