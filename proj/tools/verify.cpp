#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <stdexcept>

#include "charavg/arith.hpp"
#include "charavg/chargroup.hpp"
#include "charavg/kahan.hpp"
#include "charavg/lmoments.hpp"
#include "charavg/special.hpp"
#include "report_io.hpp"

namespace charavg::cli {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
  out.push_back({name, pass, pass ? "" : detail});
}

void suite_bernoulli(std::vector<CheckResult>& out, std::uint64_t qmax) {
  const std::uint64_t qcap = qmax ? qmax : 300;

  const BernoulliTable t = bernoulli_table(32);
  bool ok = t.numbers[0] == 1 && t.numbers[1] == BigRational(-1, 2) &&
            t.numbers[2] == BigRational(1, 6);
  for (unsigned k = 1; 2 * k + 1 <= t.max_index && ok; ++k)
    ok = t.numbers[2 * k + 1] == 0;
  add(out, "bernoulli numbers (B0, B1, B2, odd vanish)", ok);

  ok = bernoulli_poly(2, BigRational(4), t) == BigRational(73, 6) &&
       bernoulli_poly(1, BigRational(1), t) == BigRational(1, 2) &&
       bernoulli_poly(3, BigRational(1), t) == bernoulli_poly(3, BigRational(0), t);
  add(out, "bernoulli polynomial spot values", ok);

  ok = true;
  std::string det;
  for (std::uint64_t k = 1; k <= 50 && ok; ++k) {
    for (unsigned m = 0; m <= 20 && ok; ++m) {
      BigInt loop = 0;
      for (std::uint64_t a = 1; a <= k; ++a) {
        BigInt p = 1;
        for (unsigned i = 0; i < m; ++i) p *= a;
        loop += p;
      }
      if (faulhaber_sum(k, m) != loop) {
        ok = false;
        det = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      }
    }
  }
  add(out, "faulhaber vs loop (k<=50, m<=20)", ok, det);

  ok = true;
  det.clear();
  for (std::uint64_t q = 1; q <= qcap && ok; ++q) {
    for (unsigned m = 0; m <= 6 && ok; ++m) {
      if (coprime_power_sum_moebius(q, m) != coprime_power_sum_direct(q, m)) {
        ok = false;
        det = "q=" + std::to_string(q) + " m=" + std::to_string(m);
      }
    }
  }
  add(out, "corrected Moebius-Faulhaber = direct enumeration", ok, det);

  ok = coprime_power_sum_as_printed(3, 1) == 5 && coprime_power_sum_direct(3, 1) == 3;
  add(out, "as-printed variant refuted at (q=3, m=1): 5 vs 3", ok);
}

void suite_taylor(std::vector<CheckResult>& out, std::uint64_t) {
  bool ok = true;
  std::string det;
  for (double x = 0.1; x <= 20.0 + 1e-12; x += 0.1) {
    if (std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) > 1e-13) {
      ok = false;
      det = "x=" + fmt(x);
      break;
    }
  }
  add(out, "digamma recurrence |psi(x+1)-psi(x)-1/x| <= 1e-13", ok, det);

  ok = true;
  for (double x : {1.0 / 3, 1.0 / 4, 1.0 / 5}) {
    const double lhs = digamma(1.0 - x) - digamma(x);
    const double rhs = std::numbers::pi / std::tan(std::numbers::pi * x);
    if (std::abs(lhs - rhs) > 1e-11) ok = false;
  }
  add(out, "digamma reflection formula", ok);

  ok = true;
  det.clear();
  for (double s : {0.5, 2.0, 3.0}) {
    for (double alpha = 0.1; alpha < 1.0; alpha += 0.1) {
      const double lhs = hurwitz_zeta(s, alpha) -
                         detail::hurwitz_zeta_unrestricted(s, alpha + 1.0);
      if (std::abs(lhs - std::pow(alpha, -s)) > 1e-11) {
        ok = false;
        det = "s=" + fmt(s) + " alpha=" + fmt(alpha);
      }
    }
  }
  add(out, "hurwitz ladder zeta(s,a)-zeta(s,a+1)=a^-s", ok, det);

  ok = true;
  det.clear();
  for (double alpha = 0.05; alpha <= 0.9 + 1e-12; alpha += 0.05) {
    for (unsigned N : {5u, 10u, 20u}) {
      const SeriesValue sv = lambda_series(alpha, N);
      const double lam = lambda_digamma(alpha).value;
      const double err = std::abs(sv.value - lam);
      // The analytic bound can sit below one ulp of lambda (e.g. alpha=0.05,
      // N=20 gives ~1e-26); allow the rounding error of the two routes.
      const double fp_slack = 8 * std::numeric_limits<double>::epsilon() *
                              std::max(1.0, std::abs(lam));
      if (err > sv.remainder_bound + fp_slack) {
        ok = false;
        det = "alpha=" + fmt(alpha) + " N=" + std::to_string(N);
      }
    }
  }
  add(out, "lambda series remainder certified (O-constant 1)", ok, det);

  ok = true;
  det.clear();
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double lam = lambda_digamma(alpha).value;
    double prev = 1e300;
    for (double eps : {1e-3, 1e-4, 1e-5}) {
      const double expr = hurwitz_zeta(1.0 + eps, alpha) -
                          std::pow(alpha, -(1.0 + eps)) - 1.0 / eps;
      const double diff = std::abs(expr - lam);
      if (diff > 10.0 * eps || diff > prev) {
        ok = false;
        det = "alpha=" + fmt(alpha) + " eps=" + fmt(eps);
      }
      prev = diff;
    }
  }
  add(out, "lambda = s->1 limit of Hurwitz regularization (linear in eps)", ok, det);
}

void suite_orthogonality(std::vector<CheckResult>& out, std::uint64_t qmax) {
  const std::uint64_t qcap = qmax ? qmax : 100;
  bool ok = true;
  std::string det;
  double worst = 0.0;
  for (std::uint64_t q = 1; q <= qcap; ++q) {
    const CharacterGroup g(q);
    const auto rep = orthogonality_check(g);
    worst = std::max(worst, rep.max_residual);
    if (!rep.pass) {
      ok = false;
      det = "q=" + std::to_string(q) + ": " + rep.first_failure;
      break;
    }
  }
  add(out, "orthogonality relations, q <= " + std::to_string(qcap) +
               " (max residual " + fmt(worst) + ")",
      ok, det);

  ok = true;
  det.clear();
  std::mt19937 rng(12345);
  for (std::uint64_t q = 1; q <= std::min<std::uint64_t>(qcap, 100); ++q) {
    const CharacterGroup g(q);
    std::uniform_int_distribution<std::int64_t> dist(-5000, 5000);
    for (const auto& chi : g.enumerate_characters()) {
      for (int rep = 0; rep < 4; ++rep) {
        const std::int64_t m = dist(rng), n = dist(rng);
        const auto lhs = g.evaluate(chi, m * n);
        const auto rhs = g.evaluate(chi, m) * g.evaluate(chi, n);
        if (std::abs(lhs - rhs) > 1e-12) {
          ok = false;
          det = "q=" + std::to_string(q);
        }
      }
    }
  }
  add(out, "complete multiplicativity (random arguments)", ok, det);
}

void suite_identities(std::vector<CheckResult>& out, std::uint64_t qmax) {
  bool ok = true;
  std::string det;
  const std::uint64_t q2cap = qmax ? qmax : 200;
  for (std::uint64_t q = 3; q <= q2cap; ++q) {
    const MomentEngine eng(q);
    const double bf = eng.m2_bruteforce();
    const double ex = eng.m2_exact_identity();
    if (std::abs(bf - ex) > 1e-9 * std::max(1.0, bf)) {
      ok = false;
      det = "q=" + std::to_string(q) + " |diff|=" + fmt(std::abs(bf - ex));
      break;
    }
  }
  add(out, "m2 exact identity, q <= " + std::to_string(q2cap), ok, det);

  ok = true;
  det.clear();
  const std::uint64_t q4cap = std::min<std::uint64_t>(qmax ? qmax : 60, 200);
  for (std::uint64_t q = 3; q <= q4cap; ++q) {
    const MomentEngine eng(q);
    const double bf = eng.m4_bruteforce();
    const double ex = eng.m4_exact_identity();
    if (std::abs(bf - ex) > 1e-8 * std::max(1.0, bf)) {
      ok = false;
      det = "q=" + std::to_string(q) + " |diff|=" + fmt(std::abs(bf - ex));
      break;
    }
  }
  add(out, "m4 exact identity, q <= " + std::to_string(q4cap), ok, det);

  ok = true;
  det.clear();
  for (std::uint64_t q = 3; q <= q4cap; ++q) {
    const MomentEngine eng(q);
    KahanSum total;
    for (auto ell : eng.group().coprime_residues()) total.add(eng.a_coefficient(ell));
    const double k2 = principal_limit(q).value * principal_limit(q).value;
    if (std::abs(total.value() - k2) > 1e-9 * k2) {
      ok = false;
      det = "q=" + std::to_string(q);
      break;
    }
  }
  add(out, "A-coefficient aggregation sum'_l A = K(q)^2", ok, det);

  ok = true;
  det.clear();
  const std::uint64_t qrcap = std::min<std::uint64_t>(qmax ? qmax : 50, 100);
  for (std::uint64_t q = 3; q <= qrcap; ++q) {
    const MomentEngine eng(q);
    for (auto ell : eng.group().coprime_residues()) {
      const TwoRouteSum tr = eng.residue_class_divisor_sum(ell);
      if (std::abs(tr.divisor_route - tr.pair_route) >
          1e-10 * std::max(1.0, std::abs(tr.pair_route))) {
        ok = false;
        det = "q=" + std::to_string(q) + " l=" + std::to_string(ell);
      }
    }
  }
  add(out, "residue-class divisor sum, both routes agree", ok, det);

  ok = true;
  det.clear();
  for (std::uint64_t q : {3, 5, 8}) {
    for (double s : {2.0, 3.0}) {
      const double resid = moment_identity_at_s(q, s);
      if (resid > 1e-9) {
        ok = false;
        det = "q=" + std::to_string(q) + " s=" + fmt(s) + " residual=" + fmt(resid);
      }
    }
  }
  add(out, "s>1 second-moment orthogonality identity (spot)", ok, det);
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t qmax) {
  std::vector<CheckResult> out;
  if (suite == "bernoulli")
    suite_bernoulli(out, qmax);
  else if (suite == "taylor")
    suite_taylor(out, qmax);
  else if (suite == "orthogonality")
    suite_orthogonality(out, qmax);
  else if (suite == "identities")
    suite_identities(out, qmax);
  else if (suite == "all") {
    suite_bernoulli(out, qmax);
    suite_taylor(out, qmax);
    suite_orthogonality(out, qmax);
    suite_identities(out, qmax);
  } else
    throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace charavg::cli
