#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "charavg/kahan.hpp"
#include "charavg/lmoments.hpp"
#include "doctest.h"

using namespace charavg;
using std::numbers::pi;

TEST_CASE("principal limit K(q)") {
  const double g = 0.57721566490153286;
  CHECK(principal_limit(3).value ==
        doctest::Approx((2.0 / 3) * (std::log(3.0) + std::log(3.0) / 2 + g))
            .epsilon(1e-13));
  CHECK(principal_limit(4).value ==
        doctest::Approx(0.5 * (std::log(4.0) + std::log(2.0) + g)).epsilon(1e-13));
  CHECK_THROWS_AS(principal_limit(2), std::invalid_argument);

  // prime shape: K(p) ~ ((p-1)/p)(ln p + gamma)
  const double k = principal_limit(1999).value;
  const double approx = (1998.0 / 1999.0) * (std::log(1999.0) + g);
  CHECK(std::abs(k - approx) < 0.01);
}

TEST_CASE("L(1, chi) closed forms and partial-sum oracle") {
  const MomentEngine e3(3);
  const MomentEngine e4(4);
  for (const auto& chi : e3.group().enumerate_characters())
    if (!chi.is_principal()) {
      const auto l = e3.l_at_one(chi);
      CHECK(std::abs(l - std::complex<double>(pi / (3.0 * std::sqrt(3.0)), 0.0)) <
            1e-12);
      const auto part = l_at_one_partial_oracle(e3.group(), chi, 1'000'000);
      CHECK(part.error_bound == doctest::Approx(6e-6).epsilon(1e-12));
      CHECK(std::abs(part.value - l) <= part.error_bound);
    }
  for (const auto& chi : e4.group().enumerate_characters())
    if (!chi.is_principal()) {
      const auto l = e4.l_at_one(chi);
      CHECK(std::abs(l - std::complex<double>(pi / 4.0, 0.0)) < 1e-12);
      const auto part = l_at_one_partial_oracle(e4.group(), chi, 1'000'000);
      CHECK(part.error_bound == doctest::Approx(8e-6).epsilon(1e-12));
      CHECK(std::abs(part.value - l) <= part.error_bound);
    }
  const MomentEngine e5(5);
  for (const auto& chi : e5.group().enumerate_characters())
    if (!chi.is_principal()) {
      const auto part = l_at_one_partial_oracle(e5.group(), chi, 1'000'000);
      CHECK(std::abs(part.value - e5.l_at_one(chi)) <= 2.0 * 5.0 / 1'000'000);
    }

  CHECK_THROWS_AS((void)e3.l_at_one(e3.group().principal_character()),
                  std::invalid_argument);
  CHECK_THROWS_AS(l_at_one_partial_oracle(e3.group(),
                                          e3.group().principal_character(), 100),
                  std::invalid_argument);
}

TEST_CASE("second and fourth moment closed forms") {
  CHECK(m2_bruteforce(3) == doctest::Approx(pi * pi / 27.0).epsilon(1e-12));
  CHECK(m2_bruteforce(4) == doctest::Approx(pi * pi / 16.0).epsilon(1e-12));
  CHECK(m4_bruteforce(3) ==
        doctest::Approx(pi * pi * pi * pi / 729.0).epsilon(1e-12));
  CHECK(m4_bruteforce(4) ==
        doctest::Approx(pi * pi * pi * pi / 256.0).epsilon(1e-12));
}

TEST_CASE("exact identities agree with brute force") {
  for (std::uint64_t q = 3; q <= 80; ++q) {
    const MomentEngine eng(q);
    const double m2 = eng.m2_bruteforce();
    const double m4 = eng.m4_bruteforce();
    CHECK(std::abs(m2 - eng.m2_exact_identity()) <= 1e-9 * std::max(1.0, m2));
    CHECK(std::abs(m4 - eng.m4_exact_identity()) <= 1e-8 * std::max(1.0, m4));
  }
}

TEST_CASE("A coefficients") {
  const MomentEngine eng(3);
  CHECK(eng.a_coefficient(1) == doctest::Approx(1.28304).epsilon(1e-5));
  CHECK(eng.a_coefficient(2) == doctest::Approx(0.91750).epsilon(1e-5));
  CHECK_THROWS_AS((void)eng.a_coefficient(3), std::invalid_argument);

  for (std::uint64_t q = 3; q <= 60; ++q) {
    const MomentEngine e(q);
    KahanSum sum;
    for (auto ell : e.group().coprime_residues()) sum.add(e.a_coefficient(ell));
    const double k2 = principal_limit(q).value * principal_limit(q).value;
    CHECK(std::abs(sum.value() - k2) <= 1e-9 * k2);
  }
}

TEST_CASE("Theorem 1 main term") {
  CHECK(t1_main_term(3) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(t1_main_term(4) == doctest::Approx(26.0 / 9.0).epsilon(1e-13));
  // q=5: phi=4, terms d(1)^2/1 + d(2)^2/4 + d(3)^2/9 + d(4)^2/16
  CHECK(t1_main_term(5) ==
        doctest::Approx(4.0 * (1.0 + 1.0 + 4.0 / 9.0 + 9.0 / 16.0)).epsilon(1e-13));
}

TEST_CASE("residue-class divisor sums") {
  const MomentEngine eng(3);
  CHECK(eng.residue_class_divisor_sum(1).pair_route ==
        doctest::Approx(1.25).epsilon(1e-13));
  CHECK(eng.residue_class_divisor_sum(2).pair_route ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS((void)eng.residue_class_divisor_sum(3), std::invalid_argument);

  for (std::uint64_t q = 3; q <= 50; ++q) {
    const MomentEngine e(q);
    for (auto ell : e.group().coprime_residues()) {
      const auto tr = e.residue_class_divisor_sum(ell);
      CHECK(std::abs(tr.divisor_route - tr.pair_route) <=
            1e-10 * std::max(1.0, std::abs(tr.pair_route)));
    }
  }
}

TEST_CASE("Theorem 2 right-hand side") {
  const MomentEngine e3(3);
  const MomentEngine e4(4);
  const double budget3 = 10.0 * 2 * 2 / 9.0 + e3.m2_theorem2(40).truncation_bound;
  CHECK(std::abs(e3.m2_theorem2(40).value - e3.m2_exact_identity()) <= budget3);
  const double budget4 = 10.0 * 3 * 2 / 16.0 + e4.m2_theorem2(40).truncation_bound;
  CHECK(std::abs(e4.m2_theorem2(40).value - pi * pi / 16.0) <= budget4);

  const MomentEngine e100(100);
  CHECK(e100.m2_theorem2(20).truncation_bound < e100.m2_theorem2(10).truncation_bound);
  CHECK_THROWS_AS((void)e100.m2_theorem2(1), std::invalid_argument);
  CHECK_THROWS_AS((void)e100.m2_theorem2(65), std::invalid_argument);

  // the series summed in closed form isolates the theorem's own error term
  for (std::uint64_t q : {3, 10, 37, 100}) {
    const MomentEngine e(q);
    CHECK(std::abs(e.m2_theorem2_converged() - e.m2_bruteforce()) < 1.0);
  }

  // uncorrected power-sum variant visibly misses already at q = 3
  CHECK(std::abs(e3.m2_theorem2_as_printed(40).value - e3.m2_theorem2(40).value) >
        0.01);
}

TEST_CASE("moment identity at s > 1") {
  CHECK(moment_identity_at_s(3, 2.0) <= 1e-9);
  CHECK(moment_identity_at_s(8, 2.0) <= 1e-9);
  CHECK(moment_identity_at_s(5, 3.0) <= 1e-9);
  CHECK_THROWS_AS(moment_identity_at_s(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(moment_identity_at_s(3, 5.0), std::invalid_argument);
}

TEST_CASE("moment report assembly") {
  const auto r3 = moment_report(3);
  CHECK(r3.q == 3);
  CHECK(r3.phi_q == 2);
  CHECK(r3.m4_bruteforce == doctest::Approx(0.13362).epsilon(1e-4));
  CHECK(r3.t1_main_term == doctest::Approx(4.0).epsilon(1e-13));
  const double ln5 = std::log(5.0);
  CHECK(r3.e1 == doctest::Approx(std::sqrt(3.0) * std::abs(r3.m4_bruteforce - 4.0) /
                                 (2.0 * ln5 * ln5 * ln5 * ln5))
                     .epsilon(1e-12));

  const auto r4 = moment_report(4);
  CHECK(r4.m2_bruteforce == doctest::Approx(0.61685).epsilon(1e-4));
  CHECK(r4.m2_exact == doctest::Approx(r4.m2_bruteforce).epsilon(1e-10));
  CHECK(r4.m4_exact == doctest::Approx(r4.m4_bruteforce).epsilon(1e-9));
  CHECK(r4.k_q == doctest::Approx(principal_limit(4).value).epsilon(1e-15));
}

TEST_CASE("determinism: identical runs produce identical bits") {
  for (std::uint64_t q : {7, 24, 101}) {
    const auto a = moment_report(q);
    const auto b = moment_report(q);
    CHECK(a.m2_bruteforce == b.m2_bruteforce);
    CHECK(a.m4_bruteforce == b.m4_bruteforce);
    CHECK(a.m2_theorem2 == b.m2_theorem2);
    CHECK(a.e1 == b.e1);
    CHECK(a.e2 == b.e2);
  }
}
