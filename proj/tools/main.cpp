#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "charavg/arith.hpp"
#include "charavg/lmoments.hpp"
#include "charavg/special.hpp"
#include "report_io.hpp"
#include "verify.hpp"

namespace {

using charavg::MomentReport;

// Identity residual gate applied to every computed report. identity_tol < 0
// means the defaults (1e-9 for m2, 1e-8 for m4); a nonnegative value
// overrides both, which lets tests force a deliberate failure.
bool identities_hold(const MomentReport& r, double identity_tol) {
  const double tol2 = identity_tol < 0 ? 1e-9 : identity_tol;
  const double tol4 = identity_tol < 0 ? 1e-8 : identity_tol;
  return std::abs(r.m2_bruteforce - r.m2_exact) <=
             tol2 * std::max(1.0, std::abs(r.m2_bruteforce)) &&
         std::abs(r.m4_bruteforce - r.m4_exact) <=
             tol4 * std::max(1.0, std::abs(r.m4_bruteforce));
}

int run_moments(std::uint64_t q, unsigned trunc, bool json, double identity_tol) {
  const MomentReport r = charavg::moment_report(q, trunc);
  if (json)
    std::cout << charavg::cli::json_object(r) << "\n";
  else
    std::cout << charavg::cli::text_report(r);
  if (!identities_hold(r, identity_tol)) {
    std::cerr << "identity violation at q = " << q << "\n";
    return 1;
  }
  return 0;
}

int run_scan(std::uint64_t qmin, std::uint64_t qmax, std::uint64_t step,
             bool primes_only, unsigned trunc, const std::string& out_path,
             const std::string& format, unsigned jobs, double identity_tol) {
  std::vector<std::uint64_t> moduli;
  if (primes_only) {
    const auto tab = charavg::sieve_tables(qmax);
    for (std::uint64_t q = std::max<std::uint64_t>(qmin, 3); q <= qmax; ++q)
      if (tab.spf[q] == q) moduli.push_back(q);
  } else {
    for (std::uint64_t q = qmin; q <= qmax; q += step) moduli.push_back(q);
  }

  std::vector<MomentReport> rows(moduli.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(jobs, std::thread::hardware_concurrency()));
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= moduli.size()) return;
      try {
        rows[i] = charavg::moment_report(moduli[i], trunc);
      } catch (const std::exception&) {
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed) {
    std::cerr << "scan: computation failed\n";
    return 2;
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "scan: cannot open " << out_path << "\n";
    return 2;
  }
  if (format == "csv") {
    out << charavg::cli::csv_header() << "\n";
    for (const auto& r : rows) out << charavg::cli::csv_row(r) << "\n";
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << "  " << charavg::cli::json_object(rows[i])
          << (i + 1 < rows.size() ? "," : "") << "\n";
    out << "]\n";
  }
  out.close();
  if (!out) {
    std::cerr << "scan: write failed for " << out_path << "\n";
    return 2;
  }

  double max_e1 = 0.0, max_e2 = 0.0;
  bool violated = false;
  std::uint64_t bad_q = 0;
  for (const auto& r : rows) {
    max_e1 = std::max(max_e1, r.e1);
    max_e2 = std::max(max_e2, r.e2);
    if (!violated && !identities_hold(r, identity_tol)) {
      violated = true;
      bad_q = r.q;
    }
  }
  std::cout << "rows=" << rows.size() << " max_e1=" << charavg::cli::fmt(max_e1)
            << " max_e2=" << charavg::cli::fmt(max_e2) << "\n";
  if (violated) {
    std::cerr << "identity violation at q = " << bad_q << "\n";
    return 1;
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t qmax) {
  std::vector<charavg::cli::CheckResult> results;
  try {
    results = charavg::cli::run_suite(suite, qmax);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  bool all_pass = true;
  for (const auto& r : results) {
    if (r.pass) {
      std::cout << "[PASS] " << r.name << "\n";
    } else {
      all_pass = false;
      std::cout << "[FAIL] " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int run_constants(unsigned zeta_max, unsigned bernoulli_max) {
  using charavg::cli::fmt;
  std::cout << "gamma = " << fmt(charavg::euler_gamma()) << "\n";
  for (unsigned m = 2; m <= zeta_max; ++m)
    std::cout << "zeta(" << m << ") = " << fmt(charavg::zeta_int(m)) << "\n";
  const auto tab = charavg::bernoulli_table(bernoulli_max);
  for (unsigned n = 0; n <= bernoulli_max; ++n)
    std::cout << "B_" << n << " = " << tab.numbers[n].str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character averages of |L(1,chi)|^2 and |L(1,chi)|^4 over "
               "Dirichlet characters mod q"};
  app.require_subcommand(1);

  std::uint64_t q = 0;
  unsigned trunc = 40;
  bool json = false;
  double identity_tol = -1.0;

  auto* moments = app.add_subcommand("moments", "Full report for one modulus");
  moments->add_option("--q", q, "Modulus, q >= 3")->required();
  moments->add_option("--trunc", trunc, "Series truncation depth")
      ->check(CLI::Range(2u, 64u));
  moments->add_flag("--json", json, "Emit a single JSON object");
  moments->add_option("--identity-tol", identity_tol,
                      "Override the identity-residual tolerance");

  std::uint64_t qmin = 3, qmax = 100, step = 1, cap = 3000;
  bool primes_only = false;
  std::string out_path, format = "csv";
  unsigned jobs = std::thread::hardware_concurrency();

  auto* scan = app.add_subcommand("scan", "Reports for a range of moduli");
  scan->add_option("--qmin", qmin, "Smallest modulus (default 3)");
  scan->add_option("--qmax", qmax, "Largest modulus")->required();
  scan->add_option("--step", step, "Stride through [qmin, qmax]")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--primes-only", primes_only, "Only prime moduli");
  scan->add_option("--trunc", trunc, "Series truncation depth")
      ->check(CLI::Range(2u, 64u));
  scan->add_option("--out", out_path, "Output file")->required();
  scan->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--cap", cap, "Refuse moduli above this bound");
  scan->add_option("--identity-tol", identity_tol,
                   "Override the identity-residual tolerance");

  std::string suite;
  std::uint64_t verify_qmax = 0;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite, "identities|taylor|bernoulli|orthogonality|all")
      ->required();
  verify->add_option("--qmax", verify_qmax, "Range override (0 = suite default)");

  unsigned zeta_max = 10, bernoulli_max = 12;
  auto* constants = app.add_subcommand("constants", "Print the cached constants");
  constants->add_option("--zeta-max", zeta_max, "Largest integer zeta argument")
      ->check(CLI::Range(2u, 64u));
  constants->add_option("--bernoulli-max", bernoulli_max, "Largest Bernoulli index")
      ->check(CLI::Range(0u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; any parse failure is usage error
  }

  try {
    if (app.got_subcommand(moments)) {
      if (q < 3) {
        std::cerr << "moments: q must be >= 3\n";
        return 2;
      }
      return run_moments(q, trunc, json, identity_tol);
    }
    if (app.got_subcommand(scan)) {
      if (qmin < 3 || qmin > qmax || qmax > cap) {
        std::cerr << "scan: need 3 <= qmin <= qmax <= " << cap << "\n";
        return 2;
      }
      return run_scan(qmin, qmax, step, primes_only, trunc, out_path, format,
                      jobs, identity_tol);
    }
    if (app.got_subcommand(verify)) return run_verify(suite, verify_qmax);
    return run_constants(zeta_max, bernoulli_max);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
