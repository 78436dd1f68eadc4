#include "charavg/chargroup.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "charavg/arith.hpp"

namespace charavg {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// Smallest primitive root modulo the odd prime power pk = p^e.
std::uint64_t smallest_primitive_root(std::uint64_t pk, std::uint64_t order) {
  const Factorization of = factorize(order);
  for (std::uint64_t g = 2; g < pk; ++g) {
    if (std::gcd(g, pk) != 1) continue;
    bool primitive = true;
    for (const auto& pp : of.factors) {
      if (pow_mod(g, order / pp.prime, pk) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

}  // namespace

CharacterGroup::CharacterGroup(std::uint64_t q, std::uint64_t cap) : q_(q) {
  if (q == 0) throw std::invalid_argument("CharacterGroup: q must be >= 1");
  if (q > cap) throw std::invalid_argument("CharacterGroup: q exceeds cap");

  const Factorization f = factorize(q);
  // Per-prime-power discrete-log tables; tables[j][r] = exponent of residue
  // r modulo components_[j].prime_power with respect to its generator.
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> tables;

  for (const auto& pp : f.factors) {
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) pk *= pp.prime;
    if (pp.prime == 2) {
      if (pp.exponent == 1) continue;  // units mod 2 are trivial
      if (pp.exponent == 2) {
        components_.push_back({4, 3, 2});
        tables.push_back({{1, 0}, {3, 1}});
      } else {
        // <-1> x <5>: orders 2 and 2^{k-2}.
        const std::uint64_t half_order = pk / 4;
        components_.push_back({pk, pk - 1, 2});
        components_.push_back({pk, 5, half_order});
        std::unordered_map<std::uint64_t, std::uint32_t> sign_tab, five_tab;
        for (std::uint64_t s = 0; s < 2; ++s) {
          std::uint64_t base = (s == 0) ? 1 : pk - 1;
          std::uint64_t r = base;
          for (std::uint64_t t = 0; t < half_order; ++t) {
            sign_tab[r] = static_cast<std::uint32_t>(s);
            five_tab[r] = static_cast<std::uint32_t>(t);
            r = r * 5 % pk;
          }
        }
        tables.push_back(std::move(sign_tab));
        tables.push_back(std::move(five_tab));
      }
    } else {
      std::uint64_t order = pk / pp.prime * (pp.prime - 1);
      const std::uint64_t g = smallest_primitive_root(pk, order);
      components_.push_back({pk, g, order});
      std::unordered_map<std::uint64_t, std::uint32_t> tab;
      std::uint64_t r = 1;
      for (std::uint64_t t = 0; t < order; ++t) {
        tab[r] = static_cast<std::uint32_t>(t);
        r = r * g % pk;
      }
      tables.push_back(std::move(tab));
    }
  }

  phi_ = 1;
  for (const auto& c : components_) phi_ *= c.order;

  root_order_ = 1;
  for (const auto& c : components_) root_order_ = std::lcm(root_order_, c.order);
  scale_.resize(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j)
    scale_[j] = root_order_ / components_[j].order;

  roots_.resize(root_order_);
  for (std::uint64_t k = 0; k < root_order_; ++k) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(root_order_);
    roots_[k] = {std::cos(theta), std::sin(theta)};
  }

  dlog_offset_.assign(q_ + 1, -1);
  const std::size_t ncomp = components_.size();
  for (std::uint64_t a = 1; a <= q_; ++a) {
    if (std::gcd(a, q_) != 1) continue;
    dlog_offset_[a] = static_cast<std::int64_t>(coprime_.size());
    coprime_.push_back(a);
    for (std::size_t j = 0; j < ncomp; ++j)
      dlog_flat_.push_back(tables[j].at(a % components_[j].prime_power));
  }
  // q = 1: the single residue "1" is represented by a = 1 = q.
  if (phi_ != coprime_.size())
    throw std::logic_error("CharacterGroup: phi mismatch");
}

std::vector<std::uint64_t> CharacterGroup::dlog(std::uint64_t residue) const {
  if (residue > q_ || dlog_offset_[residue] < 0)
    throw std::invalid_argument("dlog: residue not coprime to q");
  const std::size_t ncomp = components_.size();
  const std::size_t off = static_cast<std::size_t>(dlog_offset_[residue]) * ncomp;
  std::vector<std::uint64_t> out(ncomp);
  for (std::size_t j = 0; j < ncomp; ++j) out[j] = dlog_flat_[off + j];
  return out;
}

void CharacterGroup::check_index(const CharacterIndex& chi) const {
  if (chi.tuple.size() != components_.size())
    throw std::invalid_argument("CharacterIndex: wrong tuple length");
  for (std::size_t j = 0; j < chi.tuple.size(); ++j)
    if (chi.tuple[j] >= components_[j].order)
      throw std::invalid_argument("CharacterIndex: exponent out of range");
}

std::complex<double> CharacterGroup::evaluate(const CharacterIndex& chi, std::int64_t n) const {
  check_index(chi);
  const std::int64_t qi = static_cast<std::int64_t>(q_);
  std::uint64_t r = static_cast<std::uint64_t>(((n % qi) + qi) % qi);
  if (r == 0) r = q_;  // residue class representative in [1, q]
  if (dlog_offset_[r] < 0) return {0.0, 0.0};
  const std::size_t ncomp = components_.size();
  const std::size_t off = static_cast<std::size_t>(dlog_offset_[r]) * ncomp;
  std::uint64_t k = 0;
  for (std::size_t j = 0; j < ncomp; ++j)
    k = (k + chi.tuple[j] * dlog_flat_[off + j] % root_order_ * scale_[j]) % root_order_;
  return roots_[k];
}

std::vector<std::complex<double>> CharacterGroup::values_on_coprime(
    const CharacterIndex& chi) const {
  check_index(chi);
  const std::size_t ncomp = components_.size();
  std::vector<std::complex<double>> out(coprime_.size());
  for (std::size_t i = 0; i < coprime_.size(); ++i) {
    const std::size_t off = i * ncomp;
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < ncomp; ++j)
      k = (k + chi.tuple[j] * dlog_flat_[off + j] * scale_[j]) % root_order_;
    out[i] = roots_[k];
  }
  return out;
}

CharacterIndex CharacterGroup::conjugate(const CharacterIndex& chi) const {
  check_index(chi);
  CharacterIndex out = chi;
  for (std::size_t j = 0; j < out.tuple.size(); ++j)
    out.tuple[j] = (components_[j].order - out.tuple[j]) % components_[j].order;
  return out;
}

std::vector<CharacterIndex> CharacterGroup::enumerate_characters() const {
  std::vector<CharacterIndex> out;
  out.reserve(phi_);
  CharacterIndex cur;
  cur.tuple.assign(components_.size(), 0);
  while (true) {
    out.push_back(cur);
    // odometer, last component fastest: lexicographic ascending
    std::size_t j = cur.tuple.size();
    while (j > 0) {
      --j;
      if (++cur.tuple[j] < components_[j].order) break;
      cur.tuple[j] = 0;
      if (j == 0) return out;
    }
    if (cur.tuple.empty()) return out;  // q <= 2: single character
  }
}

std::size_t CharacterGroup::index_of(const CharacterIndex& chi) const {
  check_index(chi);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < chi.tuple.size(); ++j)
    idx = idx * components_[j].order + chi.tuple[j];
  return idx;
}

CharacterIndex CharacterGroup::principal_character() const {
  CharacterIndex chi;
  chi.tuple.assign(components_.size(), 0);
  return chi;
}

OrthogonalityReport orthogonality_check(const CharacterGroup& g, double tol_per_phi) {
  OrthogonalityReport rep;
  const double tol = tol_per_phi * static_cast<double>(g.phi());
  const auto chars = g.enumerate_characters();
  const auto& residues = g.coprime_residues();
  const std::size_t nc = chars.size();

  // Cache chi(a) for every character and coprime residue.
  std::vector<std::vector<std::complex<double>>> val(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    val[i].reserve(residues.size());
    for (auto a : residues)
      val[i].push_back(g.evaluate(chars[i], static_cast<std::int64_t>(a)));
  }

  auto record = [&](double residual, const std::string& what) {
    if (residual > rep.max_residual) rep.max_residual = residual;
    if (residual > tol && rep.pass) {
      rep.pass = false;
      rep.first_failure = what;
    }
  };

  // sum_a chi(a) conj(chi'(a)) = phi [chi == chi']
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t k = 0; k < nc; ++k) {
      std::complex<double> s{0.0, 0.0};
      for (std::size_t t = 0; t < residues.size(); ++t)
        s += val[i][t] * std::conj(val[k][t]);
      const double expect = (i == k) ? static_cast<double>(g.phi()) : 0.0;
      record(std::abs(s - std::complex<double>{expect, 0.0}),
             "character pair (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
  }

  // sum_chi chi(a) conj(chi(b)) = phi [a == b mod q]
  for (std::size_t t = 0; t < residues.size(); ++t) {
    for (std::size_t u = 0; u < residues.size(); ++u) {
      std::complex<double> s{0.0, 0.0};
      for (std::size_t i = 0; i < nc; ++i) s += val[i][t] * std::conj(val[i][u]);
      const double expect = (t == u) ? static_cast<double>(g.phi()) : 0.0;
      record(std::abs(s - std::complex<double>{expect, 0.0}),
             "residue pair (" + std::to_string(residues[t]) + "," +
                 std::to_string(residues[u]) + ")");
    }
  }
  return rep;
}

}  // namespace charavg
