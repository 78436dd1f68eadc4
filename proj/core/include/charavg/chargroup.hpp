#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace charavg {

/// One cyclic factor of (Z/qZ)*. prime_power is the modulus the generator
/// lives in (p^k, or 2^k which contributes two factors for k >= 3).
struct CyclicComponent {
  std::uint64_t prime_power = 1;
  std::uint64_t generator = 1;
  std::uint64_t order = 1;
};

/// One exponent per group component, each < that component's order.
/// The all-zero tuple is the principal character.
struct CharacterIndex {
  std::vector<std::uint64_t> tuple;

  bool is_principal() const {
    for (auto t : tuple)
      if (t != 0) return false;
    return true;
  }
  bool operator==(const CharacterIndex&) const = default;
};

constexpr std::uint64_t kDefaultGroupCap = 100'000;

/// Generator/discrete-log representation of (Z/qZ)* with precomputed
/// unit-circle tables. Immutable after construction.
class CharacterGroup {
 public:
  /// Throws std::invalid_argument for q = 0 or q > cap.
  explicit CharacterGroup(std::uint64_t q, std::uint64_t cap = kDefaultGroupCap);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t phi() const { return phi_; }
  const std::vector<CyclicComponent>& components() const { return components_; }

  /// Coprime residues in [1, q], ascending.
  const std::vector<std::uint64_t>& coprime_residues() const { return coprime_; }

  bool is_coprime(std::uint64_t residue) const { return dlog_offset_[residue] >= 0; }

  /// Exponent tuple of a coprime residue.
  std::vector<std::uint64_t> dlog(std::uint64_t residue) const;

  /// chi(n): 0 off the coprime classes, otherwise a root of unity drawn
  /// from a shared table so equal arguments are bit-identical.
  std::complex<double> evaluate(const CharacterIndex& chi, std::int64_t n) const;

  CharacterIndex conjugate(const CharacterIndex& chi) const;

  /// chi(a) for every coprime residue a, in coprime_residues() order.
  std::vector<std::complex<double>> values_on_coprime(const CharacterIndex& chi) const;

  /// All phi(q) characters, lexicographic on tuples; principal first.
  std::vector<CharacterIndex> enumerate_characters() const;

  /// Position of chi in enumerate_characters() order.
  std::size_t index_of(const CharacterIndex& chi) const;

  CharacterIndex principal_character() const;

 private:
  std::uint64_t q_ = 1;
  std::uint64_t phi_ = 1;
  std::vector<CyclicComponent> components_;
  std::vector<std::uint64_t> coprime_;
  // dlog_offset_[r] = phi-index of coprime residue r, -1 otherwise.
  std::vector<std::int64_t> dlog_offset_;
  // Flattened exponent tuples, components_.size() entries per coprime residue.
  std::vector<std::uint32_t> dlog_flat_;
  std::uint64_t root_order_ = 1;  // lcm of component orders
  std::vector<std::uint64_t> scale_;  // root_order_ / order per component
  std::vector<std::complex<double>> roots_;  // exp(2*pi*i*k / root_order_)

  void check_index(const CharacterIndex& chi) const;
};

struct OrthogonalityReport {
  bool pass = true;
  double max_residual = 0.0;
  std::string first_failure;  // empty when pass
};

/// Verifies both orthogonality relations over all pairs, with absolute
/// tolerance tol_per_phi * phi(q).
OrthogonalityReport orthogonality_check(const CharacterGroup& g, double tol_per_phi = 1e-10);

}  // namespace charavg
