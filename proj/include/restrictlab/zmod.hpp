#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace restrictlab {

struct PrimePower {
  std::uint64_t prime = 0;
  int multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A residue together with its modulus, used as CRT input.
struct Congruence {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;
};

/// Arithmetic context for Z/NZ: the modulus, its factorization and the
/// derived quantities (number of distinct primes, squarefreeness).
/// Immutable after construction.
class RingContext {
 public:
  /// Factors `modulus` by trial division. Throws std::invalid_argument for
  /// modulus < 2.
  explicit RingContext(std::int64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::span<const PrimePower> prime_factors() const noexcept { return factors_; }
  int omega() const noexcept { return static_cast<int>(factors_.size()); }
  bool squarefree() const noexcept { return squarefree_; }

  std::uint64_t reduce(std::int64_t x) const noexcept;

  friend bool operator==(const RingContext& a, const RingContext& b) noexcept {
    return a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t modulus_;
  std::vector<PrimePower> factors_;
  bool squarefree_;
};

RingContext make_ring(std::int64_t modulus);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Returns the unique x in [0, prod m_i) with x = v_i (mod m_i) for all i.
/// Throws std::invalid_argument when two moduli share a factor or a modulus
/// is zero.
std::uint64_t crt_combine(std::span<const Congruence> residues);

/// Square roots of c modulo an odd or even prime p, ascending.
std::vector<std::uint64_t> square_roots_mod_prime(std::uint64_t c, std::uint64_t p);

/// All z in [0, N) with z^2 = c (mod N), ascending. Squarefree moduli go
/// through per-prime roots and CRT; other moduli fall back to a scan.
std::vector<std::uint64_t> square_roots_mod(std::uint64_t c, const RingContext& ring);

/// |square_roots_mod(c, ring)|, computed multiplicatively for squarefree N.
std::uint64_t count_square_roots(std::uint64_t c, const RingContext& ring);

/// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace restrictlab
