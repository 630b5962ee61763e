#include "restrictlab/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace restrictlab {

RingContext::RingContext(std::int64_t modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
  }
  modulus_ = static_cast<std::uint64_t>(modulus);
  std::uint64_t rest = modulus_;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    factors_.push_back({p, k});
  }
  if (rest > 1) factors_.push_back({rest, 1});
  squarefree_ = std::all_of(factors_.begin(), factors_.end(),
                            [](const PrimePower& f) { return f.multiplicity == 1; });
}

std::uint64_t RingContext::reduce(std::int64_t x) const noexcept {
  const auto n = static_cast<std::int64_t>(modulus_);
  auto r = x % n;
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r);
}

RingContext make_ring(std::int64_t modulus) { return RingContext(modulus); }

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

namespace {

// Inverse of a modulo m, assuming gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  auto inv = old_s % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t tonelli_shanks(std::uint64_t c, std::uint64_t p) {
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t cz = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(c, q, p);
  std::uint64_t r = pow_mod(c, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    const std::uint64_t b = pow_mod(cz, std::uint64_t{1} << (m - i - 1), p);
    m = i;
    cz = mul_mod(b, b, p);
    t = mul_mod(t, cz, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

std::vector<std::uint64_t> scan_roots(std::uint64_t c, std::uint64_t n) {
  std::vector<std::uint64_t> roots;
  c %= n;
  for (std::uint64_t z = 0; z < n; ++z) {
    if (mul_mod(z, z, n) == c) roots.push_back(z);
  }
  return roots;
}

}  // namespace

std::uint64_t crt_combine(std::span<const Congruence> residues) {
  std::uint64_t x = 0;
  std::uint64_t modulus = 1;
  for (const auto& [value, m] : residues) {
    if (m == 0) throw std::invalid_argument("crt_combine: zero modulus");
    if (std::gcd(modulus, m) != 1) {
      throw std::invalid_argument("crt_combine: moduli are not pairwise coprime");
    }
    // x + modulus * k = value (mod m)
    const std::uint64_t diff = (value % m + m - x % m) % m;
    const std::uint64_t k = mul_mod(diff, inverse_mod(modulus % m, m), m);
    x += modulus * k;
    modulus *= m;
  }
  return x;
}

std::vector<std::uint64_t> square_roots_mod_prime(std::uint64_t c, std::uint64_t p) {
  c %= p;
  if (p == 2) return {c};
  if (p < 64) return scan_roots(c, p);
  if (c == 0) return {0};
  if (pow_mod(c, (p - 1) / 2, p) != 1) return {};
  const std::uint64_t r = tonelli_shanks(c, p);
  return {std::min(r, p - r), std::max(r, p - r)};
}

std::vector<std::uint64_t> square_roots_mod(std::uint64_t c, const RingContext& ring) {
  const std::uint64_t n = ring.modulus();
  if (!ring.squarefree()) return scan_roots(c, n);

  std::vector<std::vector<std::uint64_t>> per_prime;
  for (const auto& f : ring.prime_factors()) {
    per_prime.push_back(square_roots_mod_prime(c, f.prime));
    if (per_prime.back().empty()) return {};
  }
  std::vector<std::uint64_t> roots;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  std::vector<Congruence> system(per_prime.size());
  while (true) {
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      system[i] = {per_prime[i][pick[i]], ring.prime_factors()[i].prime};
    }
    roots.push_back(crt_combine(system));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::uint64_t count_square_roots(std::uint64_t c, const RingContext& ring) {
  if (!ring.squarefree()) return scan_roots(c, ring.modulus()).size();
  std::uint64_t count = 1;
  for (const auto& f : ring.prime_factors()) {
    const std::uint64_t p = f.prime;
    const std::uint64_t cp = c % p;
    if (p == 2 || cp == 0) continue;
    if (pow_mod(cp, (p - 1) / 2, p) != 1) return 0;
    count *= 2;
  }
  return count;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace restrictlab
