#pragma once

// Brute-force reference computations. Nothing here goes through the
// library's transforms or tables: every exponential is evaluated with
// std::polar and every count by exhaustive enumeration.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

inline Complex expi(double angle) { return std::polar(1.0, angle); }

// e^{sign 2 pi i k / n}
inline Complex character(std::int64_t k, std::int64_t n, int sign) {
  return expi(sign * 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n));
}

// O(N^4) double sum with coefficient N^{-1}.
inline std::vector<Complex> dft2(const std::vector<Complex>& f, std::int64_t n) {
  std::vector<Complex> out(static_cast<std::size_t>(n * n));
  for (std::int64_t m1 = 0; m1 < n; ++m1)
    for (std::int64_t m2 = 0; m2 < n; ++m2) {
      Complex acc{};
      for (std::int64_t x1 = 0; x1 < n; ++x1)
        for (std::int64_t x2 = 0; x2 < n; ++x2)
          acc += f[static_cast<std::size_t>(x1 * n + x2)] * character(x1 * m1 + x2 * m2, n, -1);
      out[static_cast<std::size_t>(m1 * n + m2)] = acc / static_cast<double>(n);
    }
  return out;
}

inline Complex parabola_sum(std::int64_t n, std::int64_t m1, std::int64_t m2) {
  Complex acc{};
  for (std::int64_t t = 0; t < n; ++t) acc += character(m1 * t + m2 * t * t, n, -1);
  return acc;
}

// Quadruple count |{(a, b, c, d) in U^4 : a + b = c + d}| over t-indices.
inline std::uint64_t energy(std::int64_t n, const std::vector<std::int64_t>& ts) {
  std::uint64_t count = 0;
  for (auto a : ts)
    for (auto b : ts)
      for (auto c : ts)
        for (auto d : ts) {
          const bool first = (a + b - c - d) % n == 0;
          const bool second = (a * a + b * b - c * c - d * d) % n == 0;
          if (first && second) ++count;
        }
  return count;
}

inline std::vector<std::int64_t> all_t(std::int64_t n) {
  std::vector<std::int64_t> ts;
  for (std::int64_t t = 0; t < n; ++t) ts.push_back(t);
  return ts;
}

inline std::vector<std::uint64_t> square_roots(std::uint64_t c, std::uint64_t n) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t z = 0; z < n; ++z)
    if ((z * z) % n == c % n) roots.push_back(z);
  return roots;
}

inline bool squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

inline int omega(std::uint64_t n) {
  int w = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    ++w;
    while (n % p == 0) n /= p;
  }
  return w;
}

// max_k |{(t, s) : (t + s, t^2 + s^2) = k}|
inline std::uint64_t max_rep(std::int64_t n) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> reps;
  for (std::int64_t t = 0; t < n; ++t)
    for (std::int64_t s = 0; s < n; ++s) ++reps[{(t + s) % n, (t * t + s * s) % n}];
  std::uint64_t best = 0;
  for (const auto& [k, r] : reps) best = std::max(best, r);
  return best;
}

}  // namespace oracle
