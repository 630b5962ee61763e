#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "restrictlab/zmod.hpp"

namespace restrictlab {

using Complex = std::complex<double>;

/// A point (m1, m2) of (Z/NZ)^2, used both for frequencies and positions.
struct Frequency {
  std::uint64_t first = 0;
  std::uint64_t second = 0;

  friend bool operator==(const Frequency&, const Frequency&) = default;
  friend auto operator<=>(const Frequency&, const Frequency&) = default;
};

struct SpaceDomain {};
struct FrequencyDomain {};

/// Complex-valued function on (Z/NZ)^2 stored row-major, values(i * N + j)
/// holding the value at (i, j). The domain tag keeps signals and spectra
/// from being mixed up.
template <class Domain>
class Grid2D {
 public:
  /// Zero function.
  explicit Grid2D(RingContext ring);
  /// Throws std::invalid_argument if values.size() != N^2 or any entry is
  /// not finite.
  Grid2D(RingContext ring, std::vector<Complex> values);

  const RingContext& ring() const noexcept { return ring_; }
  std::size_t side() const noexcept { return static_cast<std::size_t>(ring_.modulus()); }
  std::size_t size() const noexcept { return values_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) { return values_[i * side() + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return values_[i * side() + j]; }
  Complex& operator[](std::size_t flat) { return values_[flat]; }
  const Complex& operator[](std::size_t flat) const { return values_[flat]; }
  Complex& at(Frequency p) { return (*this)(p.first, p.second); }
  const Complex& at(Frequency p) const { return (*this)(p.first, p.second); }

  std::span<Complex> values() noexcept { return values_; }
  std::span<const Complex> values() const noexcept { return values_; }

 private:
  RingContext ring_;
  std::vector<Complex> values_;
};

using Signal2D = Grid2D<SpaceDomain>;
using Spectrum2D = Grid2D<FrequencyDomain>;

extern template class Grid2D<SpaceDomain>;
extern template class Grid2D<FrequencyDomain>;

/// Root-of-unity table and transforms for one modulus. The forward
/// transform is f^(m) = N^{-1} sum_x f(x) e^{-2 pi i x.m / N}; the inverse
/// uses the conjugate kernel and the same factor, so both are unitary.
/// Read-only after construction; share freely between threads.
class FourierPlan {
 public:
  explicit FourierPlan(const RingContext& ring);

  const RingContext& ring() const noexcept { return ring_; }
  std::size_t side() const noexcept { return n_; }

  /// e^{-2 pi i k / N}.
  const Complex& root(std::uint64_t k) const noexcept { return roots_[k % n_]; }

  Spectrum2D forward(const Signal2D& f) const;
  Signal2D inverse(const Spectrum2D& spectrum) const;

  /// Forward transform evaluated only at `freqs`. Cost is N^2 per distinct
  /// second coordinate plus N per frequency.
  std::vector<Complex> sample(const Signal2D& f, std::span<const Frequency> freqs) const;
  /// Inverse transform of the spectrum equal to coeffs[j] at freqs[j] and
  /// zero elsewhere (repeated frequencies add).
  Signal2D synthesize(std::span<const Frequency> freqs, std::span<const Complex> coeffs) const;

  /// Unnormalized 1-D transform out[k] = sum_x in[x] e^{-+2 pi i x k / N}.
  void transform_1d(std::span<const Complex> in, std::span<Complex> out, bool inverse) const;

 private:
  template <class From, class To>
  void transform_2d(const Grid2D<From>& in, Grid2D<To>& out, bool inverse) const;

  RingContext ring_;
  std::size_t n_;
  std::vector<Complex> roots_;
};

Spectrum2D dft(const Signal2D& f);
Signal2D idft(const Spectrum2D& spectrum);

/// 1-D unitary transform on Z/NZ, coefficient N^{-1/2}.
std::vector<Complex> dft_1d(std::span<const Complex> f);

/// (sum |v|^p)^{1/p}; p = infinity gives the sup norm.
double lp_norm(std::span<const Complex> values, double p);
/// (count^{-1} sum |v|^p)^{1/p}.
double normalized_lp_norm(std::span<const Complex> values, double p);

template <class Domain>
double lp_norm(const Grid2D<Domain>& f, double p) {
  return lp_norm(f.values(), p);
}

/// Averaged norm over (Z/NZ)^2: the sum is divided by N^2.
template <class Domain>
double normalized_lp_norm(const Grid2D<Domain>& f, double p) {
  return normalized_lp_norm(f.values(), p);
}

/// sup_x |a(x) - b(x)|.
template <class Domain>
double sup_distance(const Grid2D<Domain>& a, const Grid2D<Domain>& b);

/// sum_x a(x) conj(b(x)).
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace restrictlab
