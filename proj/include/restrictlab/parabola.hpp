#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "restrictlab/fourier.hpp"
#include "restrictlab/zmod.hpp"

namespace restrictlab {

/// The parabola {(t, t^2 mod N) : t in Z/NZ}, stored in order of t.
class ParabolaSet {
 public:
  explicit ParabolaSet(const RingContext& ring);

  const RingContext& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::span<const Frequency> points() const noexcept { return points_; }
  const Frequency& point(std::size_t t) const { return points_.at(t); }

  /// t such that point(t) == p, if p lies on the parabola.
  std::optional<std::size_t> index_of(Frequency p) const;
  bool contains(Frequency p) const { return index_of(p).has_value(); }

  /// |points| / N^{d/2} with d = 2; always 1.
  double lambda_size() const noexcept { return 1.0; }

 private:
  RingContext ring_;
  std::vector<Frequency> points_;
};

ParabolaSet build_parabola(const RingContext& ring);

/// S(m) = sum_t e^{-2 pi i (m1 t + m2 t^2) / N}, by direct summation.
Complex exp_sum(const ParabolaSet& sigma, Frequency m);
Complex exp_sum(const ParabolaSet& sigma, const FourierPlan& plan, Frequency m);

struct DecayProfile {
  std::uint64_t modulus = 0;
  /// |S(m)| indexed by m1 * N + m2; the entry for m = (0, 0) holds N.
  std::vector<double> magnitudes;
  double max_nontrivial = 0.0;
  /// max_nontrivial / sqrt(N).
  double max_ratio = 0.0;
  /// First frequency in row-major order attaining max_nontrivial.
  Frequency witness;
};

DecayProfile decay_profile(const ParabolaSet& sigma);

struct EnergyReport {
  std::size_t subset_size = 0;
  std::uint64_t energy = 0;
  /// 2^omega(N) * |U|^2.
  std::uint64_t bound = 0;
  std::uint64_t max_rep = 0;
};

/// Additive energy of U (given as t-indices into sigma; all of sigma when
/// empty optional) via the histogram of pairwise sums. Throws
/// std::invalid_argument for an index outside [0, N) or a repeated index.
EnergyReport energy_exact(const ParabolaSet& sigma,
                          std::optional<std::span<const std::size_t>> subset = std::nullopt);

/// F(t, t^2) for t = 0..N-1.
std::vector<Complex> restrict_to(const ParabolaSet& sigma, const Spectrum2D& spectrum);

/// The signal whose spectrum equals c(t) at (t, t^2) and vanishes off the
/// parabola.
Signal2D extend_from(const ParabolaSet& sigma, std::span<const Complex> coeffs);
Signal2D extend_from(const ParabolaSet& sigma, const FourierPlan& plan,
                     std::span<const Complex> coeffs);

}  // namespace restrictlab
