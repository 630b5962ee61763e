#include "restrictlab/parabola.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace restrictlab {

ParabolaSet::ParabolaSet(const RingContext& ring) : ring_(ring) {
  const auto n = ring.modulus();
  points_.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) points_.push_back({t, mul_mod(t, t, n)});
}

std::optional<std::size_t> ParabolaSet::index_of(Frequency p) const {
  const auto n = ring_.modulus();
  if (p.first >= n || p.second >= n) return std::nullopt;
  if (points_[p.first].second != p.second) return std::nullopt;
  return static_cast<std::size_t>(p.first);
}

ParabolaSet build_parabola(const RingContext& ring) { return ParabolaSet(ring); }

Complex exp_sum(const ParabolaSet& sigma, const FourierPlan& plan, Frequency m) {
  const auto n = sigma.ring().modulus();
  Complex acc{};
  for (const auto& [t, t2] : sigma.points()) {
    acc += plan.root((mul_mod(m.first, t, n) + mul_mod(m.second, t2, n)) % n);
  }
  return acc;
}

Complex exp_sum(const ParabolaSet& sigma, Frequency m) {
  return exp_sum(sigma, FourierPlan(sigma.ring()), m);
}

DecayProfile decay_profile(const ParabolaSet& sigma) {
  const FourierPlan plan(sigma.ring());
  const auto n = sigma.ring().modulus();
  DecayProfile profile;
  profile.modulus = n;
  profile.magnitudes.resize(n * n);
  double best = -1.0;
  for (std::uint64_t m1 = 0; m1 < n; ++m1) {
    for (std::uint64_t m2 = 0; m2 < n; ++m2) {
      const double mag = std::abs(exp_sum(sigma, plan, {m1, m2}));
      profile.magnitudes[m1 * n + m2] = mag;
      if (m1 == 0 && m2 == 0) continue;
      // Ties within rounding keep the earlier frequency.
      if (mag > best + 1e-9) {
        best = mag;
        profile.witness = {m1, m2};
      }
    }
  }
  profile.max_nontrivial = std::max(best, 0.0);
  profile.max_ratio = profile.max_nontrivial / std::sqrt(static_cast<double>(n));
  return profile;
}

EnergyReport energy_exact(const ParabolaSet& sigma,
                          std::optional<std::span<const std::size_t>> subset) {
  const auto n = sigma.ring().modulus();
  std::vector<std::size_t> members;
  if (subset) {
    members.assign(subset->begin(), subset->end());
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw std::invalid_argument("energy_exact: repeated subset index");
    }
    if (!members.empty() && members.back() >= n) {
      throw std::invalid_argument("energy_exact: subset index outside the parabola");
    }
  } else {
    members.resize(n);
    for (std::size_t t = 0; t < n; ++t) members[t] = t;
  }

  std::vector<std::uint64_t> rep(n * n, 0);
  for (const auto a : members) {
    const auto& p = sigma.point(a);
    for (const auto b : members) {
      const auto& q = sigma.point(b);
      const auto k1 = (p.first + q.first) % n;
      const auto k2 = (p.second + q.second) % n;
      ++rep[k1 * n + k2];
    }
  }
  EnergyReport report;
  report.subset_size = members.size();
  for (const auto r : rep) {
    report.energy += r * r;
    report.max_rep = std::max(report.max_rep, r);
  }
  const auto size = static_cast<std::uint64_t>(members.size());
  report.bound = (std::uint64_t{1} << sigma.ring().omega()) * size * size;
  return report;
}

std::vector<Complex> restrict_to(const ParabolaSet& sigma, const Spectrum2D& spectrum) {
  if (!(spectrum.ring() == sigma.ring())) throw std::invalid_argument("restrict_to: ring mismatch");
  std::vector<Complex> out;
  out.reserve(sigma.size());
  for (const auto& p : sigma.points()) out.push_back(spectrum.at(p));
  return out;
}

Signal2D extend_from(const ParabolaSet& sigma, const FourierPlan& plan,
                     std::span<const Complex> coeffs) {
  if (!(plan.ring() == sigma.ring())) throw std::invalid_argument("extend_from: ring mismatch");
  if (coeffs.size() != sigma.size()) {
    throw std::invalid_argument("extend_from: expected one coefficient per parabola point");
  }
  return plan.synthesize(sigma.points(), coeffs);
}

Signal2D extend_from(const ParabolaSet& sigma, std::span<const Complex> coeffs) {
  return extend_from(sigma, FourierPlan(sigma.ring()), coeffs);
}

}  // namespace restrictlab
