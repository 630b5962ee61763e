#include "restrictlab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace restrictlab {

template <class Domain>
Grid2D<Domain>::Grid2D(RingContext ring)
    : ring_(std::move(ring)), values_(ring_.modulus() * ring_.modulus()) {}

template <class Domain>
Grid2D<Domain>::Grid2D(RingContext ring, std::vector<Complex> values)
    : ring_(std::move(ring)), values_(std::move(values)) {
  const auto n = ring_.modulus();
  if (values_.size() != n * n) {
    throw std::invalid_argument("grid for N=" + std::to_string(n) + " needs " +
                                std::to_string(n * n) + " values, got " +
                                std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("grid values must be finite");
    }
  }
}

template class Grid2D<SpaceDomain>;
template class Grid2D<FrequencyDomain>;

FourierPlan::FourierPlan(const RingContext& ring)
    : ring_(ring), n_(static_cast<std::size_t>(ring.modulus())), roots_(n_) {
  for (std::size_t k = 0; k < n_; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
    roots_[k] = std::polar(1.0, angle);
  }
}

void FourierPlan::transform_1d(std::span<const Complex> in, std::span<Complex> out,
                               bool inverse) const {
  for (std::size_t k = 0; k < n_; ++k) {
    Complex acc{};
    std::size_t idx = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      const Complex w = inverse ? std::conj(roots_[idx]) : roots_[idx];
      acc += in[x] * w;
      idx += k;
      if (idx >= n_) idx -= n_;
    }
    out[k] = acc;
  }
}

template <class From, class To>
void FourierPlan::transform_2d(const Grid2D<From>& in, Grid2D<To>& out, bool inverse) const {
  std::vector<Complex> tmp(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    transform_1d(in.values().subspan(i * n_, n_), std::span(tmp).subspan(i * n_, n_), inverse);
  }
  std::vector<Complex> column(n_), result(n_);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < n_; ++i) column[i] = tmp[i * n_ + j];
    transform_1d(column, result, inverse);
    for (std::size_t i = 0; i < n_; ++i) out(i, j) = result[i] * scale;
  }
}

Spectrum2D FourierPlan::forward(const Signal2D& f) const {
  if (!(f.ring() == ring_)) throw std::invalid_argument("forward: ring mismatch");
  Spectrum2D out(ring_);
  transform_2d(f, out, false);
  return out;
}

Signal2D FourierPlan::inverse(const Spectrum2D& spectrum) const {
  if (!(spectrum.ring() == ring_)) throw std::invalid_argument("inverse: ring mismatch");
  Signal2D out(ring_);
  transform_2d(spectrum, out, true);
  return out;
}

namespace {

// Indices of freqs grouped by second coordinate, groups in ascending order.
std::vector<std::vector<std::size_t>> group_by_second(std::span<const Frequency> freqs,
                                                      std::size_t n) {
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    if (freqs[j].first >= n || freqs[j].second >= n) {
      throw std::invalid_argument("frequency out of range");
    }
    groups[freqs[j].second].push_back(j);
  }
  return groups;
}

}  // namespace

std::vector<Complex> FourierPlan::sample(const Signal2D& f, std::span<const Frequency> freqs) const {
  if (!(f.ring() == ring_)) throw std::invalid_argument("sample: ring mismatch");
  const auto groups = group_by_second(freqs, n_);
  std::vector<Complex> out(freqs.size());
  std::vector<Complex> column(n_);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t m2 = 0; m2 < n_; ++m2) {
    if (groups[m2].empty()) continue;
    // column(x1) = sum_x2 f(x1, x2) w^{x2 m2}
    for (std::size_t x1 = 0; x1 < n_; ++x1) {
      Complex acc{};
      std::size_t idx = 0;
      for (std::size_t x2 = 0; x2 < n_; ++x2) {
        acc += f(x1, x2) * roots_[idx];
        idx += m2;
        if (idx >= n_) idx -= n_;
      }
      column[x1] = acc;
    }
    for (const std::size_t j : groups[m2]) {
      const std::size_t m1 = freqs[j].first;
      Complex acc{};
      std::size_t idx = 0;
      for (std::size_t x1 = 0; x1 < n_; ++x1) {
        acc += column[x1] * roots_[idx];
        idx += m1;
        if (idx >= n_) idx -= n_;
      }
      out[j] = acc * scale;
    }
  }
  return out;
}

Signal2D FourierPlan::synthesize(std::span<const Frequency> freqs,
                                 std::span<const Complex> coeffs) const {
  if (freqs.size() != coeffs.size()) {
    throw std::invalid_argument("synthesize: frequency and coefficient counts differ");
  }
  const auto groups = group_by_second(freqs, n_);
  Signal2D out(ring_);
  std::vector<Complex> row_weight(n_);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t m2 = 0; m2 < n_; ++m2) {
    if (groups[m2].empty()) continue;
    std::fill(row_weight.begin(), row_weight.end(), Complex{});
    for (const std::size_t j : groups[m2]) {
      const std::size_t m1 = freqs[j].first;
      std::size_t idx = 0;
      for (std::size_t x1 = 0; x1 < n_; ++x1) {
        row_weight[x1] += coeffs[j] * std::conj(roots_[idx]);
        idx += m1;
        if (idx >= n_) idx -= n_;
      }
    }
    for (std::size_t x1 = 0; x1 < n_; ++x1) {
      const Complex a = row_weight[x1] * scale;
      std::size_t idx = 0;
      for (std::size_t x2 = 0; x2 < n_; ++x2) {
        out(x1, x2) += a * std::conj(roots_[idx]);
        idx += m2;
        if (idx >= n_) idx -= n_;
      }
    }
  }
  return out;
}

Spectrum2D dft(const Signal2D& f) { return FourierPlan(f.ring()).forward(f); }

Signal2D idft(const Spectrum2D& spectrum) { return FourierPlan(spectrum.ring()).inverse(spectrum); }

std::vector<Complex> dft_1d(std::span<const Complex> f) {
  const FourierPlan plan(RingContext(static_cast<std::int64_t>(f.size())));
  std::vector<Complex> out(f.size());
  plan.transform_1d(f, out, false);
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.size()));
  for (auto& v : out) v *= scale;
  return out;
}

double lp_norm(std::span<const Complex> values, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  if (std::isinf(p)) {
    double best = 0.0;
    for (const auto& v : values) best = std::max(best, std::abs(v));
    return best;
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (const auto& v : values) sum += std::norm(v);
    return std::sqrt(sum);
  }
  for (const auto& v : values) sum += std::pow(std::abs(v), p);
  return std::pow(sum, 1.0 / p);
}

double normalized_lp_norm(std::span<const Complex> values, double p) {
  if (values.empty()) return 0.0;
  if (std::isinf(p)) return lp_norm(values, p);
  return lp_norm(values, p) / std::pow(static_cast<double>(values.size()), 1.0 / p);
}

template <class Domain>
double sup_distance(const Grid2D<Domain>& a, const Grid2D<Domain>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sup_distance: size mismatch");
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::abs(a[k] - b[k]));
  return best;
}

template double sup_distance(const Signal2D&, const Signal2D&);
template double sup_distance(const Spectrum2D&, const Spectrum2D&);

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner_product: size mismatch");
  Complex acc{};
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * std::conj(b[k]);
  return acc;
}

}  // namespace restrictlab
