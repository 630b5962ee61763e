#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "restrictlab/fourier.hpp"
#include "restrictlab/parallel.hpp"

using namespace restrictlab;

namespace {

Signal2D random_signal(const RingContext& ring, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0, ring.modulus());
  Signal2D f(ring);
  for (auto& v : f.values()) v = complex_gaussian(rng);
  return f;
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("Grid2D validates its input") {
  const auto ring = make_ring(3);
  CHECK_THROWS_AS(Signal2D(ring, std::vector<Complex>(8)), std::invalid_argument);
  std::vector<Complex> bad(9);
  bad[4] = Complex{std::nan(""), 0.0};
  CHECK_THROWS_AS(Signal2D(ring, bad), std::invalid_argument);
  Signal2D f(ring);
  f(1, 2) = 3.0;
  CHECK(f[5] == Complex{3.0});
  CHECK(f.at({1, 2}) == Complex{3.0});
}

TEST_CASE("forward transform matches the direct double sum") {
  for (const std::int64_t n : {2, 3, 5, 6, 7, 9, 10}) {
    const auto ring = make_ring(n);
    const auto f = random_signal(ring, 1);
    const auto expected = oracle::dft2({f.values().begin(), f.values().end()}, n);
    CHECK(max_diff(dft(f).values(), expected) < 1e-12);
  }
}

TEST_CASE("delta at the origin has flat spectrum 1/N") {
  const auto ring = make_ring(5);
  Signal2D delta(ring);
  delta(0, 0) = 1.0;
  const auto spectrum = dft(delta);
  for (const auto& v : spectrum.values()) CHECK(std::abs(v - Complex{0.2}) < 1e-15);
}

TEST_CASE("inverse, Plancherel and single-frequency sampling") {
  for (const std::int64_t n : {2, 4, 15, 21, 35}) {
    const auto ring = make_ring(n);
    const FourierPlan plan(ring);
    const auto f = random_signal(ring, 2);
    const auto spectrum = plan.forward(f);
    CHECK(plan.inverse(spectrum).values().size() == f.size());
    CHECK(sup_distance(plan.inverse(spectrum), f) < 1e-10);
    CHECK(std::abs(lp_norm(spectrum, 2.0) - lp_norm(f, 2.0)) < 1e-10 * lp_norm(f, 2.0));

    std::vector<Frequency> freqs{{0, 0}, {1, 3 % static_cast<std::uint64_t>(n)}, {2 % static_cast<std::uint64_t>(n), 0}};
    const auto sampled = plan.sample(f, freqs);
    for (std::size_t k = 0; k < freqs.size(); ++k) CHECK(std::abs(sampled[k] - spectrum.at(freqs[k])) < 1e-12);

    const std::vector<Complex> coeffs{1.0, Complex{0.0, 2.0}, -0.5};
    Spectrum2D embedded(ring);
    for (std::size_t k = 0; k < freqs.size(); ++k) embedded.at(freqs[k]) += coeffs[k];
    CHECK(sup_distance(plan.synthesize(freqs, coeffs), plan.inverse(embedded)) < 1e-12);
  }
}

TEST_CASE("one-dimensional transform") {
  const std::vector<Complex> f{1.0, 2.0, Complex{0.0, 1.0}, -1.0, 0.5};
  const auto g = dft_1d(f);
  for (std::size_t k = 0; k < f.size(); ++k) {
    Complex acc{};
    for (std::size_t x = 0; x < f.size(); ++x)
      acc += f[x] * oracle::character(static_cast<std::int64_t>(x * k), 5, -1);
    CHECK(std::abs(g[k] - acc / std::sqrt(5.0)) < 1e-12);
  }
  CHECK(std::abs(lp_norm(g, 2.0) - lp_norm(f, 2.0)) < 1e-12);
}

TEST_CASE("norms") {
  const std::vector<Complex> v{3.0, Complex{0.0, -4.0}};
  CHECK(lp_norm(v, 2.0) == doctest::Approx(5.0));
  CHECK(lp_norm(v, 1.0) == doctest::Approx(7.0));
  CHECK(lp_norm(v, INFINITY) == doctest::Approx(4.0));
  CHECK(normalized_lp_norm(v, 2.0) == doctest::Approx(std::sqrt(12.5)));
  CHECK(std::abs(inner_product(v, v) - Complex{25.0}) < 1e-12);
}

TEST_CASE("transforms are linear and commute with translation") {
  const auto ring = make_ring(12);
  const FourierPlan plan(ring);
  const auto f = random_signal(ring, 3);
  const auto g = random_signal(ring, 4);
  const Complex a{0.3, -1.1};
  Signal2D h(ring);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = a * f[i] + g[i];
  const auto hf = plan.forward(h), ff = plan.forward(f), gf = plan.forward(g);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(std::abs(hf[i] - (a * ff[i] + gf[i])) < 1e-12);

  // |f^| is invariant under translation.
  Signal2D shifted(ring);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) shifted((i + 5) % 12, (j + 7) % 12) = f(i, j);
  const auto sf = plan.forward(shifted);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(std::abs(std::abs(sf[i]) - std::abs(ff[i])) < 1e-12);
}
