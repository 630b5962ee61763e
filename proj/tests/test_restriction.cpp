#include <doctest.h>

#include <cmath>

#include "restrictlab/fuzz.hpp"
#include "restrictlab/restriction.hpp"

using namespace restrictlab;

namespace {

std::vector<Complex> gaussian_coeffs(std::size_t count, std::uint64_t seed) {
  Rng rng = make_rng(seed, 3, count);
  std::vector<Complex> c(count);
  for (auto& v : c) v = complex_gaussian(rng);
  return c;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(main_theorem_constant(make_ring(7)) == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(main_theorem_constant(make_ring(15)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(main_theorem_constant(make_ring(105)) == doctest::Approx(std::pow(2.0, 0.75)));
  CHECK(bounded_factor_constant(4) == doctest::Approx(2.0));
  const double n = 105.0;
  CHECK(general_envelope(105) == doctest::Approx(std::pow(n, 1.0 / (4.0 * std::log(std::log(n))))));
  CHECK_THROWS(general_envelope(2));
  const std::vector<EnvelopeSample> samples{{15, 1.2}, {105, 1.5}};
  const double c = calibrate_general_constant(samples);
  for (const auto& s : samples) CHECK(s.observed_ratio <= c * general_envelope(s.modulus) + 1e-12);
  CHECK(std::max(1.2 / general_envelope(15), 1.5 / general_envelope(105)) == doctest::Approx(c));
}

TEST_CASE("report edge cases") {
  CHECK(make_report(0.0, 0.0, 1.0).ratio == 0.0);
  CHECK(make_report(0.0, 0.0, 1.0).satisfied);
  CHECK(std::isinf(make_report(1.0, 0.0, 1.0).ratio));
  CHECK_FALSE(make_report(1.0, 0.0, 1.0).satisfied);
  CHECK(make_report(1.0 + 0.5e-9, 1.0, 1.0).satisfied);
  CHECK_FALSE(make_report(1.0 + 2e-9, 1.0, 1.0).satisfied);
}

TEST_CASE("main theorem on simple inputs") {
  const auto ring = make_ring(15);
  const ParabolaSet sigma(ring);
  Signal2D one(ring);
  for (auto& v : one.values()) v = 1.0;
  // Spectrum N delta_0: lhs = N^{-1/2} N, rhs = N^{-1} N^{3/2}.
  const auto report = verify_main_theorem(one, sigma);
  CHECK(report.ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.satisfied);

  Signal2D delta(ring);
  delta(3, 4) = 1.0;
  const auto d = verify_main_theorem(delta, sigma);
  CHECK(d.lhs == doctest::Approx(1.0 / 15.0));
  CHECK(d.rhs == doctest::Approx(1.0 / 15.0));

  CHECK_THROWS_AS(verify_main_theorem(Signal2D(make_ring(9)), ParabolaSet(make_ring(9))),
                  std::domain_error);
  CHECK_THROWS_AS(universal_certificate(ParabolaSet(make_ring(12))), std::domain_error);
}

TEST_CASE("evaluate_restriction rejects r outside [1, s]") {
  const auto ring = make_ring(5);
  const ParabolaSet sigma(ring);
  const FourierPlan plan(ring);
  CHECK_THROWS(evaluate_restriction(Signal2D(ring), sigma, plan, {2.0, 3.0, 1.0}));
  CHECK_THROWS(evaluate_restriction(Signal2D(ring), sigma, plan, {2.0, 0.5, 1.0}));
}

TEST_CASE("ratio is invariant under scaling") {
  const auto ring = make_ring(30);
  const ParabolaSet sigma(ring);
  const FourierPlan plan(ring);
  Rng rng = make_rng(1, 2, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = make_test_function(structured_kind(static_cast<std::size_t>(trial)), ring, rng);
    const auto base = verify_main_theorem(f, sigma, plan);
    for (const Complex lambda : {Complex{-3.0}, Complex{0.0, 1e-3}, Complex{7.5, 2.0}}) {
      Signal2D g(ring);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = lambda * f[i];
      CHECK(std::abs(verify_main_theorem(g, sigma, plan).ratio - base.ratio) < 1e-9);
    }
  }
}

TEST_CASE("universal certificate") {
  const auto c15 = universal_certificate(ParabolaSet(make_ring(15)));
  CHECK(c15.lambda_size == 1.0);
  CHECK(c15.lambda_energy == 4.0);
  CHECK(c15.implied_constant == doctest::Approx(std::sqrt(2.0)));
  CHECK(c15.theorem_constant == doctest::Approx(std::sqrt(2.0)));
  for (const std::int64_t n : {5, 6, 10, 30, 35, 105}) {
    const auto ring = make_ring(n);
    const auto cert = universal_certificate(ParabolaSet(ring));
    CHECK(cert.lambda_energy <= std::pow(2.0, ring.omega()));
    CHECK(cert.implied_constant <= cert.theorem_constant + 1e-12);
  }
}

TEST_CASE("certificate bounds every fuzzed ratio") {
  for (const std::int64_t n : {6, 15, 35}) {
    const auto ring = make_ring(n);
    const auto cert = universal_certificate(ParabolaSet(ring));
    for (const auto& rec : fuzz_main_theorem(ring, 50, 60, 4)) {
      CHECK(rec.report.satisfied);
      CHECK(rec.report.ratio <= cert.implied_constant + kRatioTolerance);
    }
  }
}

TEST_CASE("dual and L1-L2 on the constant coefficient vector") {
  const ParabolaSet s5(make_ring(5));
  const std::vector<Complex> ones5(5, 1.0);
  CHECK(verify_dual(s5, ones5).ratio == doctest::Approx(1.158292185288269).epsilon(1e-12));
  CHECK(verify_l1_l2(s5, ones5).ratio == doctest::Approx(1.12429949509495).epsilon(1e-12));

  const ParabolaSet s15(make_ring(15));
  const std::vector<Complex> ones15(15, 1.0);
  CHECK(verify_dual(s15, ones15).ratio == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-12));
  CHECK(verify_l1_l2(s15, ones15).ratio == doctest::Approx(1.3086690333112394).epsilon(1e-12));
  // sum |f|^4 equals E(Sigma) / N^2.
  const auto f = extend_from(s15, ones15);
  double fourth = 0.0;
  for (const auto& v : f.values()) fourth += std::norm(v) * std::norm(v);
  CHECK(fourth == doctest::Approx(675.0 / 225.0));
}

TEST_CASE("single characters reach dual ratio 1") {
  for (const std::int64_t n : {6, 15, 35}) {
    const ParabolaSet sigma(make_ring(n));
    std::vector<Complex> c(sigma.size());
    c[2] = Complex{0.0, 1.0};
    CHECK(verify_dual(sigma, c).ratio == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("duality chain holds step by step") {
  for (const std::int64_t n : {6, 15, 35}) {
    const auto ring = make_ring(n);
    const ParabolaSet sigma(ring);
    const FourierPlan plan(ring);
    const double big_n = static_cast<double>(n);
    const double k = main_theorem_constant(ring);
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
      const auto c = gaussian_coeffs(sigma.size(), trial);
      const auto f = extend_from(sigma, plan, c);
      Signal2D h(ring);
      for (std::size_t i = 0; i < h.size(); ++i) h[i] = f[i] * std::norm(f[i]);

      const double f4 = std::pow(lp_norm(f, 4.0), 4.0);
      const auto h_on = restrict_to(sigma, plan.forward(h));
      const Complex pairing = inner_product(c, h_on);
      const double f2 = lp_norm(f, 2.0);
      const double h_restricted = lp_norm(h_on, 2.0);
      const double h_rhs = std::sqrt(big_n) * k * restriction_rhs(h, 4.0 / 3.0);

      CHECK(std::abs(pairing - Complex{f4}) < 1e-9 * f4);
      CHECK(std::abs(lp_norm(c, 2.0) - f2) < 1e-10 * f2);
      CHECK(f4 <= f2 * h_restricted * (1 + 1e-12));
      CHECK(h_restricted <= h_rhs * (1 + 1e-12));
      CHECK(std::pow(lp_norm(h, 4.0 / 3.0), 4.0 / 3.0) == doctest::Approx(f4).epsilon(1e-10));
      CHECK(verify_dual(sigma, plan, c).satisfied);
    }
  }
}

TEST_CASE("fuzzers are squarefree gated and deterministic") {
  CHECK_THROWS_AS(fuzz_main_theorem(make_ring(12), 1, 0, 0), std::domain_error);
  CHECK_THROWS_AS(fuzz_dual(make_ring(9), 1, 0, 0), std::domain_error);
  const auto ring = make_ring(10);
  set_thread_count(1);
  const auto a = fuzz_dual(ring, 30, 30, 77);
  set_thread_count(3);
  const auto b = fuzz_dual(ring, 30, 30, 77);
  set_thread_count(0);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].report.ratio == b[i].report.ratio);
    CHECK(std::string(a[i].kind) == b[i].kind);
  }
  for (const auto& rec : fuzz_l1_l2(ring, 30, 30, 5)) CHECK(rec.report.satisfied);
}

TEST_CASE("uncertainty search") {
  CHECK_THROWS_AS(uncertainty_search(make_ring(6), 9, {}), std::invalid_argument);
  CHECK_THROWS_AS(uncertainty_search(make_ring(9), 2, {}), std::domain_error);

  UncertaintyOptions exhaustive;
  exhaustive.exhaustive_max_size = 3;
  const auto v6 = uncertainty_search(make_ring(6), 3, exhaustive);
  CHECK_FALSE(v6.witness_found);
  CHECK(v6.supports_checked == 36 + 630 + 7140);

  UncertaintyOptions random;
  random.random_samples = 5000;
  random.seed = 3;
  const auto v10 = uncertainty_search(make_ring(10), 10, random);
  CHECK_FALSE(v10.witness_found);
  CHECK(v10.supports_checked == 5000);
}

TEST_CASE("support test finds the two-point signal at N = 2") {
  const auto ring = make_ring(2);
  const std::vector<std::size_t> diagonal{0, 3};
  CHECK(support_admits_parabola_signal(ring, diagonal));
  const std::vector<std::size_t> single{0};
  CHECK_FALSE(support_admits_parabola_signal(ring, single));
  const std::vector<std::size_t> everything{0, 1, 2, 3};
  CHECK(support_admits_parabola_signal(ring, everything));
}

TEST_CASE("sharpness probe") {
  const auto r9 = sharpness_probe(make_ring(9), {50, 1});
  const auto r25 = sharpness_probe(make_ring(25), {50, 1});
  CHECK(r9.best_ratio == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-9));
  CHECK(r25.best_ratio > r9.best_ratio);
  CHECK(r25.best_ratio > std::pow(2.0, 0.25));
  CHECK(r9.witness.kind == "box");
  CHECK(r9.best_ratio_six_fifths <= r9.best_ratio + 1e-12);

  const auto r15 = sharpness_probe(make_ring(15), {50, 1});
  CHECK(r15.best_ratio <= std::sqrt(2.0) + kRatioTolerance);
  const auto again = sharpness_probe(make_ring(15), {50, 1});
  CHECK(again.best_ratio == r15.best_ratio);
  CHECK(again.witness.support == r15.witness.support);
}
