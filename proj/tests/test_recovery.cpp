#include <doctest.h>

#include <cmath>

#include "restrictlab/parallel.hpp"
#include "restrictlab/recovery.hpp"

using namespace restrictlab;

namespace {

std::vector<Frequency> parabola_points(const RingContext& ring) {
  const ParabolaSet sigma(ring);
  return {sigma.points().begin(), sigma.points().end()};
}

std::vector<std::size_t> support_of(const Signal2D& f) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != Complex{}) s.push_back(i);
  return s;
}

}  // namespace

TEST_CASE("erase drops and sorts the unobserved set") {
  const auto ring = make_ring(5);
  Signal2D f(ring);
  f(1, 1) = 2.0;
  const std::vector<Frequency> lost{{2, 4}, {0, 0}, {2, 4}};
  const auto problem = erase(f, lost);
  CHECK(problem.unobserved == std::vector<Frequency>{{0, 0}, {2, 4}});
  CHECK(problem.missing[0] == 1);
  CHECK(problem.missing[2 * 5 + 4] == 1);
  CHECK(problem.observed(0, 0) == Complex{});
  CHECK(std::abs(problem.observed(1, 2) - dft(f)(1, 2)) < 1e-15);
  const std::vector<Frequency> outside{{5, 0}};
  CHECK_THROWS_AS(erase(f, outside), std::invalid_argument);
}

TEST_CASE("feasible projection is idempotent and keeps the truth fixed") {
  const auto ring = make_ring(15);
  const auto f = random_sparse_signal(ring, 6, false, 3, 1, 0);
  const auto problem = erase(f, parabola_points(ring));
  const FeasibleProjector projector(problem);
  CHECK(projector.distance(f) < 1e-12);
  const auto u = random_sparse_signal(ring, 100, false, 4, 1, 0);
  const auto p = projector.project(u);
  CHECK(sup_distance(projector.project(p), p) < 1e-12);
  CHECK(projector.distance(p) < 1e-12);
  CHECK(sup_distance(project_feasible(u, problem), p) < 1e-15);
  // u - P(u) has spectrum on the observed set only.
  Signal2D diff(ring);
  for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - p[i];
  const auto spec = dft(diff);
  for (const auto& m : problem.unobserved) CHECK(std::abs(spec.at(m)) < 1e-12);
  // The least-energy point has no component on the unobserved set.
  const auto base = dft(projector.least_energy());
  for (const auto& m : problem.unobserved) CHECK(std::abs(base.at(m)) < 1e-12);
}

TEST_CASE("Logan recovery below threshold") {
  const auto ring = make_ring(15);
  const auto lost = parabola_points(ring);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const auto f = random_sparse_signal(ring, 7, trial % 2 == 1, 11, 2, trial);
    const auto result = logan_recover(erase(f, lost));
    CHECK(result.status == RecoveryStatus::converged);
    CHECK(result.exact());
    REQUIRE(result.error.has_value());
    CHECK(*result.error < 1e-6);
    CHECK(result.residual < 1e-8);
    CHECK(result.final_objective == doctest::Approx(lp_norm(f, 1.0)).epsilon(1e-6));
  }
}

TEST_CASE("Logan recovery with nothing lost is the identity") {
  const auto ring = make_ring(6);
  const auto f = random_sparse_signal(ring, 30, false, 1, 2, 3);
  const auto result = logan_recover(erase(f, {}));
  CHECK(result.exact());
}

TEST_CASE("recovery without a true signal is unscored") {
  const auto ring = make_ring(7);
  const auto f = random_sparse_signal(ring, 3, false, 1, 2, 3);
  auto problem = erase(f, parabola_points(ring));
  problem.true_signal.reset();
  const auto result = logan_recover(problem);
  CHECK(result.exactness == Exactness::unknown);
  CHECK_FALSE(result.error.has_value());
}

TEST_CASE("iteration cap is reported") {
  const auto ring = make_ring(15);
  const auto f = random_sparse_signal(ring, 7, false, 2, 2, 2);
  LoganParams params;
  params.max_iterations = 3;
  const auto result = logan_recover(erase(f, parabola_points(ring)), params);
  CHECK(result.status == RecoveryStatus::max_iterations);
  CHECK(result.iterations == 3);
}

TEST_CASE("least squares agrees with Logan on a known support") {
  const auto ring = make_ring(35);
  const auto lost = parabola_points(ring);
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    const auto f = random_sparse_signal(ring, 12, false, 8, 3, trial);
    auto problem = erase(f, lost);
    problem.support_hint = support_of(f);
    const auto ls = least_squares_recover(problem);
    const auto dr = logan_recover(problem);
    CHECK(ls.exact());
    CHECK(dr.exact());
    CHECK(sup_distance(ls.recovered, dr.recovered) < 1e-6);
  }
}

TEST_CASE("least squares edge cases") {
  const auto ring = make_ring(5);
  Signal2D f(ring);
  f(0, 0) = 1.0;
  auto problem = erase(f, parabola_points(ring));
  CHECK_THROWS_AS(least_squares_recover(problem), std::invalid_argument);

  // Every cell on the support: more unknowns than observed equations.
  std::vector<std::size_t> all(25);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  problem.support_hint = all;
  CHECK(least_squares_recover(problem).status == RecoveryStatus::singular);

  problem.support_hint = std::vector<std::size_t>{0};
  CHECK(least_squares_recover(problem).exact());
}

TEST_CASE("threshold sweep rows") {
  const auto ring = make_ring(15);
  const auto lost = parabola_points(ring);
  const std::vector<std::size_t> sizes{3, 7};
  SweepOptions options;
  options.seed = 4;
  const auto rows = threshold_sweep(ring, lost, sizes, 8, options);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].support_size == 3);
  CHECK(rows[1].unobserved_size == 15);
  CHECK(rows[1].ds_threshold == doctest::Approx(7.5));
  CHECK(rows[1].improved_threshold == doctest::Approx(225.0 / 16.0));
  CHECK(rows[1].exact_rate == 1.0);
  CHECK(rows[1].mean_iterations > 0.0);
  CHECK(threshold_sweep(ring, lost, sizes, 0, options).empty());

  set_thread_count(1);
  const auto serial = threshold_sweep(ring, lost, sizes, 8, options);
  set_thread_count(4);
  const auto threaded = threshold_sweep(ring, lost, sizes, 8, options);
  set_thread_count(0);
  CHECK(serial[1].mean_iterations == threaded[1].mean_iterations);
}

TEST_CASE("status strings") {
  CHECK(std::string(to_string(RecoveryStatus::singular)) == "singular");
  CHECK(std::string(to_string(Exactness::non_unique)) == "non_unique");
}
