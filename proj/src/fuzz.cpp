#include "restrictlab/fuzz.hpp"

#include <numbers>
#include <stdexcept>

namespace restrictlab {

const char* to_string(TestFunctionKind kind) {
  switch (kind) {
    case TestFunctionKind::gaussian: return "gaussian";
    case TestFunctionKind::sparse: return "sparse";
    case TestFunctionKind::delta: return "delta";
    case TestFunctionKind::indicator: return "indicator";
    case TestFunctionKind::box: return "box";
    case TestFunctionKind::character: return "character";
    case TestFunctionKind::knapp: return "knapp";
  }
  return "unknown";
}

TestFunctionKind structured_kind(std::size_t index) {
  static constexpr TestFunctionKind kinds[] = {
      TestFunctionKind::sparse, TestFunctionKind::delta,     TestFunctionKind::indicator,
      TestFunctionKind::box,    TestFunctionKind::character, TestFunctionKind::knapp};
  return kinds[index % std::size(kinds)];
}

namespace {

std::uint64_t random_divisor(std::uint64_t n, Rng& rng, bool proper) {
  auto ds = divisors(n);
  if (proper && ds.size() > 2) ds = std::vector<std::uint64_t>(ds.begin() + 1, ds.end() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
  return ds[pick(rng)];
}

}  // namespace

Signal2D make_test_function(TestFunctionKind kind, const RingContext& ring, Rng& rng) {
  const auto n = ring.modulus();
  const auto cells = static_cast<std::size_t>(n * n);
  Signal2D f(ring);
  std::uniform_int_distribution<std::uint64_t> coord(0, n - 1);
  switch (kind) {
    case TestFunctionKind::gaussian:
      for (auto& v : f.values()) v = complex_gaussian(rng);
      break;
    case TestFunctionKind::sparse: {
      std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(2 * n, cells));
      for (const auto x : random_subset(rng, cells, size(rng))) f[x] = complex_gaussian(rng);
      break;
    }
    case TestFunctionKind::delta:
      f(coord(rng), coord(rng)) = 1.0;
      break;
    case TestFunctionKind::indicator: {
      std::uniform_int_distribution<std::size_t> size(1, cells);
      for (const auto x : random_subset(rng, cells, size(rng))) f[x] = 1.0;
      break;
    }
    case TestFunctionKind::box: {
      const auto d1 = random_divisor(n, rng, false);
      const auto d2 = random_divisor(n, rng, false);
      std::uniform_int_distribution<std::uint64_t> len1(1, n / d1), len2(1, n / d2);
      const auto l1 = len1(rng), l2 = len2(rng);
      const auto a = coord(rng), b = coord(rng);
      for (std::uint64_t i = 0; i < l1; ++i) {
        for (std::uint64_t j = 0; j < l2; ++j) f((a + d1 * i) % n, (b + d2 * j) % n) = 1.0;
      }
      break;
    }
    case TestFunctionKind::character: {
      const auto m1 = coord(rng), m2 = coord(rng);
      const FourierPlan plan(ring);
      for (std::uint64_t x1 = 0; x1 < n; ++x1) {
        for (std::uint64_t x2 = 0; x2 < n; ++x2) {
          f(x1, x2) = std::conj(plan.root(mul_mod(x1, m1, n) + mul_mod(x2, m2, n)));
        }
      }
      break;
    }
    case TestFunctionKind::knapp: {
      const auto d = random_divisor(n, rng, true);
      const auto a = coord(rng) % d;
      for (std::uint64_t x1 = a; x1 < n; x1 += d) {
        for (std::uint64_t x2 = 0; x2 < n; ++x2) f(x1, x2) = 1.0;
      }
      break;
    }
  }
  return f;
}

const char* to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::gaussian: return "gaussian";
    case CoefficientKind::single: return "single";
    case CoefficientKind::constant: return "constant";
    case CoefficientKind::sparse: return "sparse";
  }
  return "unknown";
}

CoefficientKind structured_coefficient_kind(std::size_t index) {
  static constexpr CoefficientKind kinds[] = {CoefficientKind::single, CoefficientKind::constant,
                                              CoefficientKind::sparse};
  return kinds[index % std::size(kinds)];
}

std::vector<Complex> make_coefficients(CoefficientKind kind, std::size_t count, Rng& rng) {
  std::vector<Complex> c(count);
  std::uniform_int_distribution<std::size_t> index(0, count - 1);
  switch (kind) {
    case CoefficientKind::gaussian:
      for (auto& v : c) v = complex_gaussian(rng);
      break;
    case CoefficientKind::single:
      c[index(rng)] = 1.0;
      break;
    case CoefficientKind::constant:
      std::fill(c.begin(), c.end(), Complex{1.0});
      break;
    case CoefficientKind::sparse: {
      std::uniform_int_distribution<std::size_t> size(1, count);
      for (const auto t : random_subset(rng, count, size(rng))) c[t] = complex_gaussian(rng);
      break;
    }
  }
  return c;
}

namespace {

constexpr std::uint64_t kFuzzStream = 0x66757a7aULL;

template <class Evaluate>
std::vector<FuzzRecord> run_trials(const RingContext& ring, std::size_t total, std::uint64_t seed,
                                   std::uint64_t salt, Evaluate&& evaluate) {
  std::vector<FuzzRecord> records(total);
  parallel_for(total, [&](std::size_t i) {
    Rng rng = make_rng(seed, kFuzzStream ^ salt ^ (ring.modulus() << 20U), i);
    records[i] = evaluate(i, rng);
  });
  return records;
}

}  // namespace

std::vector<FuzzRecord> fuzz_main_theorem(const RingContext& ring, std::size_t random_trials,
                                          std::size_t structured_trials, std::uint64_t seed,
                                          double r) {
  if (!ring.squarefree()) throw std::domain_error("fuzz_main_theorem: N is not squarefree");
  const ParabolaSet sigma(ring);
  const FourierPlan plan(ring);
  const RestrictionParams params{2.0, r, main_theorem_constant(ring)};
  return run_trials(ring, random_trials + structured_trials, seed, 1, [&](std::size_t i, Rng& rng) {
    const auto kind =
        i < random_trials ? TestFunctionKind::gaussian : structured_kind(i - random_trials);
    const auto f = make_test_function(kind, ring, rng);
    return FuzzRecord{i, to_string(kind), evaluate_restriction(f, sigma, plan, params)};
  });
}

namespace {

template <class Verify>
std::vector<FuzzRecord> fuzz_coefficients(const RingContext& ring, std::size_t random_trials,
                                          std::size_t structured_trials, std::uint64_t seed,
                                          std::uint64_t salt, Verify&& verify) {
  if (!ring.squarefree()) throw std::domain_error("coefficient fuzzing needs squarefree N");
  const ParabolaSet sigma(ring);
  const FourierPlan plan(ring);
  return run_trials(ring, random_trials + structured_trials, seed, salt,
                    [&](std::size_t i, Rng& rng) {
                      const auto kind = i < random_trials
                                            ? CoefficientKind::gaussian
                                            : structured_coefficient_kind(i - random_trials);
                      const auto c = make_coefficients(kind, sigma.size(), rng);
                      return FuzzRecord{i, to_string(kind), verify(sigma, plan, c)};
                    });
}

}  // namespace

std::vector<FuzzRecord> fuzz_dual(const RingContext& ring, std::size_t random_trials,
                                  std::size_t structured_trials, std::uint64_t seed) {
  return fuzz_coefficients(ring, random_trials, structured_trials, seed, 2,
                           [](const ParabolaSet& s, const FourierPlan& p,
                              const std::vector<Complex>& c) { return verify_dual(s, p, c); });
}

std::vector<FuzzRecord> fuzz_l1_l2(const RingContext& ring, std::size_t random_trials,
                                   std::size_t structured_trials, std::uint64_t seed) {
  return fuzz_coefficients(ring, random_trials, structured_trials, seed, 3,
                           [](const ParabolaSet& s, const FourierPlan& p,
                              const std::vector<Complex>& c) { return verify_l1_l2(s, p, c); });
}

}  // namespace restrictlab
