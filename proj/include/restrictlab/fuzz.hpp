#pragma once

#include <cstdint>
#include <vector>

#include "restrictlab/fourier.hpp"
#include "restrictlab/parabola.hpp"
#include "restrictlab/parallel.hpp"
#include "restrictlab/restriction.hpp"

namespace restrictlab {

enum class TestFunctionKind {
  gaussian,   // iid complex Gaussian everywhere
  sparse,     // Gaussian amplitudes on a random small support
  delta,      // one point
  indicator,  // random subset
  box,        // product of two arithmetic progressions
  character,  // plane wave e^{2 pi i x.m / N}
  knapp,      // indicator of {x1 = 0 mod d}, d a proper divisor
};

const char* to_string(TestFunctionKind kind);

/// Kinds other than gaussian, cycled by index.
TestFunctionKind structured_kind(std::size_t index);

Signal2D make_test_function(TestFunctionKind kind, const RingContext& ring, Rng& rng);

enum class CoefficientKind {
  gaussian,
  single,    // one nonzero coefficient: a single character
  constant,  // all ones
  sparse,
};

const char* to_string(CoefficientKind kind);
CoefficientKind structured_coefficient_kind(std::size_t index);
std::vector<Complex> make_coefficients(CoefficientKind kind, std::size_t count, Rng& rng);

struct FuzzRecord {
  std::size_t trial = 0;
  const char* kind = "";
  RestrictionReport report;
};

/// verify_main_theorem on `random_trials` Gaussian inputs followed by
/// `structured_trials` structured ones. Trial i draws from stream
/// (seed, N, i), so the records do not depend on the thread count.
std::vector<FuzzRecord> fuzz_main_theorem(const RingContext& ring, std::size_t random_trials,
                                          std::size_t structured_trials, std::uint64_t seed,
                                          double r = 4.0 / 3.0);

/// verify_dual on random then structured coefficient vectors.
std::vector<FuzzRecord> fuzz_dual(const RingContext& ring, std::size_t random_trials,
                                  std::size_t structured_trials, std::uint64_t seed);

/// verify_l1_l2 on random then structured coefficient vectors.
std::vector<FuzzRecord> fuzz_l1_l2(const RingContext& ring, std::size_t random_trials,
                                   std::size_t structured_trials, std::uint64_t seed);

}  // namespace restrictlab
