#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "restrictlab/fourier.hpp"
#include "restrictlab/parabola.hpp"

namespace restrictlab {

/// A signal whose spectrum was transmitted with the frequencies in
/// `unobserved` lost.
struct RecoveryProblem {
  RingContext ring;
  /// Sorted, without repeats.
  std::vector<Frequency> unobserved;
  /// missing[m1 * N + m2] != 0 exactly for m in unobserved.
  std::vector<char> missing;
  /// Observed spectrum; entries at missing frequencies are zero.
  Spectrum2D observed;
  std::optional<Signal2D> true_signal;
  /// Flat indices of the assumed support, for least squares.
  std::optional<std::vector<std::size_t>> support_hint;

  std::size_t side() const noexcept { return static_cast<std::size_t>(ring.modulus()); }
};

/// Builds the problem from the full signal, dropping `unobserved`.
RecoveryProblem erase(const Signal2D& f, std::span<const Frequency> unobserved);

/// Orthogonal projection onto the affine set of signals whose spectrum
/// matches `observed` off the unobserved set.
class FeasibleProjector {
 public:
  explicit FeasibleProjector(const RecoveryProblem& problem);

  Signal2D project(const Signal2D& u) const;
  /// l2 distance from u to the feasible set.
  double distance(const Signal2D& u) const;
  /// The feasible signal of least energy (observed spectrum, zero elsewhere).
  const Signal2D& least_energy() const noexcept { return base_; }

 private:
  /// Component of u with spectrum on the unobserved set.
  Signal2D unobserved_part(const Signal2D& u) const;

  FourierPlan plan_;
  std::vector<Frequency> unobserved_;
  Signal2D base_;
};

Signal2D project_feasible(const Signal2D& u, const RecoveryProblem& problem);

struct LoganParams {
  double step = 1.0;
  std::size_t max_iterations = 20000;
  double feasibility_tol = 1e-9;
  double objective_tol = 1e-9;
  /// Sup-norm distance to the true signal that still counts as exact.
  double exact_tol = 1e-6;
};

enum class RecoveryStatus {
  converged,
  max_iterations,
  singular,
};

enum class Exactness {
  unknown,    // no true signal to compare against
  exact,
  non_unique, // feasible with the true l1 norm, but a different signal
  inexact,
};

const char* to_string(RecoveryStatus status);
const char* to_string(Exactness exactness);

struct RecoveryResult {
  explicit RecoveryResult(Signal2D initial) : recovered(std::move(initial)) {}

  Signal2D recovered;
  std::size_t iterations = 0;
  double final_objective = 0.0;
  /// l2 distance from `recovered` to the feasible set.
  double residual = 0.0;
  RecoveryStatus status = RecoveryStatus::converged;
  Exactness exactness = Exactness::unknown;
  /// Sup-norm distance to the true signal, when known.
  std::optional<double> error;

  bool exact() const noexcept { return exactness == Exactness::exact; }
};

/// min ||u||_1 subject to u^ = observed off the unobserved set, by
/// Douglas-Rachford splitting between complex soft thresholding and the
/// feasible-set projection.
RecoveryResult logan_recover(const RecoveryProblem& problem, const LoganParams& params = {});

/// Least-squares fit of the observed spectrum by signals supported on the
/// problem's support_hint, through the normal equations. Throws
/// std::invalid_argument without a support hint; reports
/// RecoveryStatus::singular when the Gram matrix is singular.
RecoveryResult least_squares_recover(const RecoveryProblem& problem, double exact_tol = 1e-6);

struct SweepOptions {
  std::uint64_t seed = 0;
  /// Unimodular amplitudes instead of complex Gaussian ones.
  bool worst_case = false;
  LoganParams params;
};

struct SweepRow {
  std::uint64_t modulus = 0;
  std::size_t unobserved_size = 0;
  std::size_t support_size = 0;
  std::size_t trials = 0;
  double exact_rate = 0.0;
  double mean_iterations = 0.0;
  /// N^2 / (2 |S|).
  double ds_threshold = 0.0;
  /// N^2 / (4 * 2^omega).
  double improved_threshold = 0.0;
  std::size_t exact_count = 0;
  std::size_t non_unique_count = 0;
  std::size_t unconverged_count = 0;
};

/// Random instance used by the sweep: support of `support_size` uniform
/// cells, amplitudes per `worst_case`.
Signal2D random_sparse_signal(const RingContext& ring, std::size_t support_size, bool worst_case,
                              std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Exact-recovery rates of logan_recover for each support size. Empty when
/// trials == 0.
std::vector<SweepRow> threshold_sweep(const RingContext& ring, std::span<const Frequency> unobserved,
                                      std::span<const std::size_t> support_sizes,
                                      std::size_t trials, const SweepOptions& options);

}  // namespace restrictlab
