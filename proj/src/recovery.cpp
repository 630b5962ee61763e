#include "restrictlab/recovery.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "restrictlab/parallel.hpp"

namespace restrictlab {

RecoveryProblem erase(const Signal2D& f, std::span<const Frequency> unobserved) {
  const auto n = static_cast<std::size_t>(f.ring().modulus());
  std::vector<Frequency> lost(unobserved.begin(), unobserved.end());
  std::sort(lost.begin(), lost.end());
  lost.erase(std::unique(lost.begin(), lost.end()), lost.end());
  std::vector<char> missing(n * n, 0);
  for (const auto& m : lost) {
    if (m.first >= n || m.second >= n) throw std::invalid_argument("erase: frequency out of range");
    missing[m.first * n + m.second] = 1;
  }
  Spectrum2D observed = dft(f);
  for (std::size_t k = 0; k < observed.size(); ++k) {
    if (missing[k]) observed[k] = 0.0;
  }
  return {f.ring(), std::move(lost), std::move(missing), std::move(observed), f, std::nullopt};
}

FeasibleProjector::FeasibleProjector(const RecoveryProblem& problem)
    : plan_(problem.ring), unobserved_(problem.unobserved), base_(plan_.inverse(problem.observed)) {}

Signal2D FeasibleProjector::unobserved_part(const Signal2D& u) const {
  const auto coeffs = plan_.sample(u, unobserved_);
  return plan_.synthesize(unobserved_, coeffs);
}

Signal2D FeasibleProjector::project(const Signal2D& u) const {
  Signal2D out = unobserved_part(u);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += base_[k];
  return out;
}

double FeasibleProjector::distance(const Signal2D& u) const {
  const Signal2D p = project(u);
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) sum += std::norm(u[k] - p[k]);
  return std::sqrt(sum);
}

Signal2D project_feasible(const Signal2D& u, const RecoveryProblem& problem) {
  return FeasibleProjector(problem).project(u);
}

const char* to_string(RecoveryStatus status) {
  switch (status) {
    case RecoveryStatus::converged: return "converged";
    case RecoveryStatus::max_iterations: return "max_iterations";
    case RecoveryStatus::singular: return "singular";
  }
  return "unknown";
}

const char* to_string(Exactness exactness) {
  switch (exactness) {
    case Exactness::unknown: return "unknown";
    case Exactness::exact: return "exact";
    case Exactness::non_unique: return "non_unique";
    case Exactness::inexact: return "inexact";
  }
  return "unknown";
}

namespace {

void score(RecoveryResult& result, const RecoveryProblem& problem, double exact_tol) {
  if (!problem.true_signal) return;
  result.error = sup_distance(result.recovered, *problem.true_signal);
  if (*result.error < exact_tol) {
    result.exactness = Exactness::exact;
    return;
  }
  const double truth = lp_norm(*problem.true_signal, 1.0);
  const bool ties = std::abs(result.final_objective - truth) <= exact_tol * std::max(1.0, truth);
  result.exactness = result.status == RecoveryStatus::converged && ties ? Exactness::non_unique
                                                                        : Exactness::inexact;
}

constexpr std::size_t kObjectiveWindow = 50;

}  // namespace

RecoveryResult logan_recover(const RecoveryProblem& problem, const LoganParams& params) {
  if (!(params.step > 0.0)) throw std::invalid_argument("logan_recover: step must be positive");
  const FeasibleProjector projector(problem);
  const std::size_t cells = problem.observed.size();

  Signal2D z = projector.least_energy();
  Signal2D x(problem.ring);
  Signal2D reflected(problem.ring);
  std::vector<double> objectives;
  objectives.reserve(std::min<std::size_t>(params.max_iterations, 1 << 16));

  RecoveryResult result(x);
  result.status = RecoveryStatus::max_iterations;
  for (std::size_t k = 1; k <= params.max_iterations; ++k) {
    // x = prox_{step |.|_1}(z): shrink each modulus, keep the phase.
    double objective = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      const double mag = std::abs(z[i]);
      x[i] = mag > params.step ? z[i] * ((mag - params.step) / mag) : Complex{};
      objective += std::max(mag - params.step, 0.0);
      reflected[i] = 2.0 * x[i] - z[i];
    }
    const Signal2D y = projector.project(reflected);
    double step_norm = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      const Complex delta = y[i] - x[i];
      z[i] += delta;
      step_norm += std::norm(delta);
    }
    step_norm = std::sqrt(step_norm);
    objectives.push_back(objective);
    result.iterations = k;

    // y is feasible, so |x - y| bounds the distance from x to the feasible set.
    if (k >= 2 && step_norm < params.feasibility_tol) {
      const double earlier = objectives[k > kObjectiveWindow ? k - 1 - kObjectiveWindow : 0];
      if (std::abs(objective - earlier) <= params.objective_tol * std::max(1.0, objective)) {
        result.status = RecoveryStatus::converged;
        break;
      }
    }
  }
  result.recovered = x;
  result.final_objective = lp_norm(x, 1.0);
  result.residual = projector.distance(x);
  score(result, problem, params.exact_tol);
  return result;
}

RecoveryResult least_squares_recover(const RecoveryProblem& problem, double exact_tol) {
  if (!problem.support_hint) {
    throw std::invalid_argument("least_squares_recover: support hint required");
  }
  const auto n = problem.side();
  std::vector<std::size_t> support = *problem.support_hint;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (!support.empty() && support.back() >= n * n) {
    throw std::invalid_argument("least_squares_recover: support index out of range");
  }

  const FeasibleProjector projector(problem);
  RecoveryResult result(Signal2D(problem.ring));
  result.iterations = 1;
  if (support.empty()) {
    result.residual = projector.distance(result.recovered);
    score(result, problem, exact_tol);
    return result;
  }

  // Columns are the spectra of unit impulses restricted to observed
  // frequencies. Their inner products depend only on the position
  // difference d: <a_x, a_y> = [x = y] - N^{-2} sum_{m in S} e^{2 pi i m.d / N},
  // and the sum over S is N times the synthesized indicator of S.
  const FourierPlan plan(problem.ring);
  const std::vector<Complex> ones(problem.unobserved.size(), Complex{1.0});
  const Signal2D lost_kernel = plan.synthesize(problem.unobserved, ones);
  const double inv_n = 1.0 / static_cast<double>(n);

  const auto size = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXcd gram(size, size);
  Eigen::VectorXcd rhs(size);
  for (Eigen::Index a = 0; a < size; ++a) {
    const auto xa = support[static_cast<std::size_t>(a)];
    for (Eigen::Index b = 0; b < size; ++b) {
      const auto xb = support[static_cast<std::size_t>(b)];
      const std::size_t d1 = (xa / n + n - xb / n) % n;
      const std::size_t d2 = (xa % n + n - xb % n) % n;
      gram(a, b) = (a == b ? 1.0 : 0.0) - inv_n * lost_kernel(d1, d2);
    }
    // a_x^H observed is the least-energy feasible signal at x.
    rhs(a) = projector.least_energy()[xa];
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  const double largest = eig.eigenvalues().maxCoeff();
  if (!(eig.eigenvalues().minCoeff() > 1e-10 * std::max(largest, 1.0))) {
    result.status = RecoveryStatus::singular;
  } else {
    const Eigen::VectorXcd coeffs = gram.ldlt().solve(rhs);
    for (Eigen::Index a = 0; a < size; ++a) {
      result.recovered[support[static_cast<std::size_t>(a)]] = coeffs(a);
    }
  }
  result.final_objective = lp_norm(result.recovered, 1.0);
  result.residual = projector.distance(result.recovered);
  score(result, problem, exact_tol);
  return result;
}

namespace {
constexpr std::uint64_t kSweepStream = 0x7377656570ULL;
}

Signal2D random_sparse_signal(const RingContext& ring, std::size_t support_size, bool worst_case,
                              std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  Rng rng = make_rng(seed, stream, index);
  const auto n = static_cast<std::size_t>(ring.modulus());
  Signal2D f(ring);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (const auto x : random_subset(rng, n * n, support_size)) {
    f[x] = worst_case ? std::polar(1.0, angle(rng)) : complex_gaussian(rng);
  }
  return f;
}

std::vector<SweepRow> threshold_sweep(const RingContext& ring, std::span<const Frequency> unobserved,
                                      std::span<const std::size_t> support_sizes,
                                      std::size_t trials, const SweepOptions& options) {
  std::vector<SweepRow> rows;
  if (trials == 0) return rows;
  const auto n = static_cast<double>(ring.modulus());
  std::vector<Frequency> lost(unobserved.begin(), unobserved.end());
  std::sort(lost.begin(), lost.end());
  lost.erase(std::unique(lost.begin(), lost.end()), lost.end());

  for (const auto size : support_sizes) {
    std::vector<std::optional<RecoveryResult>> slots(trials);
    parallel_for(trials, [&](std::size_t trial) {
      const auto f = random_sparse_signal(ring, size, options.worst_case, options.seed,
                                          kSweepStream ^ (static_cast<std::uint64_t>(size) << 32U),
                                          trial);
      slots[trial] = logan_recover(erase(f, lost), options.params);
    });
    SweepRow row;
    row.modulus = ring.modulus();
    row.unobserved_size = lost.size();
    row.support_size = size;
    row.trials = trials;
    row.ds_threshold = lost.empty() ? n * n : n * n / (2.0 * static_cast<double>(lost.size()));
    row.improved_threshold = n * n / (4.0 * std::pow(2.0, ring.omega()));
    double iterations = 0.0;
    for (const auto& slot : slots) {
      iterations += static_cast<double>(slot->iterations);
      if (slot->exact()) ++row.exact_count;
      if (slot->exactness == Exactness::non_unique) ++row.non_unique_count;
      if (slot->status != RecoveryStatus::converged) ++row.unconverged_count;
    }
    row.exact_rate = static_cast<double>(row.exact_count) / static_cast<double>(trials);
    row.mean_iterations = iterations / static_cast<double>(trials);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace restrictlab
