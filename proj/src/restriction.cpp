#include "restrictlab/restriction.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "restrictlab/parallel.hpp"

namespace restrictlab {

namespace {

void require_squarefree(const RingContext& ring, const char* what) {
  if (!ring.squarefree()) {
    throw std::domain_error(std::string(what) + ": N=" + std::to_string(ring.modulus()) +
                            " is not squarefree");
  }
}

}  // namespace

RestrictionReport make_report(double lhs, double rhs, double constant) {
  RestrictionReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.constant = constant;
  if (rhs > 0.0) {
    report.ratio = lhs / rhs;
  } else {
    report.ratio = lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  report.satisfied = report.ratio <= constant + kRatioTolerance;
  return report;
}

double main_theorem_constant(const RingContext& ring) { return bounded_factor_constant(ring.omega()); }

double bounded_factor_constant(int max_prime_factors) {
  return std::pow(2.0, static_cast<double>(max_prime_factors) / 4.0);
}

double general_envelope(std::uint64_t modulus) {
  if (modulus < 3) throw std::invalid_argument("general_envelope: N must be at least 3");
  const double n = static_cast<double>(modulus);
  return std::pow(n, 1.0 / (4.0 * std::log(std::log(n))));
}

double calibrate_general_constant(std::span<const EnvelopeSample> samples) {
  double c = 0.0;
  for (const auto& s : samples) c = std::max(c, s.observed_ratio / general_envelope(s.modulus));
  return c;
}

double restriction_lhs(std::span<const Complex> on_parabola, double s) {
  if (s < 1.0) throw std::invalid_argument("restriction_lhs: s must be at least 1");
  return normalized_lp_norm(on_parabola, s);
}

double restriction_lhs(const Spectrum2D& spectrum, const ParabolaSet& sigma, double s) {
  return restriction_lhs(restrict_to(sigma, spectrum), s);
}

double restriction_rhs(const Signal2D& f, double r) {
  return lp_norm(f, r) / static_cast<double>(f.side());
}

RestrictionReport evaluate_restriction(const Signal2D& f, const ParabolaSet& sigma,
                                       const FourierPlan& plan, const RestrictionParams& params) {
  if (params.r < 1.0 || params.r > params.s) {
    throw std::invalid_argument("restriction exponents need 1 <= r <= s");
  }
  const auto on_parabola = plan.sample(f, sigma.points());
  return make_report(restriction_lhs(on_parabola, params.s), restriction_rhs(f, params.r),
                     params.constant);
}

RestrictionReport verify_main_theorem(const Signal2D& f, const ParabolaSet& sigma,
                                      const FourierPlan& plan) {
  require_squarefree(sigma.ring(), "verify_main_theorem");
  return evaluate_restriction(f, sigma, plan,
                              {2.0, 4.0 / 3.0, main_theorem_constant(sigma.ring())});
}

RestrictionReport verify_main_theorem(const Signal2D& f, const ParabolaSet& sigma) {
  return verify_main_theorem(f, sigma, FourierPlan(sigma.ring()));
}

UniversalCertificate universal_certificate(const ParabolaSet& sigma) {
  require_squarefree(sigma.ring(), "universal_certificate");
  UniversalCertificate cert;
  cert.lambda_size = sigma.lambda_size();
  cert.lambda_energy = static_cast<double>(energy_exact(sigma).max_rep);
  cert.implied_constant = std::pow(cert.lambda_size, -0.5) * std::pow(cert.lambda_energy, 0.25);
  cert.theorem_constant = main_theorem_constant(sigma.ring());
  return cert;
}

RestrictionReport verify_dual(const ParabolaSet& sigma, const FourierPlan& plan,
                              std::span<const Complex> coeffs) {
  require_squarefree(sigma.ring(), "verify_dual");
  const auto f = extend_from(sigma, plan, coeffs);
  return make_report(normalized_lp_norm(f, 4.0), normalized_lp_norm(f, 2.0),
                     main_theorem_constant(sigma.ring()));
}

RestrictionReport verify_dual(const ParabolaSet& sigma, std::span<const Complex> coeffs) {
  return verify_dual(sigma, FourierPlan(sigma.ring()), coeffs);
}

RestrictionReport verify_l1_l2(const ParabolaSet& sigma, const FourierPlan& plan,
                               std::span<const Complex> coeffs) {
  require_squarefree(sigma.ring(), "verify_l1_l2");
  const auto f = extend_from(sigma, plan, coeffs);
  const double k = main_theorem_constant(sigma.ring());
  return make_report(normalized_lp_norm(f, 2.0), normalized_lp_norm(f, 1.0), k * k);
}

RestrictionReport verify_l1_l2(const ParabolaSet& sigma, std::span<const Complex> coeffs) {
  return verify_l1_l2(sigma, FourierPlan(sigma.ring()), coeffs);
}

// ---------------------------------------------------------------------------
// Uncertainty search

namespace {

using Matrix = Eigen::MatrixXcd;

// Character matrix chi(x, t) = e^{2 pi i (x1 t + x2 t^2) / N}; a signal with
// spectrum on the parabola is chi * c up to scaling.
Matrix character_matrix(const RingContext& ring) {
  const ParabolaSet sigma(ring);
  const FourierPlan plan(ring);
  const auto n = ring.modulus();
  Matrix chi(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(n));
  for (std::uint64_t x1 = 0; x1 < n; ++x1) {
    for (std::uint64_t x2 = 0; x2 < n; ++x2) {
      for (std::uint64_t t = 0; t < n; ++t) {
        const auto& p = sigma.point(t);
        const auto k = (mul_mod(x1, p.first, n) + mul_mod(x2, p.second, n)) % n;
        chi(static_cast<Eigen::Index>(x1 * n + x2), static_cast<Eigen::Index>(t)) =
            std::conj(plan.root(k));
      }
    }
  }
  return chi;
}

class SupportRankTester {
 public:
  SupportRankTester(const Matrix& chi, double threshold)
      : chi_(chi), threshold_(threshold), inside_(static_cast<std::size_t>(chi.rows()), 0) {}

  // True when the rows of chi outside `support` have rank below N.
  bool admits(std::span<const std::size_t> support) {
    const auto rows = chi_.rows() - static_cast<Eigen::Index>(support.size());
    if (rows < chi_.cols()) return true;
    for (const auto s : support) inside_[s] = 1;
    off_.resize(rows, chi_.cols());
    Eigen::Index r = 0;
    for (Eigen::Index x = 0; x < chi_.rows(); ++x) {
      if (!inside_[static_cast<std::size_t>(x)]) off_.row(r++) = chi_.row(x);
    }
    for (const auto s : support) inside_[s] = 0;
    qr_.setThreshold(threshold_);
    qr_.compute(off_);
    return qr_.rank() < chi_.cols();
  }

  std::vector<Complex> null_vector() const {
    Eigen::JacobiSVD<Matrix> svd(off_, Eigen::ComputeFullV);
    const Eigen::VectorXcd v = svd.matrixV().col(svd.matrixV().cols() - 1);
    return {v.data(), v.data() + v.size()};
  }

 private:
  const Matrix& chi_;
  double threshold_;
  std::vector<char> inside_;
  Matrix off_;
  Eigen::ColPivHouseholderQR<Matrix> qr_;
};

struct Found {
  std::uint64_t order = 0;
  std::vector<std::size_t> support;
  std::vector<Complex> coefficients;
};

void keep_first(std::optional<Found>& best, std::mutex& mutex, Found candidate) {
  std::lock_guard lock(mutex);
  if (!best || candidate.order < best->order) best = std::move(candidate);
}

// Visits every `remaining`-subset of [next, n) appended to `prefix`, in
// lexicographic order. Stops early when visit returns true.
template <class Visit>
bool for_each_combination(std::vector<std::size_t>& prefix, std::size_t next, std::size_t n,
                          std::size_t remaining, Visit& visit) {
  if (remaining == 0) return visit(prefix);
  for (std::size_t x = next; x + remaining <= n; ++x) {
    prefix.push_back(x);
    const bool stop = for_each_combination(prefix, x + 1, n, remaining - 1, visit);
    prefix.pop_back();
    if (stop) return true;
  }
  return false;
}

constexpr std::uint64_t kUncertaintyStream = 0x756e63657274ULL;
constexpr std::uint64_t kRandomChunk = 4096;

}  // namespace

bool support_admits_parabola_signal(const RingContext& ring, std::span<const std::size_t> support,
                                    double rank_threshold) {
  const Matrix chi = character_matrix(ring);
  SupportRankTester tester(chi, rank_threshold);
  return tester.admits(support);
}

UncertaintyVerdict uncertainty_search(const RingContext& ring, std::size_t max_support,
                                      const UncertaintyOptions& options) {
  require_squarefree(ring, "uncertainty_search");
  const auto n = ring.modulus();
  const std::uint64_t cells = n * n;
  // max_support < N^2 / 2^omega
  if (static_cast<std::uint64_t>(max_support) << ring.omega() >= cells) {
    throw std::invalid_argument("uncertainty_search: max_support " + std::to_string(max_support) +
                                " must be below N^2 / 2^omega = " +
                                std::to_string(static_cast<double>(cells) / (1ULL << ring.omega())));
  }
  const Matrix chi = character_matrix(ring);
  UncertaintyVerdict verdict;
  std::optional<Found> found;
  std::mutex mutex;
  std::atomic<std::uint64_t> checked{0};

  // Exhaustive phase: one task per (size, leading element); order key is
  // (size, lexicographic rank within the task).
  const std::size_t exhaustive = std::min(options.exhaustive_max_size, max_support);
  for (std::size_t k = 1; k <= exhaustive && !found; ++k) {
    parallel_for(cells, [&](std::size_t lead) {
      SupportRankTester tester(chi, options.rank_threshold);
      std::vector<std::size_t> prefix{lead};
      std::uint64_t local = 0;
      auto visit = [&](const std::vector<std::size_t>& support) {
        const std::uint64_t rank = local++;
        if (!tester.admits(support)) return false;
        keep_first(found, mutex, {(lead << 40U) | rank, support, tester.null_vector()});
        return true;
      };
      for_each_combination(prefix, lead + 1, cells, k - 1, visit);
      checked += local;
    });
  }

  // Random phase: chunked so every sample's stream is fixed by its index.
  const std::size_t first_random = exhaustive + 1;
  if (!found && options.random_samples > 0 && first_random <= max_support) {
    const std::size_t sizes = max_support - first_random + 1;
    const std::uint64_t chunks = (options.random_samples + kRandomChunk - 1) / kRandomChunk;
    parallel_for(chunks, [&](std::size_t chunk) {
      SupportRankTester tester(chi, options.rank_threshold);
      Rng rng = make_rng(options.seed, kUncertaintyStream, chunk);
      const std::uint64_t begin = chunk * kRandomChunk;
      const std::uint64_t end = std::min(options.random_samples, begin + kRandomChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        const std::size_t k = first_random + static_cast<std::size_t>(i % sizes);
        const auto support = random_subset(rng, cells, k);
        if (tester.admits(support)) {
          keep_first(found, mutex, {(std::uint64_t{1} << 63U) | i, support, tester.null_vector()});
          checked += i - begin + 1;
          return;
        }
      }
      checked += end - begin;
    });
  }

  verdict.supports_checked = checked.load();
  if (found) {
    verdict.witness_found = true;
    verdict.support = std::move(found->support);
    verdict.coefficients = std::move(found->coefficients);
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Sharpness probe

namespace {

constexpr std::uint64_t kSharpnessStream = 0x7368617270ULL;

struct ProbeScore {
  double ratio = 0.0;
  double ratio_six_fifths = 0.0;
};

ProbeScore score_indicator(const std::vector<std::size_t>& support, const ParabolaSet& sigma,
                           const FourierPlan& plan) {
  Signal2D f(sigma.ring());
  for (const auto x : support) f[x] = 1.0;
  const auto on_parabola = plan.sample(f, sigma.points());
  const double lhs = restriction_lhs(on_parabola, 2.0);
  // For an indicator of size k, ||f||_r = k^{1/r}.
  const double k = static_cast<double>(support.size());
  const double n = static_cast<double>(sigma.ring().modulus());
  return {lhs / (std::pow(k, 0.75) / n), lhs / (std::pow(k, 5.0 / 6.0) / n)};
}

}  // namespace

SharpnessResult sharpness_probe(const RingContext& ring, const SharpnessOptions& options) {
  const ParabolaSet sigma(ring);
  const FourierPlan plan(ring);
  const auto n = ring.modulus();

  std::vector<std::uint64_t> steps;
  for (const auto d : divisors(n)) {
    if (n % (d * d) == 0) steps.push_back(d);
  }

  // The ratio is translation invariant, so boxes are anchored at the origin.
  std::vector<SharpnessWitness> family;
  for (const auto d1 : steps) {
    for (const auto d2 : steps) {
      for (std::uint64_t l1 = 1; l1 <= n / d1; ++l1) {
        for (std::uint64_t l2 = 1; l2 <= n / d2; ++l2) {
          SharpnessWitness w{"box", d1, d2, l1, l2, {}};
          for (std::uint64_t i = 0; i < l1; ++i) {
            for (std::uint64_t j = 0; j < l2; ++j) w.support.push_back((d1 * i) * n + d2 * j);
          }
          std::sort(w.support.begin(), w.support.end());
          family.push_back(std::move(w));
        }
      }
    }
  }
  const std::size_t max_random_size = std::min<std::uint64_t>(2 * n, n * n);
  for (std::size_t i = 0; i < options.random_indicators; ++i) {
    Rng rng = make_rng(options.seed, kSharpnessStream, i);
    const std::size_t k = 1 + i % max_random_size;
    family.push_back({"random", 0, 0, 0, 0, random_subset(rng, n * n, k)});
  }

  std::vector<ProbeScore> scores(family.size());
  parallel_for(family.size(),
               [&](std::size_t i) { scores[i] = score_indicator(family[i].support, sigma, plan); });

  SharpnessResult result;
  result.modulus = n;
  result.evaluated = family.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].ratio > scores[best].ratio + 1e-12) best = i;
    result.best_ratio_six_fifths = std::max(result.best_ratio_six_fifths, scores[i].ratio_six_fifths);
  }
  result.best_ratio = scores[best].ratio;
  result.witness = std::move(family[best]);
  return result;
}

}  // namespace restrictlab
