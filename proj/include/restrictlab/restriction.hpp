#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "restrictlab/fourier.hpp"
#include "restrictlab/parabola.hpp"

namespace restrictlab {

/// Absolute slack allowed on a ratio before a report counts as violated.
inline constexpr double kRatioTolerance = 1e-9;

/// Exponents of the functional
///   (|S|^{-1} sum_{m in S} |f^(m)|^s)^{1/s} <= C N^{-1} (sum_x |f(x)|^r)^{1/r}
/// on (Z/NZ)^2, and the constant C it is checked against.
struct RestrictionParams {
  double s = 2.0;
  double r = 4.0 / 3.0;
  double constant = 1.0;
};

struct RestrictionReport {
  double lhs = 0.0;
  /// Right-hand side without the constant.
  double rhs = 0.0;
  /// lhs / rhs, or 0 when both sides vanish.
  double ratio = 0.0;
  double constant = 0.0;
  bool satisfied = true;
};

RestrictionReport make_report(double lhs, double rhs, double constant);

/// 2^{omega/4}: the certified (2, 4/3) constant for squarefree N.
double main_theorem_constant(const RingContext& ring);
/// 2^{K/4}, valid for every squarefree N with at most K prime factors.
double bounded_factor_constant(int max_prime_factors);
/// N^{1 / (4 log log N)}; requires N >= 3.
double general_envelope(std::uint64_t modulus);

struct EnvelopeSample {
  std::uint64_t modulus = 0;
  double observed_ratio = 0.0;
};
/// Smallest C with observed_ratio <= C * general_envelope(N) on every sample.
double calibrate_general_constant(std::span<const EnvelopeSample> samples);

double restriction_lhs(const Spectrum2D& spectrum, const ParabolaSet& sigma, double s);
/// Same, from the parabola samples of the spectrum.
double restriction_lhs(std::span<const Complex> on_parabola, double s);
/// N^{-1} (sum_x |f(x)|^r)^{1/r}.
double restriction_rhs(const Signal2D& f, double r);

/// Generic functional, no hypothesis checks.
RestrictionReport evaluate_restriction(const Signal2D& f, const ParabolaSet& sigma,
                                       const FourierPlan& plan, const RestrictionParams& params);

/// (2, 4/3) estimate with constant 2^{omega/4}. Throws std::domain_error
/// when N is not squarefree.
RestrictionReport verify_main_theorem(const Signal2D& f, const ParabolaSet& sigma);
RestrictionReport verify_main_theorem(const Signal2D& f, const ParabolaSet& sigma,
                                      const FourierPlan& plan);

struct UniversalCertificate {
  double lambda_size = 1.0;
  /// max_k rep_Sigma(k); E(U) <= lambda_energy |U|^2 for every U in Sigma.
  double lambda_energy = 0.0;
  /// lambda_size^{-1/2} lambda_energy^{1/4}.
  double implied_constant = 0.0;
  /// 2^{omega/4}.
  double theorem_constant = 0.0;
};

/// Throws std::domain_error when N is not squarefree.
UniversalCertificate universal_certificate(const ParabolaSet& sigma);

/// L^4 bound for f = extend_from(c): averaged ||f||_4 against averaged
/// ||f||_2, constant 2^{omega/4}. Throws std::domain_error when N is not
/// squarefree.
RestrictionReport verify_dual(const ParabolaSet& sigma, std::span<const Complex> coeffs);
RestrictionReport verify_dual(const ParabolaSet& sigma, const FourierPlan& plan,
                              std::span<const Complex> coeffs);

/// Averaged ||f||_2 <= K^2 averaged ||f||_1 for f = extend_from(c), with
/// K = 2^{omega/4}.
RestrictionReport verify_l1_l2(const ParabolaSet& sigma, std::span<const Complex> coeffs);
RestrictionReport verify_l1_l2(const ParabolaSet& sigma, const FourierPlan& plan,
                               std::span<const Complex> coeffs);

struct UncertaintyOptions {
  /// Every support of size 1..exhaustive_max_size is checked.
  std::size_t exhaustive_max_size = 0;
  /// Random supports with sizes in (exhaustive_max_size, max_support],
  /// split evenly between the sizes.
  std::uint64_t random_samples = 0;
  std::uint64_t seed = 0;
  /// Relative pivot threshold of the rank test.
  double rank_threshold = 1e-8;
};

struct UncertaintyVerdict {
  bool witness_found = false;
  /// Flat indices x1 * N + x2 of the support, when a witness was found.
  std::vector<std::size_t> support;
  /// Parabola coefficients c with extend_from(c) vanishing off support.
  std::vector<Complex> coefficients;
  std::uint64_t supports_checked = 0;
};

/// Searches for nonzero f with spectrum on the parabola and at most
/// max_support nonzero values. Throws std::domain_error when N is not squarefree and
/// std::invalid_argument unless max_support < N^2 / 2^omega.
UncertaintyVerdict uncertainty_search(const RingContext& ring, std::size_t max_support,
                                      const UncertaintyOptions& options);

/// True when some nonzero f with spectrum on the parabola vanishes off
/// `support`.
bool support_admits_parabola_signal(const RingContext& ring, std::span<const std::size_t> support,
                                    double rank_threshold = 1e-8);

struct SharpnessOptions {
  std::size_t random_indicators = 200;
  std::uint64_t seed = 0;
};

struct SharpnessWitness {
  /// "box" or "random".
  std::string kind;
  std::uint64_t step1 = 1, step2 = 1;
  std::uint64_t length1 = 0, length2 = 0;
  std::vector<std::size_t> support;
};

struct SharpnessResult {
  std::uint64_t modulus = 0;
  /// Largest (2, 4/3) ratio found and its witness.
  double best_ratio = 0.0;
  SharpnessWitness witness;
  /// Largest (2, 6/5) ratio over the same family.
  double best_ratio_six_fifths = 0.0;
  std::size_t evaluated = 0;
};

/// Maximizes the (2, 4/3) ratio over indicator functions of boxes
/// {d1 i : 0 <= i < L1} x {d2 j : 0 <= j < L2} with d1, d2 ranging over
/// d such that d^2 | N, plus random sparse indicators. Any N >= 2.
SharpnessResult sharpness_probe(const RingContext& ring, const SharpnessOptions& options);

}  // namespace restrictlab
