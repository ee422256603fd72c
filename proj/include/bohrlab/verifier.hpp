#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Slack below -kSlackTolerance counts as a violated inequality.
inline constexpr double kSlackTolerance = 1e-9;
/// Allowed |slack| for equality (extremal) witnesses.
inline constexpr double kWitnessTolerance = 1e-8;
inline constexpr std::size_t kDefaultDepth = 12;
/// Truncation order used for extremal witnesses.
inline constexpr std::size_t kWitnessOrder = 400;

/// Enough to regenerate a failing trial.
struct Replay {
  std::uint64_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::vector<Complex> params;
  /// dilatation parameters, harmonic claims only
  std::vector<Complex> dilatation_params;
};

struct VerificationReport {
  std::string claim_id;
  std::uint64_t trials = 0;
  /// violating random trials plus violating witnesses
  std::uint64_t failures = 0;
  /// smallest slack over the random trials
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
  /// first failing random trial, if any
  std::optional<Replay> replay;

  bool passed() const { return failures == 0; }
};

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial i: seed XOR splitmix64(i). Independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/**
 * depth + 1 Schur parameters, each uniform on the unit disk (modulus sqrt(U),
 * uniform angle), drawn from an mt19937_64 stream keyed by seed.
 */
SchurFunction sample_schur(std::uint64_t seed, std::size_t depth);

/// Worker threads for trial loops: BOHRLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/**
 * Dominance of the powered Bohr envelope: slack = mp_theorem1(p, r).value -
 * powered_sum(sample).upper. The automorphism at the envelope argmax is
 * checked alongside (params: witness_a, witness_slack).
 */
VerificationReport verify_theorem1(double p, double r, std::size_t trials, std::size_t order,
                                   std::uint64_t seed, std::size_t depth = kDefaultDepth);

/**
 * Quadratic coefficient inequality at weight R; slack = rhs - lhs. The
 * automorphisms with a in {0.2, 0.5, 0.8} must attain it within 1e-8.
 */
VerificationReport verify_lemma_quadratic(std::size_t trials, double big_r, std::uint64_t seed,
                                          std::size_t order = kDefaultOrder,
                                          std::size_t depth = kDefaultDepth);

/**
 * Harmonic dominance against harmonic_bound(p, r) for pairs with both Schur
 * functions sampled. Witness: the automorphism at the doubled-envelope argmax
 * with dilatation 1 (or h = z, g = z for p > 2).
 */
VerificationReport verify_theorem2(double p, double r, std::size_t trials, std::uint64_t seed,
                                   std::size_t order = kDefaultOrder,
                                   std::size_t depth = kDefaultDepth);

struct BeReports {
  VerificationReport analytic;  ///< sum |a_k| r^k against be_bound(r), f = z g
  VerificationReport harmonic;  ///< sum (|a_k|^p + |b_k|^p)^{1/p} r^k against be_harmonic_bound
};

VerificationReport verify_be_analytic(double r, std::size_t trials, std::uint64_t seed,
                                      std::size_t order = kDefaultOrder,
                                      std::size_t depth = kDefaultDepth);
VerificationReport verify_be_harmonic(double r, double p, std::size_t trials, std::uint64_t seed,
                                      std::size_t order = kDefaultOrder,
                                      std::size_t depth = kDefaultDepth);
BeReports verify_be(double r, double p, std::size_t trials, std::uint64_t seed,
                    std::size_t order = kDefaultOrder, std::size_t depth = kDefaultDepth);

/// r values at which verify_theoremB_ratio samples the envelope.
inline constexpr double kTheoremBRadii[] = {0.5, 0.9, 0.99, 0.999};

/**
 * mp_theorem1(p, r).value * (1 - r)^{1 - p/2} at kTheoremBRadii must stay in
 * [0.1, 10]. Deterministic; the seed is only echoed.
 */
VerificationReport verify_theoremB_ratio(double p, std::uint64_t seed);

}  // namespace bohrlab
