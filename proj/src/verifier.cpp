#include "bohrlab/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "bohrlab/eilenberg.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/harmonic.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/radius.hpp"

namespace bohrlab {

namespace {

// Dilatation samples use a second stream derived from the trial seed.
constexpr std::uint64_t kDilatationStream = 0xD1B54A32D192ED03ULL;
// Witnesses whose envelope argmax sits at a = 1 are moved this far inside the disk.
constexpr double kWitnessEdge = 1e-5;

double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct TrialSummary {
  std::uint64_t failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::optional<std::uint64_t> first_failure;

  void record(std::uint64_t trial, double slack) {
    worst = std::min(worst, slack);
    if (!(slack >= -kSlackTolerance)) {
      ++failures;
      if (!first_failure || trial < *first_failure) first_failure = trial;
    }
  }

  void merge(const TrialSummary& other) {
    failures += other.failures;
    worst = std::min(worst, other.worst);
    if (other.first_failure && (!first_failure || *other.first_failure < *first_failure)) {
      first_failure = other.first_failure;
    }
  }
};

// Runs slack_of(trial_seed(seed, i)) for every trial on a strided worker
// partition. The reduction (count, min, lowest failing index) does not
// depend on the partition, so reports are identical for any thread count.
template <class SlackOf>
TrialSummary run_trials(std::size_t trials, std::uint64_t seed, const SlackOf& slack_of) {
  const auto workers = static_cast<unsigned>(
      std::clamp<std::size_t>(trials, 1, std::max(1u, worker_count())));
  std::vector<TrialSummary> partial(workers);
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < trials; i += workers) {
        partial[w].record(i, slack_of(trial_seed(seed, i)));
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  TrialSummary total;
  for (const auto& part : partial) total.merge(part);
  return total;
}

SchurFunction sample_dilatation(std::uint64_t ts, std::size_t depth) {
  return sample_schur(splitmix64(ts ^ kDilatationStream), depth);
}

// f = z g for a sampled g: Schur parameters with a leading zero.
SchurFunction sample_vanishing(std::uint64_t ts, std::size_t depth) {
  const auto g = sample_schur(ts, depth);
  std::vector<Complex> params{Complex{}};
  params.insert(params.end(), g.params().begin(), g.params().end());
  return SchurFunction(std::move(params));
}

std::vector<Complex> to_vector(const SchurFunction& s) {
  return {s.params().begin(), s.params().end()};
}

VerificationReport make_report(std::string claim, std::size_t trials, std::uint64_t seed,
                               const TrialSummary& summary) {
  VerificationReport rep;
  rep.claim_id = std::move(claim);
  rep.trials = trials;
  rep.seed = seed;
  rep.failures = summary.failures;
  rep.worst_margin = trials == 0 ? 0.0 : summary.worst;
  return rep;
}

void require_order(std::size_t order) {
  if (order < 1) throw DomainError("truncation order must be at least 1");
}

// Dominance witness: counts as a failure if it violates the inequality.
void add_witness(VerificationReport& rep, const std::string& name, double slack) {
  rep.params[name] = slack;
  if (!(slack >= -kSlackTolerance)) ++rep.failures;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ splitmix64(trial);
}

SchurFunction sample_schur(std::uint64_t seed, std::size_t depth) {
  std::mt19937_64 engine(seed);
  std::vector<Complex> params(depth + 1);
  for (auto& g : params) {
    const double modulus = std::sqrt(unit_double(engine()));
    const double angle = 2.0 * std::numbers::pi * unit_double(engine());
    g = std::polar(modulus, angle);
  }
  return SchurFunction(std::move(params));
}

unsigned worker_count() {
  if (const char* env = std::getenv("BOHRLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport verify_theorem1(double p, double r, std::size_t trials, std::size_t order,
                                   std::uint64_t seed, std::size_t depth) {
  require_order(order);
  const auto bound = mp_theorem1(p, r);
  const auto summary = run_trials(trials, seed, [&](std::uint64_t ts) {
    return bound.value - powered_sum(schur_synthesis(sample_schur(ts, depth), order), p, r).upper;
  });

  auto rep = make_report("theorem1", trials, seed, summary);
  rep.params = {{"p", p},
                {"r", r},
                {"order", static_cast<double>(order)},
                {"depth", static_cast<double>(depth)},
                {"bound", bound.value},
                {"exact_branch", bound.exact ? 1.0 : 0.0}};

  const double a = std::min(maximize_envelope(p, r).argmax, 1.0 - kWitnessEdge);
  rep.params["witness_a"] = a;
  add_witness(rep, "witness_slack",
              bound.value - powered_sum(mobius_automorphism_coeffs(a, kWitnessOrder), p, r).upper);
  if (summary.first_failure) {
    const auto ts = trial_seed(seed, *summary.first_failure);
    rep.replay = Replay{*summary.first_failure, ts, to_vector(sample_schur(ts, depth)), {}};
  }
  return rep;
}

VerificationReport verify_lemma_quadratic(std::size_t trials, double big_r, std::uint64_t seed,
                                          std::size_t order, std::size_t depth) {
  require_order(order);
  if (!(big_r > 0.0 && big_r <= 1.0)) {
    throw DomainError("verify_lemma_quadratic: R must lie in (0,1], got " + std::to_string(big_r));
  }
  const auto summary = run_trials(trials, seed, [&](std::uint64_t ts) {
    const auto check = quadratic_sum_check(schur_synthesis(sample_schur(ts, depth), order), big_r);
    return check.rhs - check.lhs;
  });

  auto rep = make_report("lemma21", trials, seed, summary);
  rep.params = {{"R", big_r},
                {"order", static_cast<double>(order)},
                {"depth", static_cast<double>(depth)}};
  for (const double a : {0.2, 0.5, 0.8}) {
    const auto check = quadratic_sum_check(mobius_automorphism_coeffs(a, kWitnessOrder), big_r);
    const double slack = check.rhs - check.lhs;
    char name[32];
    std::snprintf(name, sizeof name, "witness_slack_a%.1f", a);
    rep.params[name] = slack;
    if (!(std::abs(slack) <= kWitnessTolerance)) ++rep.failures;
  }
  if (summary.first_failure) {
    const auto ts = trial_seed(seed, *summary.first_failure);
    rep.replay = Replay{*summary.first_failure, ts, to_vector(sample_schur(ts, depth)), {}};
  }
  return rep;
}

VerificationReport verify_theorem2(double p, double r, std::size_t trials, std::uint64_t seed,
                                   std::size_t order, std::size_t depth) {
  require_order(order);
  const auto bound = harmonic_bound(p, r);
  if (!bound.valid) {
    throw DomainError("verify_theorem2: r = " + std::to_string(r) +
                      " exceeds the harmonic threshold for p = " + std::to_string(p));
  }
  const auto summary = run_trials(trials, seed, [&](std::uint64_t ts) {
    const auto pair =
        harmonic_pair(sample_schur(ts, depth), sample_dilatation(ts, depth), 1.0, order);
    return bound.value - harmonic_powered_sum(pair, p, r).upper;
  });

  auto rep = make_report("theorem2", trials, seed, summary);
  rep.params = {{"p", p},
                {"r", r},
                {"order", static_cast<double>(order)},
                {"depth", static_cast<double>(depth)},
                {"bound", bound.value}};

  const SchurFunction unit_dilatation({Complex{1.0}});
  HarmonicPair witness;
  if (p <= 2.0) {
    const double a = std::min(maximize_envelope(p, r, true).argmax, 1.0 - kWitnessEdge);
    rep.params["witness_a"] = a;
    // (a - z)/(1 - a z) has Schur parameters (a, -1)
    witness = harmonic_pair(SchurFunction({Complex{a}, Complex{-1.0}}), unit_dilatation, 1.0,
                            kWitnessOrder);
  } else {
    witness = harmonic_pair(SchurFunction({Complex{}, Complex{1.0}}), unit_dilatation, 1.0,
                            kWitnessOrder);
  }
  add_witness(rep, "witness_slack", bound.value - harmonic_powered_sum(witness, p, r).upper);

  if (summary.first_failure) {
    const auto ts = trial_seed(seed, *summary.first_failure);
    rep.replay = Replay{*summary.first_failure, ts, to_vector(sample_schur(ts, depth)),
                        to_vector(sample_dilatation(ts, depth))};
  }
  return rep;
}

VerificationReport verify_be_analytic(double r, std::size_t trials, std::uint64_t seed,
                                      std::size_t order, std::size_t depth) {
  require_order(order);
  const double bound = be_bound(r);
  const auto summary = run_trials(trials, seed, [&](std::uint64_t ts) {
    return bound -
           powered_sum(schur_synthesis(sample_vanishing(ts, depth), order), 1.0, r).upper;
  });

  auto rep = make_report("be_analytic", trials, seed, summary);
  rep.params = {{"r", r},
                {"order", static_cast<double>(order)},
                {"depth", static_cast<double>(depth)},
                {"bound", bound},
                {"max_sum", trials == 0 ? 0.0 : bound - summary.worst}};
  const auto extremal = be_extremal_coeffs(std::sqrt(0.5), kWitnessOrder);
  add_witness(rep, "witness_slack", bound - powered_sum(extremal, 1.0, r).upper);
  // attainment of the bound one at r = 1/sqrt(2)
  const auto at_radius = powered_sum(extremal, 1.0, std::sqrt(0.5));
  rep.params["sharpness_gap"] = 1.0 - at_radius.lower;

  if (summary.first_failure) {
    const auto ts = trial_seed(seed, *summary.first_failure);
    rep.replay = Replay{*summary.first_failure, ts, to_vector(sample_vanishing(ts, depth)), {}};
  }
  return rep;
}

VerificationReport verify_be_harmonic(double r, double p, std::size_t trials, std::uint64_t seed,
                                      std::size_t order, std::size_t depth) {
  require_order(order);
  const double bound = be_harmonic_bound(p, r);
  const auto summary = run_trials(trials, seed, [&](std::uint64_t ts) {
    const auto pair =
        harmonic_pair(sample_vanishing(ts, depth), sample_dilatation(ts, depth), 1.0, order);
    return bound - be_harmonic_sum(pair, p, r).upper;
  });

  auto rep = make_report("be_harmonic", trials, seed, summary);
  rep.params = {{"p", p},
                {"r", r},
                {"order", static_cast<double>(order)},
                {"depth", static_cast<double>(depth)},
                {"bound", bound}};
  if (summary.first_failure) {
    const auto ts = trial_seed(seed, *summary.first_failure);
    rep.replay = Replay{*summary.first_failure, ts, to_vector(sample_vanishing(ts, depth)),
                        to_vector(sample_dilatation(ts, depth))};
  }
  return rep;
}

BeReports verify_be(double r, double p, std::size_t trials, std::uint64_t seed, std::size_t order,
                    std::size_t depth) {
  return {verify_be_analytic(r, trials, seed, order, depth),
          verify_be_harmonic(r, p, trials, seed, order, depth)};
}

VerificationReport verify_theoremB_ratio(double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 2.0)) {
    throw DomainError("verify_theoremB_ratio: p must lie in (0,2), got " + std::to_string(p));
  }
  constexpr double lo = 0.1;
  constexpr double hi = 10.0;
  VerificationReport rep;
  rep.claim_id = "theoremB";
  rep.seed = seed;
  rep.params["p"] = p;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (const double r : kTheoremBRadii) {
    const double ratio = mp_theorem1(p, r).value * std::pow(1.0 - r, 1.0 - p / 2.0);
    char name[32];
    std::snprintf(name, sizeof name, "ratio_r%g", r);
    rep.params[name] = ratio;
    const double margin = std::min(ratio - lo, hi - ratio);
    rep.worst_margin = std::min(rep.worst_margin, margin);
    ++rep.trials;
    if (margin < 0.0) ++rep.failures;
  }
  return rep;
}

}  // namespace bohrlab
