#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nltrace/fuzzy.hpp"
#include "nltrace/report.hpp"
#include "nltrace/rng.hpp"
#include "nltrace/spectral.hpp"
#include "nltrace/stepops.hpp"
#include "nltrace/weights.hpp"

namespace nltrace {

// ---------------------------------------------------------------------------
// Generators. Complex normals have independent N(0,1) real and imaginary
// parts.

ComplexMatrix random_complex(std::size_t n, Rng& rng);
/// (G + G*)/2, exactly Hermitian.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);
/// G* G, exactly Hermitian.
ComplexMatrix random_psd(std::size_t n, Rng& rng);
/// Modified Gram-Schmidt on the columns of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

enum class Sampling {
  /// |N(0,1)| values and masses.
  floating,
  /// Values in {0, 1/8, ..., 2} and masses in {1/8, ..., 2}: every sum and
  /// product the traces form is exact.
  rational,
};

/// k segments, no cap.
StepOperator random_step_operator(std::size_t k, Rng& rng,
                                  Sampling mode = Sampling::floating);
/// k <= 32 segments with masses in multiples of 1/32 and total mass <= 1;
/// cap 1.
StepOperator random_unit_step_operator(std::size_t k, Rng& rng,
                                       Sampling mode = Sampling::floating);
/// i.i.d. U[0,1) draws per subset, closed upwards by a running max over the
/// subset lattice.
MonotoneMeasure random_monotone_measure(std::size_t n, Rng& rng);

// ---------------------------------------------------------------------------
// Trial runner

struct TrialOutcome {
  bool ok = true;
  /// Larger is worse.
  double score = 0.0;
  Json witness;
};

/// Evaluates trial `index`; fills `witness` only when asked to.
using TrialFn = std::function<TrialOutcome(std::uint64_t index, bool want_witness)>;

struct Reduction {
  bool passed = true;
  double worst = 0.0;
  std::uint64_t worst_index = 0;
  /// Lowest failing index, or worst_index on a pass.
  std::uint64_t first_failure = 0;
};

/// Runs trials 0..count-1 on `workers` threads (index i goes to worker
/// i mod workers) and reduces: passed = all ok, worst = max score with ties
/// to the lowest index. The result does not depend on `workers`.
Reduction run_trials(std::uint64_t count, unsigned workers, const TrialFn& fn);

// ---------------------------------------------------------------------------
// Triangle falsifier

struct FalsifyConfig {
  DiscreteWeight weight = DiscreteWeight::power(1.0);
  double p = 1.0;
  std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
  /// Random pairs on top of the structured library.
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// A ratio above bound + tol is a violation.
  double bound = 1.0;
  double tol = 1e-9;
};

/// Maximizes triangle_ratio over the structured library (interval projection
/// pairs of every rank and offset, reversal ladders diag(1..1,t..t) against
/// their mirror image, projections against the rank-one all-ones projection)
/// followed by random Hermitian, psd and general pairs. The witness is the
/// worst pair, with the matrices embedded.
Report falsify_triangle(const FalsifyConfig& cfg);

/// Recomputes the ratio of a falsify witness from its embedded inputs.
double replay_triangle(const Json& witness);

// ---------------------------------------------------------------------------
// Suites

struct SuiteConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Empty selects the suite's own default dimensions.
  std::vector<std::size_t> dims;
};

/// Throws InputError for an unknown id.
Report run_suite(const std::string& id, const SuiteConfig& cfg);
std::vector<std::string> suite_ids();

}  // namespace nltrace
