#pragma once

#include <cstdint>

#include "pathsample/motifs.hpp"
#include "pathsample/sample_types.hpp"

namespace pathsample {

struct BinomialObservation {
  std::uint64_t trials = 0;     // k >= 1
  std::uint64_t successes = 0;  // r <= k
  double alpha() const { return (double)successes / (double)trials; }
};

// Plausible range for a Bernoulli success probability given an observation,
// at confidence parameter delta: outside [lower, upper], the probability of
// seeing the observed rate is at most delta.
struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 1.0;
  double delta = 0.0;
};

// A probability interval scaled into motif-count units, with enough run
// provenance (k and scale) to validate composition.
struct ScaledInterval {
  MotifId motif = MotifId::three_path;
  double lower = 0.0;
  double upper = 0.0;
  double point = 0.0;
  std::uint64_t samples = 0;
  double scale = 0.0;
  double delta = 0.0;
};

// Relative entropy between Bernoulli(a) and Bernoulli(b):
// a ln(a/b) + (1-a) ln((1-a)/(1-b)), with the 0 ln 0 = 0 convention.
// Requires a in [0,1]; returns +infinity when b is 0 or 1 and a differs.
double kl_divergence(double a, double b);

// Invert exp(-kl(alpha, p) * k) = delta on each side of alpha. The function
// is unimodal in p with maximum 1 at p = alpha, so each branch has a unique
// root, found by bisection to 1e-12 absolute tolerance in p; the alpha = 0
// and alpha = 1 boundaries use the closed forms.
ConfidenceInterval invert_bounds(const BinomialObservation& obs, double delta);

// Error bar for one directly-estimated motif (2..6 basic, 4..6 centered):
// the probability interval for count_i/k scaled by the run's scale K_i.
ScaledInterval interval_for_motif(const Estimate& est, MotifId motif, double delta);

// 3-star error bar from a basic run: the deviations of the tailed-triangle,
// chordal-4-cycle and 4-clique bars add with weights 1, 2, 4 (taking each
// bar's wider side). The three intervals must come from `est` itself.
ScaledInterval interval_for_c1(const Estimate& est, const ScaledInterval& tailed,
                               const ScaledInterval& chordal,
                               const ScaledInterval& clique, double delta);

}  // namespace pathsample
