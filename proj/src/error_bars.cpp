#include "pathsample/error_bars.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pathsample {

double kl_divergence(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("kl_divergence: a outside [0,1]");
  if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("kl_divergence: b outside [0,1]");
  if (a == b) return 0.0;
  if (b <= 0.0 || b >= 1.0) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  if (a > 0.0) d += a * std::log(a / b);
  if (a < 1.0) d += (1.0 - a) * std::log((1.0 - a) / (1.0 - b));
  return d;
}

namespace {

// Root of kl(alpha, p) = target on [lo, hi], where the divergence is
// monotone decreasing toward alpha on the lower branch and increasing away
// from it on the upper branch.
double bisect_branch(double alpha, double target, double lo, double hi, bool lower_branch) {
  // Runs past the 1e-12 guarantee to full collapse; the extra iterations are
  // what keep the endpoint residual below 1e-9 when the root sits near 0.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const bool above = kl_divergence(alpha, mid) > target;
    if (lower_branch) {
      (above ? lo : hi) = mid;
    } else {
      (above ? hi : lo) = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ConfidenceInterval invert_bounds(const BinomialObservation& obs, double delta) {
  if (obs.trials == 0) throw std::invalid_argument("invert_bounds: zero trials");
  if (obs.successes > obs.trials)
    throw std::invalid_argument("invert_bounds: successes exceed trials");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("invert_bounds: delta outside (0,1)");

  const double k = (double)obs.trials;
  const double alpha = obs.alpha();
  ConfidenceInterval ci;
  ci.delta = delta;

  if (obs.successes == 0) {
    ci.lower = 0.0;
    ci.upper = -std::expm1(std::log(delta) / k);  // 1 - delta^(1/k)
    return ci;
  }
  if (obs.successes == obs.trials) {
    ci.lower = std::exp(std::log(delta) / k);
    ci.upper = 1.0;
    return ci;
  }

  const double target = std::log(1.0 / delta) / k;
  ci.lower = bisect_branch(alpha, target, 0.0, alpha, true);
  ci.upper = bisect_branch(alpha, target, alpha, 1.0, false);
  return ci;
}

ScaledInterval interval_for_motif(const Estimate& est, MotifId motif, double delta) {
  if (!est.has(motif) || motif == MotifId::three_star)
    throw std::invalid_argument("interval_for_motif: motif not directly estimated by this run");
  const ConfidenceInterval ci =
      invert_bounds({est.samples, est.count(motif)}, delta);
  ScaledInterval out;
  out.motif = motif;
  out.scale = est.scale(motif);
  out.lower = ci.lower * out.scale;
  out.upper = ci.upper * out.scale;
  out.point = est.value(motif);
  out.samples = est.samples;
  out.delta = delta;
  return out;
}

ScaledInterval interval_for_c1(const Estimate& est, const ScaledInterval& tailed,
                               const ScaledInterval& chordal,
                               const ScaledInterval& clique, double delta) {
  if (est.kind != SamplerKind::basic)
    throw std::invalid_argument("interval_for_c1: requires a basic-sampler estimate");
  const auto check = [&](const ScaledInterval& si, MotifId want) {
    if (si.motif != want || si.samples != est.samples ||
        si.scale != est.scale(want) || si.delta != delta)
      throw std::invalid_argument("interval_for_c1: interval is not from this run");
  };
  check(tailed, MotifId::tailed_triangle);
  check(chordal, MotifId::chordal_four_cycle);
  check(clique, MotifId::four_clique);

  const auto err = [](const ScaledInterval& si) {
    return std::max(si.point - si.lower, si.upper - si.point);
  };
  const double width = err(tailed) + 2.0 * err(chordal) + 4.0 * err(clique);
  const double point = est.value(MotifId::three_star);
  ScaledInterval out;
  out.motif = MotifId::three_star;
  out.lower = std::max(0.0, point - width);
  out.upper = std::max(0.0, point + width);
  out.point = point;
  out.samples = est.samples;
  out.scale = 0.0;
  out.delta = delta;
  return out;
}

}  // namespace pathsample
