#pragma once

#include <cstdint>
#include <vector>

#include "pathsample/discrete.hpp"
#include "pathsample/graph.hpp"
#include "pathsample/random.hpp"
#include "pathsample/sample_types.hpp"

namespace pathsample {

// Per-edge 3-path multiplicity (d_u - 1)(d_v - 1) and its graph-wide total.
// The total equals the number of (middle edge, u', v') outcomes, i.e. the
// number of 3-paths plus three per triangle.
struct PathWeights {
  std::vector<std::uint64_t> per_edge;
  std::uint64_t total = 0;
};

PathWeights compute_path_weights(const Graph& g);

// Uniform 3-path sampling: pick a middle edge proportional to its
// multiplicity, then one uniform neighbor on each side. Every specific
// 3-path comes out with probability exactly 1/total; the two outer picks may
// coincide, yielding a 3-vertex triangle sample.
//
// estimate() classifies k independent samples and scales the per-motif
// success rates into unbiased induced-count estimates for motifs 2..6, plus
// the derived 3-star estimate.
class ThreePathSampler {
 public:
  explicit ThreePathSampler(const Graph& g);

  const PathWeights& weights() const { return weights_; }
  std::uint64_t stars() const { return stars_; }

  // One trial. Throws std::logic_error when the graph has no 3-paths.
  PathSample sample(RandomSource& rng) const;

  // k trials split across `workers` independent streams derived from
  // (seed, worker index); deterministic for fixed (seed, workers).
  Estimate estimate(std::uint64_t k, std::uint64_t seed, unsigned workers = 1) const;

 private:
  struct RawDraw {
    VertexId u, v, outer_u, outer_v;
  };
  RawDraw draw(RandomSource& rng) const;

  const Graph& graph_;
  PathWeights weights_;
  DiscreteDistribution dist_;
  std::uint64_t stars_ = 0;
};

// Induced motif class of the (at most 4) vertices of one draw; `none` for
// triangle outcomes.
MotifClass classify_draw(const Graph& g, VertexId u, VertexId v,
                         VertexId outer_u, VertexId outer_v);

// Worker partition shared by all samplers: trials are split as evenly as
// possible, worker w taking the w-th contiguous block.
std::vector<std::uint64_t> split_trials(std::uint64_t k, unsigned workers);

}  // namespace pathsample
