#pragma once

#include <cstdint>
#include <vector>

#include "pathsample/discrete.hpp"
#include "pathsample/graph.hpp"
#include "pathsample/random.hpp"
#include "pathsample/sample_types.hpp"

namespace pathsample {

// Pruned 3-path candidate counts. For edge (u, v), suffix_u = |{x in adj(u) :
// v < x}| and suffix_v = |{x in adj(v) : u < x}| under the vertex order; the
// per-edge weight is their product and `total` is its graph-wide sum.
// total <= the plain 3-path total on every graph: pruning never adds paths.
struct CenteredWeights {
  std::vector<std::uint64_t> per_edge;
  std::vector<std::uint32_t> suffix_u;
  std::vector<std::uint32_t> suffix_v;
  std::uint64_t total = 0;
};

CenteredWeights compute_centered_weights(const Graph& g);

// A 3-path t-u-v-w (middle edge (u,v)) is centered when v < t and u < w in
// the vertex order and the closing edge (t,w) exists; centered 3-paths exist
// only inside 4-cycles. Requires a 4-vertex path sample.
bool is_centered(const Graph& g, const PathSample& p);

// Low-variance estimation of the cycle-based motifs (4-cycle,
// chordal-4-cycle, 4-clique). Draws a middle edge proportional to its pruned
// candidate count, then uniform neighbors from each ordered suffix; every
// centered 3-path comes out with probability exactly 1/total. Non-centered
// and triangle outcomes consume trials without counting.
class CenteredSampler {
 public:
  explicit CenteredSampler(const Graph& g);

  const CenteredWeights& weights() const { return weights_; }

  // One trial. Throws std::logic_error when no candidates exist (total 0).
  PathSample sample(RandomSource& rng) const;

  // Estimates for motifs 4..6, scaled by total / (centered 3-paths per
  // motif), which is 1 for the two cycles and 3 for the clique.
  Estimate estimate(std::uint64_t k, std::uint64_t seed, unsigned workers = 1) const;

 private:
  struct RawDraw {
    VertexId u, v, outer_u, outer_v;
  };
  RawDraw draw(RandomSource& rng) const;

  const Graph& graph_;
  CenteredWeights weights_;
  DiscreteDistribution dist_;
};

// Centered 3-paths contained in motifs 4, 5, 6.
inline constexpr std::array<std::uint64_t, 3> kCenteredPathsPerMotif = {1, 1, 3};

}  // namespace pathsample
