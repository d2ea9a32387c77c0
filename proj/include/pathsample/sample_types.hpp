#pragma once

#include <array>
#include <cstdint>

#include "pathsample/motifs.hpp"

namespace pathsample {

enum class SamplerKind { basic, centered };

// Outcome of one sampling trial: the three drawn edges, the distinct
// endpoints, and the induced motif class of that vertex set. When the two
// outer draws coincide the sample covers only 3 vertices (a triangle) and
// classifies as `none`.
struct PathSample {
  std::array<Edge, 3> edges;          // (u', u), (u, v), (v, v')
  std::array<VertexId, 4> vertices;   // path order u', u, v, v'
  int vertex_count = 0;
  MotifClass motif = MotifClass::none;
};

// Point estimates of induced motif counts from k sampling trials, with the
// raw per-motif success counts and scales needed for error bars.
// value_i = (count_i / k) * scale_i for every motif the run estimates
// directly; the basic sampler additionally derives the 3-star estimate from
// the star total.
struct Estimate {
  SamplerKind kind = SamplerKind::basic;
  std::uint64_t samples = 0;          // k
  std::uint64_t weight_total = 0;     // normalizer of the sampled distribution
  std::uint64_t stars = 0;            // vanilla 3-star count (basic runs)
  std::array<std::uint64_t, 6> counts{};
  std::array<double, 6> scales{};
  std::array<double, 6> values{};
  std::array<bool, 6> available{};

  bool has(MotifId m) const { return available[motif_index(m)]; }
  double value(MotifId m) const { return values[motif_index(m)]; }
  std::uint64_t count(MotifId m) const { return counts[motif_index(m)]; }
  double scale(MotifId m) const { return scales[motif_index(m)]; }
};

}  // namespace pathsample
