#pragma once

#include <cstdint>

#include "pathsample/graph.hpp"
#include "pathsample/motifs.hpp"

namespace pathsample {

// Exact motif counts in both bases, plus the triangle count.
struct ExactCounts {
  MotifCounts induced;
  MotifCounts vanilla;
  std::uint64_t triangles = 0;
};

// Diagnostics from the fast counter; candidate_tuples equals the centered
// weight total (every pruned candidate is visited exactly once).
struct ExactStats {
  std::uint64_t candidate_tuples = 0;
  std::uint64_t three_path_weight = 0;
  std::uint64_t centered_weight = 0;
};

// Ground-truth oracle: classify every 4-subset. Quartic in n, so refuses
// graphs above max_vertices.
ExactCounts brute_force_counts(const Graph& g, std::uint32_t max_vertices = 200);

// Fast exact counter built on ordered enumeration:
//   - triangles found once each at their order-minimal edge,
//   - star/path/tailed-triangle totals from degree and triangle identities,
//   - the three cycle-based motifs by enumerating every pruned (middle edge,
//     u', v') candidate whose closing edge exists and classifying its
//     chords (the 4-clique tally lands exactly three times per clique).
// The remaining entries follow from the containment matrix.
ExactCounts fast_exact_counts(const Graph& g, unsigned workers = 1,
                              ExactStats* stats = nullptr);

}  // namespace pathsample
