#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "pathsample/graph.hpp"

namespace pathsample {

// The six connected 4-vertex motifs, in canonical numbering.
enum class MotifId : int {
  three_star = 1,
  three_path = 2,
  tailed_triangle = 3,
  four_cycle = 4,
  chordal_four_cycle = 5,
  four_clique = 6,
};

// Classification of a vertex subset: one of the six motifs, or `none` when
// the subset has fewer than 4 distinct vertices or induces a disconnected
// subgraph.
enum class MotifClass : int {
  none = 0,
  three_star = 1,
  three_path = 2,
  tailed_triangle = 3,
  four_cycle = 4,
  chordal_four_cycle = 5,
  four_clique = 6,
};

constexpr std::array<MotifId, 6> kAllMotifs = {
    MotifId::three_star,      MotifId::three_path,
    MotifId::tailed_triangle, MotifId::four_cycle,
    MotifId::chordal_four_cycle, MotifId::four_clique,
};

constexpr int motif_index(MotifId m) { return (int)m - 1; }

constexpr std::string_view motif_name(MotifId m) {
  constexpr std::array<std::string_view, 6> names = {
      "3-star", "3-path", "tailed-triangle",
      "4-cycle", "chordal-4-cycle", "4-clique"};
  return names[motif_index(m)];
}

enum class CountBasis { induced, vanilla };

// Six motif counts plus the basis they are expressed in. "induced" counts
// 4-vertex subsets whose induced subgraph is exactly the motif; "vanilla"
// counts edge-subset occurrences.
struct MotifCounts {
  std::array<std::uint64_t, 6> values{};
  CountBasis basis = CountBasis::induced;

  std::uint64_t& operator[](MotifId m) { return values[motif_index(m)]; }
  std::uint64_t operator[](MotifId m) const { return values[motif_index(m)]; }
  bool operator==(const MotifCounts&) const = default;
};

// containment[i][j] = number of distinct copies of motif i+1 inside motif
// j+1. Upper triangular with unit diagonal; converts induced counts to
// vanilla counts by multiplication.
inline constexpr std::array<std::array<std::uint64_t, 6>, 6> kMotifContainment = {{
    {1, 0, 1, 0, 2, 4},
    {0, 1, 2, 4, 6, 12},
    {0, 0, 1, 0, 4, 12},
    {0, 0, 0, 1, 1, 3},
    {0, 0, 0, 0, 1, 6},
    {0, 0, 0, 0, 0, 1},
}};

// 3-paths contained in motif i (row 2 of the containment matrix); the scale
// divisors of the plain 3-path estimator.
inline constexpr std::array<std::uint64_t, 6> kThreePathsPerMotif =
    kMotifContainment[1];

// Classify the graph on 4 labeled vertices encoded as a 6-bit edge mask.
// Bit order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
MotifClass classify_mask(unsigned mask);

constexpr unsigned pair_bit(int i, int j) {
  // i < j in 0..3
  constexpr int bit[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return 1u << bit[i][j];
}

// Classify the induced subgraph on a set of at most 4 vertices. Duplicates
// collapse; fewer than 4 distinct vertices classify as `none`.
MotifClass classify_four(const Graph& g, std::span<const VertexId> s);

// N = A * C in exact integer arithmetic. Throws std::overflow_error past
// the 64-bit range.
MotifCounts induced_to_vanilla(const MotifCounts& induced);

// Unique C with A * C = N, by back-substitution. Throws std::domain_error
// when an intermediate goes negative (the vector is not realizable).
MotifCounts vanilla_to_induced(const MotifCounts& vanilla);

// Vanilla 3-star count: sum over vertices of C(d_v, 3).
std::uint64_t star_count(const Graph& g);

}  // namespace pathsample
