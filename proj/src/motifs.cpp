#include "pathsample/motifs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pathsample/checked.hpp"

namespace pathsample {

namespace {

// Edge bits incident to each of the 4 vertices.
constexpr std::array<unsigned, 4> kIncident = {
    pair_bit(0, 1) | pair_bit(0, 2) | pair_bit(0, 3),
    pair_bit(0, 1) | pair_bit(1, 2) | pair_bit(1, 3),
    pair_bit(0, 2) | pair_bit(1, 2) | pair_bit(2, 3),
    pair_bit(0, 3) | pair_bit(1, 3) | pair_bit(2, 3),
};

constexpr MotifClass classify_mask_slow(unsigned mask) {
  const int edges = std::popcount(mask);
  if (edges < 3) return MotifClass::none;
  int max_deg = 0, min_deg = 3;
  for (unsigned inc : kIncident) {
    const int d = std::popcount(mask & inc);
    max_deg = d > max_deg ? d : max_deg;
    min_deg = d < min_deg ? d : min_deg;
  }
  switch (edges) {
    case 3:
      // Degree multiset is a complete invariant here: (3,1,1,1) star,
      // (2,2,1,1) path, (2,2,2,0) triangle plus isolated vertex.
      if (max_deg == 3) return MotifClass::three_star;
      if (min_deg == 0) return MotifClass::none;
      return MotifClass::three_path;
    case 4:
      return max_deg == 3 ? MotifClass::tailed_triangle : MotifClass::four_cycle;
    case 5:
      return MotifClass::chordal_four_cycle;
    default:
      return MotifClass::four_clique;
  }
}

constexpr std::array<MotifClass, 64> make_mask_table() {
  std::array<MotifClass, 64> t{};
  for (unsigned m = 0; m < 64; ++m) t[m] = classify_mask_slow(m);
  return t;
}

constexpr std::array<MotifClass, 64> kMaskTable = make_mask_table();

}  // namespace

MotifClass classify_mask(unsigned mask) { return kMaskTable[mask & 63u]; }

MotifClass classify_four(const Graph& g, std::span<const VertexId> s) {
  std::array<VertexId, 4> v{};
  int n = 0;
  for (VertexId x : s) {
    bool seen = false;
    for (int i = 0; i < n; ++i) seen |= (v[i] == x);
    if (!seen && n < 4) v[n++] = x;
  }
  if (n < 4) return MotifClass::none;
  unsigned mask = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.has_edge(v[i], v[j])) mask |= pair_bit(i, j);
  return classify_mask(mask);
}

MotifCounts induced_to_vanilla(const MotifCounts& induced) {
  MotifCounts out;
  out.basis = CountBasis::vanilla;
  for (int i = 0; i < 6; ++i) {
    std::uint64_t acc = 0;
    for (int j = i; j < 6; ++j)
      acc = checked_add(acc, checked_mul(kMotifContainment[i][j], induced.values[j]));
    out.values[i] = acc;
  }
  return out;
}

MotifCounts vanilla_to_induced(const MotifCounts& vanilla) {
  MotifCounts out;
  out.basis = CountBasis::induced;
  for (int i = 5; i >= 0; --i) {
    std::uint64_t rhs = vanilla.values[i];
    for (int j = i + 1; j < 6; ++j) {
      const std::uint64_t term = checked_mul(kMotifContainment[i][j], out.values[j]);
      if (term > rhs)
        throw std::domain_error("vanilla counts are not realizable (negative induced count)");
      rhs -= term;
    }
    out.values[i] = rhs;
  }
  return out;
}

std::uint64_t star_count(const Graph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    total = checked_add(total, choose3(g.degree(v)));
  return total;
}

}  // namespace pathsample
