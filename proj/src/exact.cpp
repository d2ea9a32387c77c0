#include "pathsample/exact.hpp"

#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pathsample/centered_sampler.hpp"
#include "pathsample/checked.hpp"
#include "pathsample/three_path_sampler.hpp"

namespace pathsample {

namespace {

struct EdgeScanTotals {
  std::uint64_t triangles = 0;
  std::uint64_t tailed = 0;  // sum over triangles of (d_a + d_b + d_c - 6)
  std::array<std::uint64_t, 3> cycle_tally{};  // by chord count 0/1/2
  std::uint64_t candidates = 0;
};

// Scan one edge range: ordered triangle enumeration plus pruned candidate
// enumeration. Triangle (a,b,c) with a < b < c in the vertex order is found
// exactly once, at edge (a,b).
EdgeScanTotals scan_edges(const Graph& g, const CenteredWeights& cw,
                          std::size_t begin, std::size_t end) {
  EdgeScanTotals t;
  const auto& edges = g.edges();
  for (std::size_t e = begin; e < end; ++e) {
    const auto [u, v] = edges[e];  // u < v in the vertex order
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    const std::uint32_t lu = cw.suffix_u[e];
    const std::uint32_t lv = cw.suffix_v[e];

    // Common neighbors above v: merge the two ordered suffixes above v.
    {
      auto iu = nu.end() - lu;
      auto iv = nv.end() - g.suffix_count(v, v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu == *iv) {
          t.triangles = checked_add(t.triangles, 1);
          const std::uint64_t dsum =
              (std::uint64_t)g.degree(u) + g.degree(v) + g.degree(*iu);
          t.tailed = checked_add(t.tailed, dsum - 6);
          ++iu;
          ++iv;
        } else if (g.order_less(*iu, *iv)) {
          ++iu;
        } else {
          ++iv;
        }
      }
    }

    // Pruned candidates: u' above v on u's side, v' above u on v's side.
    t.candidates = checked_add(t.candidates, cw.per_edge[e]);
    const auto su = nu.subspan(nu.size() - lu);
    const auto sv = nv.subspan(nv.size() - lv);
    for (VertexId a : su) {
      for (VertexId b : sv) {
        if (a == b || !g.has_edge(a, b)) continue;
        const int chords = (int)g.has_edge(a, v) + (int)g.has_edge(u, b);
        ++t.cycle_tally[chords];
      }
    }
  }
  return t;
}

MotifCounts assemble_induced(std::uint64_t stars, std::uint64_t w_total,
                             const EdgeScanTotals& t) {
  if (checked_mul(3, t.triangles) > w_total)
    throw std::domain_error("count inconsistency: 3T exceeds the 3-path weight total");
  const std::uint64_t n2 = w_total - 3 * t.triangles;
  const std::uint64_t n3 = t.tailed;

  if (t.cycle_tally[2] % 3 != 0)
    throw std::domain_error("count inconsistency: clique tally not divisible by 3");
  MotifCounts c;
  c.basis = CountBasis::induced;
  c[MotifId::four_cycle] = t.cycle_tally[0];
  c[MotifId::chordal_four_cycle] = t.cycle_tally[1];
  c[MotifId::four_clique] = t.cycle_tally[2] / 3;

  const auto sub = [](std::uint64_t a, std::uint64_t b) {
    if (b > a) throw std::domain_error("count inconsistency: negative induced count");
    return a - b;
  };
  c[MotifId::tailed_triangle] =
      sub(n3, checked_add(checked_mul(4, c[MotifId::chordal_four_cycle]),
                          checked_mul(12, c[MotifId::four_clique])));
  std::uint64_t chordful = checked_mul(2, c[MotifId::tailed_triangle]);
  chordful = checked_add(chordful, checked_mul(4, c[MotifId::four_cycle]));
  chordful = checked_add(chordful, checked_mul(6, c[MotifId::chordal_four_cycle]));
  chordful = checked_add(chordful, checked_mul(12, c[MotifId::four_clique]));
  c[MotifId::three_path] = sub(n2, chordful);
  c[MotifId::three_star] =
      sub(stars, checked_add(c[MotifId::tailed_triangle],
                             checked_add(checked_mul(2, c[MotifId::chordal_four_cycle]),
                                         checked_mul(4, c[MotifId::four_clique]))));
  return c;
}

}  // namespace

ExactCounts fast_exact_counts(const Graph& g, unsigned workers, ExactStats* stats) {
  if (workers == 0) throw std::invalid_argument("worker count must be >= 1");
  const CenteredWeights cw = compute_centered_weights(g);
  const std::uint64_t w_total = compute_path_weights(g).total;
  const std::uint64_t stars = star_count(g);

  const std::size_t m = g.num_edges();
  EdgeScanTotals total;
  if (workers == 1 || m < 2 * workers) {
    total = scan_edges(g, cw, 0, m);
  } else {
    std::vector<EdgeScanTotals> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = m * w / workers;
      const std::size_t end = m * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { parts[w] = scan_edges(g, cw, begin, end); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : parts) {
      total.triangles = checked_add(total.triangles, p.triangles);
      total.tailed = checked_add(total.tailed, p.tailed);
      for (int i = 0; i < 3; ++i)
        total.cycle_tally[i] = checked_add(total.cycle_tally[i], p.cycle_tally[i]);
      total.candidates = checked_add(total.candidates, p.candidates);
    }
  }
  if (stats) {
    stats->candidate_tuples = total.candidates;
    stats->three_path_weight = w_total;
    stats->centered_weight = cw.total;
  }

  ExactCounts out;
  out.triangles = total.triangles;
  out.induced = assemble_induced(stars, w_total, total);
  out.vanilla = induced_to_vanilla(out.induced);
  return out;
}

ExactCounts brute_force_counts(const Graph& g, std::uint32_t max_vertices) {
  const std::uint32_t n = g.num_vertices();
  if (n > max_vertices)
    throw std::invalid_argument(
        "brute-force counting refused: " + std::to_string(n) +
        " vertices exceeds the cap of " + std::to_string(max_vertices));

  // Dense adjacency bytes make the quartic loop cheap.
  std::vector<std::uint8_t> adj((std::size_t)n * n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[(std::size_t)u * n + v] = 1;
    adj[(std::size_t)v * n + u] = 1;
  }
  const auto at = [&](std::uint32_t a, std::uint32_t b) {
    return adj[(std::size_t)a * n + b];
  };

  ExactCounts out;
  out.induced.basis = CountBasis::induced;
  for (std::uint32_t i = 0; i + 2 < n; ++i)
    for (std::uint32_t j = i + 1; j + 1 < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k)
        if (at(i, j) && at(i, k) && at(j, k)) ++out.triangles;

  for (std::uint32_t i = 0; i + 3 < n; ++i) {
    for (std::uint32_t j = i + 1; j + 2 < n; ++j) {
      const unsigned mij = at(i, j) ? pair_bit(0, 1) : 0;
      for (std::uint32_t k = j + 1; k + 1 < n; ++k) {
        unsigned mijk = mij;
        if (at(i, k)) mijk |= pair_bit(0, 2);
        if (at(j, k)) mijk |= pair_bit(1, 2);
        for (std::uint32_t l = k + 1; l < n; ++l) {
          unsigned mask = mijk;
          if (at(i, l)) mask |= pair_bit(0, 3);
          if (at(j, l)) mask |= pair_bit(1, 3);
          if (at(k, l)) mask |= pair_bit(2, 3);
          const MotifClass c = classify_mask(mask);
          if (c != MotifClass::none) ++out.induced.values[(int)c - 1];
        }
      }
    }
  }
  out.vanilla = induced_to_vanilla(out.induced);
  return out;
}

}  // namespace pathsample
