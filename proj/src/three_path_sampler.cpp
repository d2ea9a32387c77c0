#include "pathsample/three_path_sampler.hpp"

#include <stdexcept>
#include <thread>

#include "pathsample/checked.hpp"

namespace pathsample {

namespace {
// Stream index layout: high bit of the 32-bit tag distinguishes the two
// samplers so a shared seed never reuses a stream.
constexpr std::uint64_t kBasicStreamBase = 0;
}  // namespace

PathWeights compute_path_weights(const Graph& g) {
  PathWeights w;
  w.per_edge.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t du = g.degree(u), dv = g.degree(v);
    const std::uint64_t tau = checked_mul(du - 1, dv - 1);
    w.per_edge.push_back(tau);
    w.total = checked_add(w.total, tau);
  }
  return w;
}

std::vector<std::uint64_t> split_trials(std::uint64_t k, unsigned workers) {
  if (workers == 0) throw std::invalid_argument("worker count must be >= 1");
  std::vector<std::uint64_t> parts(workers, k / workers);
  for (std::uint64_t r = 0; r < k % workers; ++r) ++parts[r];
  return parts;
}

MotifClass classify_draw(const Graph& g, VertexId u, VertexId v,
                         VertexId outer_u, VertexId outer_v) {
  if (outer_u == outer_v) return MotifClass::none;  // triangle, 3 vertices
  // Vertex order (outer_u, u, v, outer_v); the three path edges are known.
  unsigned mask = pair_bit(0, 1) | pair_bit(1, 2) | pair_bit(2, 3);
  if (g.has_edge(outer_u, v)) mask |= pair_bit(0, 2);
  if (g.has_edge(outer_u, outer_v)) mask |= pair_bit(0, 3);
  if (g.has_edge(u, outer_v)) mask |= pair_bit(1, 3);
  return classify_mask(mask);
}

ThreePathSampler::ThreePathSampler(const Graph& g)
    : graph_(g),
      weights_(compute_path_weights(g)),
      dist_(weights_.per_edge),
      stars_(star_count(g)) {}

ThreePathSampler::RawDraw ThreePathSampler::draw(RandomSource& rng) const {
  const auto [u, v] = graph_.edges()[dist_.draw(rng)];
  // Both endpoints have degree >= 2 whenever the edge has positive weight,
  // so the rejection loops terminate with expected < 2 draws.
  const auto nu = graph_.neighbors(u);
  VertexId outer_u;
  do {
    outer_u = nu[rng.bounded(nu.size())];
  } while (outer_u == v);
  const auto nv = graph_.neighbors(v);
  VertexId outer_v;
  do {
    outer_v = nv[rng.bounded(nv.size())];
  } while (outer_v == u);
  return {u, v, outer_u, outer_v};
}

PathSample ThreePathSampler::sample(RandomSource& rng) const {
  if (weights_.total == 0)
    throw std::logic_error("graph has no 3-paths to sample");
  const RawDraw d = draw(rng);
  PathSample s;
  s.edges = {Edge{d.outer_u, d.u}, Edge{d.u, d.v}, Edge{d.v, d.outer_v}};
  if (d.outer_u == d.outer_v) {
    s.vertices = {d.outer_u, d.u, d.v, 0};
    s.vertex_count = 3;
    s.motif = MotifClass::none;
  } else {
    s.vertices = {d.outer_u, d.u, d.v, d.outer_v};
    s.vertex_count = 4;
    s.motif = classify_draw(graph_, d.u, d.v, d.outer_u, d.outer_v);
  }
  return s;
}

Estimate ThreePathSampler::estimate(std::uint64_t k, std::uint64_t seed,
                                    unsigned workers) const {
  if (k == 0) throw std::invalid_argument("sample count must be >= 1");
  Estimate est;
  est.kind = SamplerKind::basic;
  est.samples = k;
  est.weight_total = weights_.total;
  est.stars = stars_;

  if (weights_.total > 0) {
    const auto parts = split_trials(k, workers);
    std::vector<std::array<std::uint64_t, 6>> local(workers);
    auto body = [this, &parts, &local, seed](unsigned w) {
      RandomSource rng(seed, kBasicStreamBase + w);
      std::array<std::uint64_t, 6> c{};
      for (std::uint64_t t = 0; t < parts[w]; ++t) {
        const RawDraw d = draw(rng);
        const MotifClass m = classify_draw(graph_, d.u, d.v, d.outer_u, d.outer_v);
        if (m != MotifClass::none) ++c[(int)m - 1];
      }
      local[w] = c;
    };
    if (workers == 1) {
      body(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
      for (auto& t : pool) t.join();
    }
    for (const auto& c : local)
      for (int i = 0; i < 6; ++i) est.counts[i] += c[i];
  }

  // Motifs 2..6 scale by total/(3-paths per motif); triangle and
  // disconnected outcomes consume trials without incrementing any count,
  // which is what makes the count_i/k rates unbiased.
  for (int i = 1; i < 6; ++i) {
    est.scales[i] = (double)weights_.total / (double)kThreePathsPerMotif[i];
    est.values[i] = ((double)est.counts[i] / (double)k) * est.scales[i];
    est.available[i] = true;
  }
  est.values[0] = (double)stars_ - est.values[2] - 2.0 * est.values[4] -
                  4.0 * est.values[5];
  est.available[0] = true;
  return est;
}

}  // namespace pathsample
