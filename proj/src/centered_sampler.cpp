#include "pathsample/centered_sampler.hpp"

#include <stdexcept>
#include <thread>

#include "pathsample/checked.hpp"
#include "pathsample/three_path_sampler.hpp"

namespace pathsample {

namespace {
constexpr std::uint64_t kCenteredStreamBase = 1ull << 32;
}

CenteredWeights compute_centered_weights(const Graph& g) {
  CenteredWeights w;
  const std::size_t m = g.num_edges();
  w.per_edge.reserve(m);
  w.suffix_u.reserve(m);
  w.suffix_v.reserve(m);
  for (const auto& [u, v] : g.edges()) {
    const std::uint32_t lu = g.suffix_count(u, v);
    const std::uint32_t lv = g.suffix_count(v, u);
    w.suffix_u.push_back(lu);
    w.suffix_v.push_back(lv);
    const std::uint64_t lambda = checked_mul(lu, lv);
    w.per_edge.push_back(lambda);
    w.total = checked_add(w.total, lambda);
  }
  return w;
}

bool is_centered(const Graph& g, const PathSample& p) {
  if (p.vertex_count != 4) return false;
  const VertexId t = p.vertices[0], u = p.vertices[1];
  const VertexId v = p.vertices[2], w = p.vertices[3];
  return g.order_less(v, t) && g.order_less(u, w) && g.has_edge(t, w);
}

CenteredSampler::CenteredSampler(const Graph& g)
    : graph_(g), weights_(compute_centered_weights(g)), dist_(weights_.per_edge) {}

CenteredSampler::RawDraw CenteredSampler::draw(RandomSource& rng) const {
  const std::size_t e = dist_.draw(rng);
  const auto [u, v] = graph_.edges()[e];
  // Adjacency is sorted by the vertex order, so the eligible neighbors are
  // exactly the last suffix_u (resp. suffix_v) entries; both suffixes are
  // nonempty whenever the edge has positive weight.
  const auto nu = graph_.neighbors(u);
  const std::uint32_t lu = weights_.suffix_u[e];
  const VertexId outer_u = nu[nu.size() - lu + rng.bounded(lu)];
  const auto nv = graph_.neighbors(v);
  const std::uint32_t lv = weights_.suffix_v[e];
  const VertexId outer_v = nv[nv.size() - lv + rng.bounded(lv)];
  return {u, v, outer_u, outer_v};
}

PathSample CenteredSampler::sample(RandomSource& rng) const {
  if (weights_.total == 0)
    throw std::logic_error("graph has no centered 3-path candidates");
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

Estimate CenteredSampler::estimate(std::uint64_t k, std::uint64_t seed,
                                   unsigned workers) const {
  if (k == 0) throw std::invalid_argument("sample count must be >= 1");
  Estimate est;
  est.kind = SamplerKind::centered;
  est.samples = k;
  est.weight_total = weights_.total;

  if (weights_.total > 0) {
    const auto parts = split_trials(k, workers);
    std::vector<std::array<std::uint64_t, 3>> local(workers);
    auto body = [this, &parts, &local, seed](unsigned w) {
      RandomSource rng(seed, kCenteredStreamBase + w);
      std::array<std::uint64_t, 3> c{};
      for (std::uint64_t t = 0; t < parts[w]; ++t) {
        const RawDraw d = draw(rng);
        // The two order conditions hold by construction; a sample is
        // centered iff the closing edge exists. The closed 4-cycle's chord
        // count then separates the three cycle-based motifs.
        if (d.outer_u == d.outer_v) continue;
        if (!graph_.has_edge(d.outer_u, d.outer_v)) continue;
        const int chords = (int)graph_.has_edge(d.outer_u, d.v) +
                           (int)graph_.has_edge(d.u, d.outer_v);
        ++c[chords];
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
      for (int i = 0; i < 3; ++i) est.counts[3 + i] += c[i];
  }

  for (int i = 0; i < 3; ++i) {
    est.scales[3 + i] = (double)weights_.total / (double)kCenteredPathsPerMotif[i];
    est.values[3 + i] =
        ((double)est.counts[3 + i] / (double)k) * est.scales[3 + i];
    est.available[3 + i] = true;
  }
  return est;
}

}  // namespace pathsample
