#include "pathsample/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace pathsample {

namespace {

bool parse_label(const char*& p, const char* end, std::int64_t& out) {
  while (p != end && (*p == ' ' || *p == '\t')) ++p;
  if (p == end) return false;
  auto [next, ec] = std::from_chars(p, end, out);
  if (ec != std::errc{}) return false;
  if (next != end && *next != ' ' && *next != '\t') return false;
  p = next;
  return true;
}

}  // namespace

Graph Graph::load(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::uint64_t self_loops = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end || *p == '#') continue;

    std::int64_t a, b;
    if (!parse_label(p, end, a) || !parse_label(p, end, b))
      throw parse_error("expected two integer labels", lineno);
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) throw parse_error("trailing tokens after edge", lineno);

    if (a == b) {
      ++self_loops;
      continue;
    }
    raw.emplace_back(a, b);
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading edge list");
  return build(std::move(raw), self_loops);
}

Graph Graph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load(in);
}

Graph Graph::from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& raw) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  edges.reserve(raw.size());
  std::uint64_t self_loops = 0;
  for (const auto& [a, b] : raw) {
    if (a == b)
      ++self_loops;
    else
      edges.emplace_back(a, b);
  }
  return build(std::move(edges), self_loops);
}

Graph Graph::build(std::vector<std::pair<std::int64_t, std::int64_t>>&& raw,
                   std::uint64_t self_loops) {
  Graph g;
  g.stats_.self_loops_dropped = self_loops;

  // Dense ids by sorted original label, so the result is independent of
  // input line order.
  g.labels_.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    g.labels_.push_back(a);
    g.labels_.push_back(b);
  }
  std::sort(g.labels_.begin(), g.labels_.end());
  g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()), g.labels_.end());
  g.labels_.shrink_to_fit();
  if (g.labels_.size() > std::numeric_limits<std::uint32_t>::max())
    throw std::overflow_error("vertex count exceeds 32-bit id range");
  g.n_ = (std::uint32_t)g.labels_.size();

  const auto id_of = [&](std::int64_t label) {
    return (VertexId)(std::lower_bound(g.labels_.begin(), g.labels_.end(), label) -
                      g.labels_.begin());
  };

  g.edges_.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    VertexId u = id_of(a), v = id_of(b);
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
  }
  raw.clear();
  raw.shrink_to_fit();
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto last = std::unique(g.edges_.begin(), g.edges_.end());
  g.stats_.duplicate_edges_merged = (std::uint64_t)(g.edges_.end() - last);
  g.edges_.erase(last, g.edges_.end());

  // CSR adjacency.
  g.offsets_.assign((std::size_t)g.n_ + 1, 0);
  for (const auto& [u, v] : g.edges_) {
    ++g.offsets_[(std::size_t)u + 1];
    ++g.offsets_[(std::size_t)v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.adj_.resize(g.offsets_.back());
  {
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : g.edges_) {
      g.adj_[cursor[u]++] = v;
      g.adj_[cursor[v]++] = u;
    }
  }

  const auto key_less = [&g](VertexId a, VertexId b) { return g.order_less(a, b); };
  for (VertexId v = 0; v < g.n_; ++v) {
    auto* first = g.adj_.data() + g.offsets_[v];
    auto* last_p = g.adj_.data() + g.offsets_[v + 1];
    std::sort(first, last_p, key_less);
  }

  // Canonical edge orientation: smaller endpoint under the vertex order first.
  for (auto& [u, v] : g.edges_)
    if (g.order_less(v, u)) std::swap(u, v);

  return g;
}

std::uint32_t Graph::suffix_count(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  const auto it = std::upper_bound(
      nb.begin(), nb.end(), v,
      [this](VertexId a, VertexId b) { return order_less(a, b); });
  return (std::uint32_t)(nb.end() - it);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(
      nb.begin(), nb.end(), v,
      [this](VertexId a, VertexId b) { return order_less(a, b); });
}

void Graph::write_edge_list(std::ostream& out) const {
  for (const auto& [u, v] : edges_)
    out << labels_[u] << ' ' << labels_[v] << '\n';
}

}  // namespace pathsample
