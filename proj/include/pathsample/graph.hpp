#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathsample {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Malformed edge-list input; carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadStats {
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicate_edges_merged = 0;
};

// Immutable undirected simple graph. Vertices are remapped to a dense
// 0..n-1 range (original labels kept for output); n is the number of
// distinct endpoint labels, so isolated vertices do not exist.
//
// Every adjacency list is strictly sorted by the vertex order key
// (degree, id), and stored edges are oriented so the smaller endpoint under
// that order comes first. This makes ordered-suffix queries and suffix
// sampling O(log d) lookups plus O(1) index draws.
class Graph {
 public:
  Graph() = default;

  // Plain-text edge list: one edge per line, two whitespace-separated
  // integer labels, '#'-prefixed comment lines ignored. Self-loops are
  // dropped and duplicate/reversed edges merged (counts in load_stats()).
  static Graph load(std::istream& in);
  static Graph load_file(const std::string& path);
  static Graph from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& raw);

  std::uint32_t num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return edges_.size(); }

  std::uint32_t degree(VertexId v) const {
    return (std::uint32_t)(offsets_[v + 1] - offsets_[v]);
  }

  // Neighbors of v, sorted ascending by order key.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // Each stored edge (u, v) satisfies order_less(u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  std::int64_t label(VertexId v) const { return labels_[v]; }
  const LoadStats& load_stats() const { return stats_; }

  // Strict total order: by degree, then by id.
  bool order_less(VertexId u, VertexId v) const {
    const std::uint32_t du = degree(u), dv = degree(v);
    return du != dv ? du < dv : u < v;
  }

  // |{x in adj(u) : v < x in the vertex order}|. v need not be adjacent to u.
  std::uint32_t suffix_count(VertexId u, VertexId v) const;

  bool has_edge(VertexId u, VertexId v) const;

  void write_edge_list(std::ostream& out) const;

 private:
  static Graph build(std::vector<std::pair<std::int64_t, std::int64_t>>&& raw,
                     std::uint64_t self_loops);

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> adj_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> labels_;
  LoadStats stats_;
};

}  // namespace pathsample
