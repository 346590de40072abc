#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddtree {

using Vertex = std::size_t;

// Edge between 0-based vertices, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// 1-based vertex pair as it appears in input files and on the command line.
using LabeledEdge = std::pair<long long, long long>;

/// Simple undirected graph on vertices 0..n-1 (labeled 1..n at the I/O
/// boundary). Immutable once built; the edge list is sorted and the
/// adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  friend Graph new_graph(std::size_t n, std::span<const LabeledEdge> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Validates and canonicalizes a labeled edge list. Throws Error with
/// LoopEdge, DuplicateEdge or VertexOutOfRange.
Graph new_graph(std::size_t n, std::span<const LabeledEdge> edges);

inline Graph new_graph(std::size_t n, std::initializer_list<LabeledEdge> edges) {
  return new_graph(n, std::span<const LabeledEdge>(edges.begin(), edges.size()));
}

/// Reads the "n m" header followed by m "u v" lines. '#' lines and blank
/// lines are skipped; CRLF is accepted.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Inverse of parse_edge_list.
std::string serialize_edge_list(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace oddtree
