#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace powerlambda {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }

  /// Loops are rejected with BadVertex, as are out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
  const VertexSet& neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }
  std::size_t edge_count() const;
  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet full_set() const { return ~empty_set(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
};

/// A subgraph together with the original index of each of its vertices.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

Graph complement(const Graph& graph);
/// Removes `v` and renumbers the remaining vertices in ascending order.
InducedSubgraph delete_vertex(const Graph& graph, Vertex v);
/// Keeps `vertices` (in the given order); throws BadVertex on repeats or
/// out-of-range indices.
InducedSubgraph induced_subgraph(const Graph& graph, const std::vector<Vertex>& vertices);
/// Vertex v of `graph` becomes vertex permutation[v] of the result.
Graph relabel(const Graph& graph, const std::vector<Vertex>& permutation);
/// Vertices reachable from `start` through vertices of `allowed`.
VertexSet component_of(const Graph& graph, Vertex start, const VertexSet& allowed);

/// `n`, then one `u v` line per edge, sorted lexicographically with u < v.
void write_edge_list(std::ostream& out, const Graph& graph);
/// Undirected DOT; vertices are labelled with `names` when supplied.
void write_dot(std::ostream& out, const Graph& graph,
               const std::vector<std::string>& names = {},
               const std::string& graph_name = "power_graph");

}  // namespace powerlambda
