#include "powerlambda/graph.hpp"

#include <ostream>

#include "powerlambda/error.hpp"

namespace powerlambda {

Graph::Graph(std::size_t vertex_count)
    : adjacency_(vertex_count, VertexSet(vertex_count)) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::BadVertex, "edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") out of range");
  }
  if (u == v) throw Error(ErrorCode::BadVertex, "loop at " + std::to_string(u));
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != VertexSet::npos;
         v = adjacency_[u].find_next(v)) {
      result.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return result;
}

Graph complement(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  Graph result(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!graph.adjacent(u, v)) result.add_edge(u, v);
  return result;
}

InducedSubgraph induced_subgraph(const Graph& graph, const std::vector<Vertex>& vertices) {
  VertexSet seen = graph.empty_set();
  for (Vertex v : vertices) {
    if (v >= graph.vertex_count() || seen.test(v)) {
      throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) +
                                            " is out of range or repeated");
    }
    seen.set(v);
  }
  InducedSubgraph result{Graph(vertices.size()), vertices};
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex j = i + 1; j < vertices.size(); ++j)
      if (graph.adjacent(vertices[i], vertices[j])) result.graph.add_edge(i, j);
  return result;
}

InducedSubgraph delete_vertex(const Graph& graph, Vertex v) {
  if (v >= graph.vertex_count()) {
    throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Vertex> keep;
  keep.reserve(graph.vertex_count() - 1);
  for (Vertex u = 0; u < graph.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(graph, keep);
}

Graph relabel(const Graph& graph, const std::vector<Vertex>& permutation) {
  const std::size_t n = graph.vertex_count();
  if (permutation.size() != n) {
    throw Error(ErrorCode::BadVertex, "permutation size does not match the graph");
  }
  VertexSet image(n);
  for (Vertex p : permutation) {
    if (p >= n || image.test(p)) throw Error(ErrorCode::BadVertex, "not a permutation");
    image.set(p);
  }
  Graph result(n);
  for (const auto& [u, v] : graph.edges()) result.add_edge(permutation[u], permutation[v]);
  return result;
}

VertexSet component_of(const Graph& graph, Vertex start, const VertexSet& allowed) {
  VertexSet reached = graph.empty_set();
  VertexSet frontier = graph.empty_set();
  reached.set(start);
  frontier.set(start);
  while (frontier.any()) {
    VertexSet next = graph.empty_set();
    for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v)) {
      next |= graph.neighbours(static_cast<Vertex>(v));
    }
    next &= allowed;
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << graph.vertex_count() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

void write_dot(std::ostream& out, const Graph& graph, const std::vector<std::string>& names,
               const std::string& graph_name) {
  out << "graph " << graph_name << " {\n";
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    const std::string label = v < names.size() ? names[v] : std::to_string(v);
    out << "  " << v << " [label=" << dot_quote(label) << "];\n";
  }
  for (const auto& [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace powerlambda
