#include "powerlambda/labelling.hpp"

#include <algorithm>
#include <cstdlib>

#include "powerlambda/error.hpp"

namespace powerlambda {

Label span(std::span<const Label> labels) {
  if (labels.empty()) throw Error(ErrorCode::EmptyLabelling, "no labels");
  const auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  return *hi - *lo;
}

Label Labelling::span() const { return powerlambda::span(labels); }

std::vector<VertexSet> distance_two_sets(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<VertexSet> result(n, graph.empty_set());
  for (Vertex v = 0; v < n; ++v) {
    const auto& nbrs = graph.neighbours(v);
    for (auto u = nbrs.find_first(); u != VertexSet::npos; u = nbrs.find_next(u)) {
      result[v] |= graph.neighbours(static_cast<Vertex>(u));
    }
    result[v] -= nbrs;
    result[v].reset(v);
  }
  return result;
}

std::vector<Violation> validate_labelling(const Graph& graph, std::span<const Label> labels,
                                          int j, int k) {
  const std::size_t n = graph.vertex_count();
  if (labels.size() != n) {
    throw Error(ErrorCode::MissingLabel, "expected " + std::to_string(n) + " labels, got " +
                                             std::to_string(labels.size()));
  }
  const auto two = distance_two_sets(graph);
  std::vector<Violation> violations;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Label gap = std::llabs(labels[u] - labels[v]);
      if (graph.adjacent(u, v)) {
        if (gap < j) violations.push_back({u, v, 1, gap});
      } else if (two[u].test(v)) {
        if (gap < k) violations.push_back({u, v, 2, gap});
      }
    }
  }
  return violations;
}

void check_ham_path(const PowerGraph& power, const HamPath& path) {
  const auto& group = power.group;
  if (path.excluded != group.identity()) {
    throw Error(ErrorCode::BadPath, "path must exclude the identity");
  }
  if (path.vertices.size() + 1 != group.order()) {
    throw Error(ErrorCode::BadPath, "path has " + std::to_string(path.vertices.size()) +
                                        " vertices, expected " +
                                        std::to_string(group.order() - 1));
  }
  std::vector<char> seen(group.order());
  seen[group.identity()] = 1;
  for (Element v : path.vertices) {
    if (v >= group.order() || seen[v]) {
      throw Error(ErrorCode::BadPath, "element " + std::to_string(v) +
                                          " is out of range, repeated or the identity");
    }
    seen[v] = 1;
  }
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    if (power.graph.adjacent(path.vertices[i - 1], path.vertices[i])) {
      throw Error(ErrorCode::BadPath, "consecutive elements " +
                                          std::to_string(path.vertices[i - 1]) + " and " +
                                          std::to_string(path.vertices[i]) +
                                          " are adjacent in the power graph");
    }
  }
}

Labelling path_to_labelling(const PowerGraph& power, const HamPath& path) {
  check_ham_path(power, path);
  Labelling result;
  result.labels.assign(power.group.order(), 0);
  result.labels[power.group.identity()] = -2;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    result.labels[path.vertices[i]] = static_cast<Label>(i);
  }
  return result;
}

HamPath labelling_to_path(const PowerGraph& power, std::span<const Label> labels) {
  const std::size_t n = power.group.order();
  if (!validate_labelling(power.graph, labels).empty()) {
    throw Error(ErrorCode::NotValid, "labelling is not a valid L(2,1)-labelling");
  }
  const Label s = span(labels);
  if (s != static_cast<Label>(n)) {
    throw Error(ErrorCode::SpanTooLarge,
                "span " + std::to_string(s) + " differs from |G| = " + std::to_string(n));
  }
  const Element identity = power.group.identity();
  std::vector<Label> moved(labels.begin(), labels.end());
  const Label lo = *std::min_element(moved.begin(), moved.end());
  const Label hi = *std::max_element(moved.begin(), moved.end());
  if (moved[identity] == hi && n > 1) {
    Label others_min = hi;
    for (Element g = 0; g < n; ++g)
      if (g != identity) others_min = std::min(others_min, moved[g]);
    moved[identity] = others_min - 2;
  } else if (moved[identity] != lo) {
    throw Error(ErrorCode::NotValid, "identity label is neither the minimum nor the maximum");
  }
  const Label shift = -2 - moved[identity];
  for (auto& label : moved) label += shift;

  std::vector<Element> by_label(n, identity);
  std::vector<char> hit(n);
  for (Element g = 0; g < n; ++g) {
    if (g == identity) continue;
    const Label label = moved[g];
    if (label < 0 || label >= static_cast<Label>(n - 1) || hit[label]) {
      throw Error(ErrorCode::NotValid, "labels do not fill {-2, 0, 1, ..., |G| - 2}");
    }
    hit[label] = 1;
    by_label[label] = g;
  }
  HamPath path{std::vector<Element>(by_label.begin(), by_label.begin() + (n - 1)), identity};
  check_ham_path(power, path);
  return path;
}

}  // namespace powerlambda
