#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powerlambda/graph.hpp"
#include "powerlambda/power_graph.hpp"

namespace powerlambda {

using Label = long long;

/// Integer label per vertex, tagged with the separation it claims to meet.
struct Labelling {
  std::vector<Label> labels;
  int j = 2;
  int k = 1;

  Label span() const;
};

/// max - min; throws EmptyLabelling on an empty range.
Label span(std::span<const Label> labels);

struct Violation {
  Vertex first = 0;
  Vertex second = 0;
  int distance = 0;
  Label gap = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every pair (u < v) at distance 1 with |f(u) - f(v)| < j or at distance 2
/// with |f(u) - f(v)| < k. Throws MissingLabel if labels.size() differs from
/// the vertex count.
std::vector<Violation> validate_labelling(const Graph& graph, std::span<const Label> labels,
                                          int j = 2, int k = 1);

/// Vertices at distance exactly 2 from each vertex.
std::vector<VertexSet> distance_two_sets(const Graph& graph);

/// Ordering of G \ {1} whose consecutive elements are non-adjacent in the
/// power graph.
struct HamPath {
  std::vector<Element> vertices;
  Element excluded = 0;

  friend bool operator==(const HamPath&, const HamPath&) = default;
};

/// Throws BadPath unless `path` covers G \ {identity} once and every
/// consecutive pair is non-adjacent in the power graph.
void check_ham_path(const PowerGraph& power, const HamPath& path);

/// f(1) = -2, f(x_i) = i. The result has span |G|.
Labelling path_to_labelling(const PowerGraph& power, const HamPath& path);

/// Recovers the Hamiltonian path behind a span-|G| L(2,1)-labelling: moves
/// the identity label below the minimum when it sits at the maximum,
/// translates so the identity reads -2, and lists the other elements by label.
HamPath labelling_to_path(const PowerGraph& power, std::span<const Label> labels);

}  // namespace powerlambda
