#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "powerlambda/graph.hpp"
#include "powerlambda/group.hpp"

namespace powerlambda {

/// Power graph of a group: distinct a, b are adjacent iff one lies in the
/// cyclic subgroup generated by the other. Vertex indices are element indices.
struct PowerGraph {
  FiniteGroup group;
  Graph graph;
};

PowerGraph build_power_graph(const FiniteGroup& group);

std::uint64_t euler_phi(std::uint64_t n);

/// Elements generating one and the same cyclic subgroup.
struct CyclicClass {
  std::uint64_t order = 1;
  std::vector<Element> members;  // ascending
  Element representative = 0;    // smallest member
};

/// Classes sorted by (order, representative).
struct ClassPartition {
  std::vector<CyclicClass> classes;
  std::map<std::uint64_t, std::vector<std::size_t>> by_order;
  /// order n -> number of classes of elements of order n, for realized n.
  std::map<std::uint64_t, std::uint64_t> class_numbers;
  /// element -> index into `classes`
  std::vector<std::size_t> class_of;

  /// Class number for order n; 0 when no element has order n.
  std::uint64_t class_number(std::uint64_t n) const;
};

ClassPartition cyclic_classes(const FiniteGroup& group);

/// Adjacency between two distinct classes, decided by a single cross pair.
/// Throws SameClass when `first == second`.
bool classes_adjacent(const ClassPartition& partition, std::size_t first, std::size_t second,
                      const Graph& graph);

struct LowerHookTriple {
  std::size_t upper = 0;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct LowerHookResult {
  bool p_group = false;
  std::optional<LowerHookTriple> counterexample;

  bool holds() const noexcept { return !counterexample.has_value(); }
};

/// Exhaustively checks, over all class triples (U, V1, V2) with
/// max(|v1|, |v2|) <= |u|, that U adjacent to distinct V1 and V2 forces V1
/// adjacent to V2 with |v1| != |v2|. Returns the first failing triple.
LowerHookResult check_lower_hook(const FiniteGroup& group);

}  // namespace powerlambda
