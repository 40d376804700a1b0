#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "powerlambda/certificate.hpp"
#include "powerlambda/config.hpp"
#include "powerlambda/graph.hpp"
#include "powerlambda/power_graph.hpp"

namespace powerlambda {

struct SearchOptions {
  std::size_t max_vertices = 32;
  std::chrono::milliseconds budget{60'000};

  static SearchOptions exact(const Limits& limits) {
    return {limits.max_exact_vertices, limits.search_budget};
  }
  static SearchOptions path(const Limits& limits) {
    return {limits.max_path_vertices, limits.search_budget};
  }
};

struct HamiltonianSearchResult {
  /// Empty when the search finished without finding a path (proof of absence).
  std::optional<std::vector<Vertex>> path;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return path.has_value(); }
};

/// Deterministic depth-first search for a Hamiltonian path in `graph`.
///
/// Vertices with identical neighbourhoods are visited in index order, the
/// walk prefers vertices with few unvisited neighbours, and a branch is cut
/// as soon as the unvisited part disconnects, strands a vertex, or forces
/// more than one terminal vertex. Throws TooLarge above
/// `options.max_vertices` and TimeoutError when the budget runs out.
HamiltonianSearchResult find_hamiltonian_path(
    const Graph& graph, const SearchOptions& options = {.max_vertices = 512});

/// True when some labelling of `graph` with labels in {0..span} satisfies the
/// L(2,1) conditions; fills `witness` on success.
bool l21_labelling_exists(const Graph& graph, Label span, std::vector<Label>* witness,
                          const SearchOptions& options = {}, std::uint64_t* nodes = nullptr);

/// Exact lambda number by trying spans start_span, start_span + 1, ... The
/// certificate carries the witness of the first feasible span and the
/// exhaustive refutation of the span below it.
LambdaCertificate exact_lambda(const Graph& graph, Label start_span = 0,
                               const SearchOptions& options = {});

struct LowerBound {
  Label value = 0;
  LowerBoundEvidence evidence;
};

/// |G|, raised to |G| + 1 when a non-identity element is adjacent to all
/// others and |G| >= 3. Returns 0 for the trivial group.
LowerBound power_graph_lower_bound(const PowerGraph& power);

}  // namespace powerlambda
