#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerlambda/labelling.hpp"

namespace powerlambda {

enum class EvidenceKind {
  /// |G| <= 2 or a single vertex: nothing to rule out below span 0 / 2.
  Degenerate,
  /// Any labelling of a power graph spans at least |G|.
  PowerGraphBound,
  /// A non-identity vertex adjacent to every other vertex forbids span |G|.
  UniversalNonIdentityVertex,
  /// The power graph is complete, so labels are pairwise >= 2 apart.
  CompleteGraphBound,
  /// A finished exhaustive search found no labelling of span `refuted_span`.
  ExhaustiveSearch,
};

std::string_view to_string(EvidenceKind kind);

struct LowerBoundEvidence {
  EvidenceKind kind = EvidenceKind::Degenerate;
  /// The bound itself: no valid labelling has span below this.
  Label bound = 0;
  std::optional<Vertex> vertex;
  std::optional<Label> refuted_span;
};

enum class Method { Constructive, ExactSearch };

std::string_view to_string(Method method);

/// A Hamiltonian path construction and the joints where level segments meet.
struct Construction {
  std::string kind;
  std::vector<Element> path;
  std::vector<std::pair<Element, Element>> joints;
};

struct LambdaCertificate {
  Label lambda = 0;
  Labelling witness;
  LowerBoundEvidence evidence;
  Method method = Method::ExactSearch;
  std::optional<Construction> construction;
  std::uint64_t search_nodes = 0;
};

}  // namespace powerlambda
