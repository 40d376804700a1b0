#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerlambda/certificate.hpp"
#include "powerlambda/config.hpp"
#include "powerlambda/labelling.hpp"
#include "powerlambda/power_graph.hpp"

namespace powerlambda {

/// Equal-size vertex sets, each a clique of the power graph, with no edges
/// between different sets.
struct OrderedClassFamily {
  std::vector<std::vector<Element>> classes;
};

/// A path in the complement of the power graph.
struct PathSegment {
  std::vector<Element> vertices;

  Element initial() const { return vertices.front(); }
  Element terminal() const { return vertices.back(); }
};

/// Column-major interleaving w11, w21, .., wr1, w12, .., wrN where class j is
/// {wj1 < wj2 < .. < wjN}. Throws SingleClass, UnequalSizes or
/// CrossAdjacency when the family is not admissible.
PathSegment build_interleaved_path(const Graph& power_graph, const OrderedClassFamily& family);

/// Classes of elements of order p^level, in path order.
struct DescentLevel {
  unsigned level = 0;
  std::vector<std::size_t> classes;  // indices into ClassPartition::classes
};

/// Orders the classes of each level p^e, .., p^1 so that the last class of
/// every level is non-adjacent to the first class of the level below.
/// Throws ThinLevel when some level has fewer than two classes.
std::vector<DescentLevel> order_classes_for_descent(const ClassPartition& partition,
                                                    const Graph& power_graph);

/// Hamiltonian path in (power graph minus identity)^c plus the pairs where
/// consecutive pieces were glued together.
struct ConstructedPath {
  std::string kind;
  HamPath path;
  std::vector<std::pair<Element, Element>> joints;
};

/// Level-by-level descent for p-groups with at least two classes at every
/// element order p^i, i >= 1.
ConstructedPath construct_path_general(const FiniteGroup& group);

/// Path for the semidihedral group of order 2^(e+1), e >= 3.
ConstructedPath construct_path_semidihedral(unsigned e);
/// Same construction inside any group given elements x of order 2^e and y
/// satisfying the semidihedral relations.
ConstructedPath semidihedral_path(const FiniteGroup& group, Element x, Element y);

/// Path for the dihedral group of order 2^(e+1), e >= 2: outside involutions
/// alternating with the non-identity rotations.
ConstructedPath construct_path_dihedral(unsigned e);
ConstructedPath dihedral_path(const FiniteGroup& group, Element x, Element y);

/// Span |G| + 1 labelling of the generalized quaternion group of order
/// 2^(e+1), e >= 2.
Labelling construct_labelling_quaternion(unsigned e, const Limits& limits = {});
/// f(1) = -2, f(z) = |G| - 1 for the central involution z, and the path
/// labels 0, 1, .. on a Hamiltonian path through the remaining elements.
Labelling quaternion_labelling(const FiniteGroup& group, Element involution,
                               const Limits& limits = {});

enum class Family { Trivial, Cyclic, Dihedral, Quaternion, Semidihedral, Thick };

std::string_view to_string(Family family);

/// Structural recognition of a p-group: class numbers decide whether some
/// level is thin, and a thin non-cyclic 2-group must then match the
/// dihedral, quaternion or semidihedral presentation on explicit x, y.
struct FamilyRecognition {
  Family family = Family::Trivial;
  std::uint64_t prime = 0;
  /// exponent = prime^exponent_power
  unsigned exponent_power = 0;
  std::optional<Element> x;
  std::optional<Element> y;
};

FamilyRecognition recognize_family(const FiniteGroup& group);

/// Elements (x, y) realizing the family's presentation, if any.
std::optional<std::pair<Element, Element>> find_presentation(const FiniteGroup& group,
                                                             Family family);

/// Lambda number of the power graph of a p-group with witness and
/// lower-bound evidence. Dispatches on the recognized family; the only search
/// involved is the Hamiltonian path through the quaternion remainder.
LambdaCertificate lambda_p_group(const FiniteGroup& group, const Limits& limits = {});

}  // namespace powerlambda
