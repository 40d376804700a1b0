#include "powerlambda/constructive.hpp"

#include <algorithm>

#include "powerlambda/error.hpp"
#include "powerlambda/search.hpp"

namespace powerlambda {

namespace {

std::string element_pair(Element a, Element b) {
  return std::to_string(a) + " and " + std::to_string(b);
}

void check_family_parameter(unsigned e, unsigned min_e, const char* family) {
  if (e < min_e) {
    throw Error(ErrorCode::ParameterTooSmall, std::string(family) + " needs e >= " +
                                                  std::to_string(min_e) + ", got " +
                                                  std::to_string(e));
  }
  if (e > 30) throw Error(ErrorCode::TooLarge, std::string(family) + " exponent too large");
}

/// Exponent e with |G| = 2^(e+1), checking that x has order 2^e.
unsigned metacyclic_exponent(const FiniteGroup& group, Element x) {
  const auto n = group.order();
  if (n < 8 || (n & (n - 1)) != 0) {
    throw Error(ErrorCode::InvalidParameter, "group order is not 2^(e+1) with e >= 2");
  }
  const unsigned e = exponent_of(n, 2) - 1;
  if (element_order(group, x) != (std::uint64_t{1} << e)) {
    throw Error(ErrorCode::InvalidParameter, "x does not have order 2^e");
  }
  return e;
}

ConstructedPath finish(const FiniteGroup& group, ConstructedPath built) {
  check_ham_path(build_power_graph(group), built.path);
  return built;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  while (exp--) result *= base;
  return result;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Trivial: return "trivial";
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Quaternion: return "quaternion";
    case Family::Semidihedral: return "semidihedral";
    case Family::Thick: return "thick";
  }
  return "unknown";
}

PathSegment build_interleaved_path(const Graph& power_graph, const OrderedClassFamily& family) {
  const auto& classes = family.classes;
  if (classes.size() < 2) {
    throw Error(ErrorCode::SingleClass, "need at least two classes, got " +
                                            std::to_string(classes.size()));
  }
  const std::size_t size = classes.front().size();
  for (const auto& cls : classes) {
    if (cls.size() != size || size == 0) {
      throw Error(ErrorCode::UnequalSizes, "classes must share one non-zero size");
    }
  }
  std::vector<std::vector<Element>> sorted = classes;
  for (auto& cls : sorted) std::sort(cls.begin(), cls.end());

  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (!power_graph.adjacent(sorted[a][i], sorted[a][j])) {
          throw Error(ErrorCode::InvalidParameter,
                      "class " + std::to_string(a) + " is not a clique of the power graph");
        }
      }
      for (std::size_t b = a + 1; b < sorted.size(); ++b) {
        for (Element w : sorted[b]) {
          if (power_graph.adjacent(sorted[a][i], w)) {
            throw Error(ErrorCode::CrossAdjacency,
                        "classes " + std::to_string(a) + " and " + std::to_string(b) +
                            " share the edge " + element_pair(sorted[a][i], w));
          }
        }
      }
    }
  }

  PathSegment segment;
  segment.vertices.reserve(size * sorted.size());
  for (std::size_t i = 0; i < size; ++i)
    for (const auto& cls : sorted) segment.vertices.push_back(cls[i]);
  return segment;
}

std::vector<DescentLevel> order_classes_for_descent(const ClassPartition& partition,
                                                    const Graph& power_graph) {
  const std::uint64_t exponent = partition.by_order.rbegin()->first;
  const auto p = prime_power_base(exponent);
  if (!p) {
    throw Error(ErrorCode::NotPGroup, "exponent " + std::to_string(exponent) +
                                          " is not a prime power");
  }
  for (const auto& [order, ids] : partition.by_order) {
    if (order != 1 && prime_power_base(order) != p) {
      throw Error(ErrorCode::NotPGroup, "element order " + std::to_string(order) +
                                            " is not a power of " + std::to_string(*p));
    }
  }
  const unsigned e = exponent_of(exponent, *p);

  std::vector<DescentLevel> levels;
  for (unsigned i = e; i >= 1; --i) {
    const auto order = ipow(*p, i);
    const auto it = partition.by_order.find(order);
    if (it == partition.by_order.end() || it->second.size() < 2) {
      throw Error(ErrorCode::ThinLevel, "only " +
                                            std::to_string(partition.class_number(order)) +
                                            " class(es) of elements of order " +
                                            std::to_string(order));
    }
    DescentLevel level{i, it->second};
    if (!levels.empty()) {
      const std::size_t last = levels.back().classes.back();
      const auto pick = std::find_if(level.classes.begin(), level.classes.end(), [&](std::size_t c) {
        return !classes_adjacent(partition, last, c, power_graph);
      });
      if (pick == level.classes.end()) {
        throw Error(ErrorCode::ConstructionFailed,
                    "every class of order " + std::to_string(order) +
                        " is adjacent to the last class of the level above");
      }
      std::rotate(level.classes.begin(), pick, pick + 1);
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

ConstructedPath construct_path_general(const FiniteGroup& group) {
  const PowerGraph power = build_power_graph(group);
  const ClassPartition partition = cyclic_classes(group);
  if (group.order() < 2) throw Error(ErrorCode::ThinLevel, "trivial group has no levels");
  const auto levels = order_classes_for_descent(partition, power.graph);

  ConstructedPath built;
  built.kind = "descent";
  built.path.excluded = group.identity();
  for (const auto& level : levels) {
    OrderedClassFamily family;
    for (std::size_t c : level.classes) family.classes.push_back(partition.classes[c].members);
    const PathSegment segment = build_interleaved_path(power.graph, family);
    if (!built.path.vertices.empty()) {
      const Element from = built.path.vertices.back();
      const Element to = segment.initial();
      if (power.graph.adjacent(from, to)) {
        throw Error(ErrorCode::ConstructionFailed,
                    "joint " + element_pair(from, to) + " is an edge of the power graph");
      }
      built.joints.emplace_back(from, to);
    }
    built.path.vertices.insert(built.path.vertices.end(), segment.vertices.begin(),
                               segment.vertices.end());
  }
  return finish(group, std::move(built));
}

ConstructedPath semidihedral_path(const FiniteGroup& group, Element x, Element y) {
  const unsigned e = metacyclic_exponent(group, x);
  if (e < 3) throw Error(ErrorCode::ParameterTooSmall, "semidihedral needs e >= 3");
  const std::uint64_t rotations = std::uint64_t{1} << e;
  const std::uint64_t half = rotations / 2;
  const std::uint64_t quarter = rotations / 4;
  auto rot = [&](std::uint64_t k) { return group.power(x, k); };
  auto out = [&](std::uint64_t k) { return group.mul(group.power(x, k), y); };

  ConstructedPath built;
  built.kind = "semidihedral";
  built.path.excluded = group.identity();
  auto& path = built.path.vertices;
  path = {y, rot(half), out(2), rot(quarter), out(4), rot(3 * quarter)};

  std::vector<Element> outside;  // x^k y, k not in {0, 2, 4}
  for (std::uint64_t k = 0; k < rotations; ++k)
    if (k != 0 && k != 2 && k != 4) outside.push_back(out(k));
  std::vector<Element> inner;  // rotations of order >= 8
  for (std::uint64_t k = 1; k < rotations; ++k)
    if (k != half && k != quarter && k != 3 * quarter) inner.push_back(rot(k));

  built.joints.emplace_back(path.back(), outside.front());
  for (std::size_t i = 0; i < outside.size(); ++i) {
    path.push_back(outside[i]);
    if (i < inner.size()) path.push_back(inner[i]);
  }
  return finish(group, std::move(built));
}

ConstructedPath construct_path_semidihedral(unsigned e) {
  check_family_parameter(e, 3, "semidihedral");
  const std::size_t rotations = std::size_t{1} << e;
  const FiniteGroup group = make_semidihedral(2 * rotations);
  return semidihedral_path(group, 1, static_cast<Element>(rotations));
}

ConstructedPath dihedral_path(const FiniteGroup& group, Element x, Element y) {
  const unsigned e = metacyclic_exponent(group, x);
  const std::uint64_t rotations = std::uint64_t{1} << e;
  ConstructedPath built;
  built.kind = "dihedral";
  built.path.excluded = group.identity();
  for (std::uint64_t k = 0; k < rotations; ++k) {
    built.path.vertices.push_back(group.mul(group.power(x, k), y));
    if (k + 1 < rotations) built.path.vertices.push_back(group.power(x, k + 1));
  }
  return finish(group, std::move(built));
}

ConstructedPath construct_path_dihedral(unsigned e) {
  check_family_parameter(e, 2, "dihedral");
  const std::size_t rotations = std::size_t{1} << e;
  const FiniteGroup group = make_dihedral(2 * rotations);
  return dihedral_path(group, 1, static_cast<Element>(rotations));
}

Labelling quaternion_labelling(const FiniteGroup& group, Element involution,
                               const Limits& limits) {
  const PowerGraph power = build_power_graph(group);
  const std::size_t n = group.order();
  if (n < 8) throw Error(ErrorCode::ParameterTooSmall, "quaternion group needs order >= 8");
  std::vector<Element> rest;
  for (Element g = 0; g < n; ++g)
    if (g != group.identity() && g != involution) rest.push_back(g);

  const InducedSubgraph restricted = induced_subgraph(power.graph, rest);
  const auto found = find_hamiltonian_path(complement(restricted.graph), SearchOptions::path(limits));
  Labelling result;
  if (found.found()) {
    result.labels.assign(n, 0);
    result.labels[group.identity()] = -2;
    result.labels[involution] = static_cast<Label>(n) - 1;
    const auto& order = *found.path;
    for (std::size_t i = 0; i < order.size(); ++i) {
      result.labels[restricted.original[order[i]]] = static_cast<Label>(i);
    }
  } else if (n <= limits.max_exact_vertices) {
    result = exact_lambda(power.graph, static_cast<Label>(n), SearchOptions::exact(limits)).witness;
  } else {
    throw Error(ErrorCode::ConstructionFailed,
                "no Hamiltonian path avoiding the central involution");
  }
  if (!validate_labelling(power.graph, result.labels).empty()) {
    throw Error(ErrorCode::ConstructionFailed, "quaternion labelling failed validation");
  }
  return result;
}

Labelling construct_labelling_quaternion(unsigned e, const Limits& limits) {
  check_family_parameter(e, 2, "quaternion");
  const std::size_t rotations = std::size_t{1} << e;
  const FiniteGroup group = make_quaternion(2 * rotations);
  return quaternion_labelling(group, static_cast<Element>(rotations / 2), limits);
}

std::optional<std::pair<Element, Element>> find_presentation(const FiniteGroup& group,
                                                             Family family) {
  const std::size_t n = group.order();
  if (n < 8 || (n & (n - 1)) != 0) return std::nullopt;
  const unsigned e = exponent_of(n, 2) - 1;
  const std::uint64_t rotations = std::uint64_t{1} << e;
  std::uint64_t twist = 0;
  bool quaternion = false;
  switch (family) {
    case Family::Dihedral: twist = rotations - 1; break;
    case Family::Quaternion: twist = rotations - 1; quaternion = true; break;
    case Family::Semidihedral:
      if (e < 3) return std::nullopt;
      twist = rotations / 2 - 1;
      break;
    default: return std::nullopt;
  }
  for (Element x = 0; x < n; ++x) {
    if (element_order(group, x) != rotations) continue;
    const auto inside = cyclic_subgroup(group, x);
    const Element square = quaternion ? group.power(x, rotations / 2) : group.identity();
    const Element conjugate = group.power(x, twist);
    for (Element y = 0; y < n; ++y) {
      if (std::binary_search(inside.begin(), inside.end(), y)) continue;
      if (group.mul(y, y) != square) continue;
      if (group.mul(group.mul(group.inverse(y), x), y) != conjugate) continue;
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

FamilyRecognition recognize_family(const FiniteGroup& group) {
  FamilyRecognition result;
  if (group.order() == 1) return result;
  const auto p = prime_power_base(group.order());
  if (!p) {
    throw Error(ErrorCode::NotPGroup,
                "order " + std::to_string(group.order()) + " is not a prime power");
  }
  const OrderTable orders = order_table(group);
  result.prime = *p;
  result.exponent_power = exponent_of(orders.exponent, *p);
  if (orders.exponent == group.order()) {
    result.family = Family::Cyclic;
    return result;
  }
  const ClassPartition partition = cyclic_classes(group);
  bool thin = false;
  for (unsigned i = 1; i <= result.exponent_power; ++i) {
    if (partition.class_number(ipow(*p, i)) < 2) thin = true;
  }
  if (!thin) {
    result.family = Family::Thick;
    return result;
  }
  const unsigned e = result.exponent_power;
  const std::uint64_t m2 = partition.class_number(2);
  std::optional<Family> candidate;
  if (*p == 2 && m2 == 1) {
    candidate = Family::Quaternion;
  } else if (*p == 2 && m2 == 1 + (std::uint64_t{1} << e)) {
    candidate = Family::Dihedral;
  } else if (*p == 2 && e >= 3 && m2 == 1 + (std::uint64_t{1} << (e - 1)) &&
             partition.class_number(4) == 1 + (std::uint64_t{1} << (e - 2))) {
    candidate = Family::Semidihedral;
  }
  const auto generators = candidate ? find_presentation(group, *candidate) : std::nullopt;
  if (!generators) {
    throw Error(ErrorCode::ConstructionFailed,
                "non-cyclic p-group with a thin level matches no dihedral, quaternion or "
                "semidihedral presentation");
  }
  result.family = *candidate;
  result.x = generators->first;
  result.y = generators->second;
  return result;
}

LambdaCertificate lambda_p_group(const FiniteGroup& group, const Limits& limits) {
  const std::size_t n = group.order();
  const auto order = static_cast<Label>(n);
  LambdaCertificate certificate;
  certificate.method = Method::Constructive;
  if (n == 1) {
    certificate.witness.labels = {0};
    certificate.evidence = {EvidenceKind::Degenerate, 0, std::nullopt, std::nullopt};
    certificate.construction = Construction{"trivial", {}, {}};
    return certificate;
  }

  const FamilyRecognition family = recognize_family(group);
  const PowerGraph power = build_power_graph(group);

  auto from_path = [&](const ConstructedPath& built) {
    certificate.lambda = order;
    certificate.witness = path_to_labelling(power, built.path);
    certificate.evidence = power_graph_lower_bound(power).evidence;
    certificate.construction = Construction{built.kind, built.path.vertices, built.joints};
  };

  switch (family.family) {
    case Family::Trivial: break;
    case Family::Cyclic: {
      certificate.lambda = 2 * (order - 1);
      certificate.witness.labels.resize(n);
      for (Element g = 0; g < n; ++g) certificate.witness.labels[g] = 2 * static_cast<Label>(g);
      certificate.evidence = {EvidenceKind::CompleteGraphBound, certificate.lambda, std::nullopt,
                              std::nullopt};
      certificate.construction = Construction{"complete-graph", {}, {}};
      break;
    }
    case Family::Quaternion: {
      const Element z = group.power(*family.x, (std::uint64_t{1} << family.exponent_power) / 2);
      certificate.lambda = order + 1;
      certificate.witness = quaternion_labelling(group, z, limits);
      certificate.evidence = power_graph_lower_bound(power).evidence;
      // Recover the path through G \ {1, z}; empty if the search fallback ran.
      std::vector<Element> path(n - 2, group.identity());
      std::size_t placed = 0;
      for (Element g = 0; g < n; ++g) {
        const Label label = certificate.witness.labels[g];
        if (g != group.identity() && g != z && label >= 0 && label < order - 2) {
          path[label] = g;
          ++placed;
        }
      }
      if (placed != n - 2) path.clear();
      certificate.construction = Construction{"quaternion", path, {}};
      break;
    }
    case Family::Dihedral: from_path(dihedral_path(group, *family.x, *family.y)); break;
    case Family::Semidihedral: from_path(semidihedral_path(group, *family.x, *family.y)); break;
    case Family::Thick: from_path(construct_path_general(group)); break;
  }

  const auto violations = validate_labelling(power.graph, certificate.witness.labels);
  if (!violations.empty() || certificate.witness.span() != certificate.lambda ||
      certificate.evidence.bound != certificate.lambda) {
    throw Error(ErrorCode::ConstructionFailed,
                "witness does not certify lambda = " + std::to_string(certificate.lambda));
  }
  return certificate;
}

}  // namespace powerlambda
