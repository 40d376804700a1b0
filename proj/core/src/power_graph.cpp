#include "powerlambda/power_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "powerlambda/error.hpp"

namespace powerlambda {

PowerGraph build_power_graph(const FiniteGroup& group) {
  Graph graph(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    for (Element x = group.mul(g, g); x != g; x = group.mul(x, g)) {
      if (!graph.adjacent(g, x)) graph.add_edge(g, x);
    }
  }
  return PowerGraph{group, std::move(graph)};
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t ClassPartition::class_number(std::uint64_t n) const {
  const auto it = class_numbers.find(n);
  return it == class_numbers.end() ? 0 : it->second;
}

ClassPartition cyclic_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assigned(n, kUnassigned);
  std::vector<CyclicClass> classes;
  for (Element g = 0; g < n; ++g) {
    if (assigned[g] != kUnassigned) continue;
    CyclicClass cls;
    cls.order = element_order(group, g);
    cls.representative = g;
    Element x = g;
    for (std::uint64_t k = 1; k <= cls.order; ++k, x = group.mul(x, g)) {
      if (std::gcd(k, cls.order) == 1) {
        cls.members.push_back(x);
        assigned[x] = classes.size();
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }

  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(classes[a].order, classes[a].representative) <
           std::tie(classes[b].order, classes[b].representative);
  });

  ClassPartition partition;
  partition.class_of.resize(n);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    CyclicClass& cls = classes[perm[i]];
    for (Element m : cls.members) partition.class_of[m] = i;
    partition.by_order[cls.order].push_back(i);
    ++partition.class_numbers[cls.order];
    partition.classes.push_back(std::move(cls));
  }
  return partition;
}

bool classes_adjacent(const ClassPartition& partition, std::size_t first, std::size_t second,
                      const Graph& graph) {
  if (first >= partition.classes.size() || second >= partition.classes.size()) {
    throw Error(ErrorCode::InvalidParameter, "class index out of range");
  }
  if (first == second) {
    throw Error(ErrorCode::SameClass, "class " + std::to_string(first) + " given twice");
  }
  const auto& a = partition.classes[first];
  const auto& b = partition.classes[second];
  const bool adjacent = graph.adjacent(a.representative, b.representative);
#ifndef NDEBUG
  for (Element u : a.members)
    for (Element v : b.members) assert(graph.adjacent(u, v) == adjacent);
#endif
  return adjacent;
}

LowerHookResult check_lower_hook(const FiniteGroup& group) {
  LowerHookResult result;
  result.p_group = prime_power_base(group.order()).has_value();
  const PowerGraph power = build_power_graph(group);
  const ClassPartition partition = cyclic_classes(group);
  const std::size_t count = partition.classes.size();

  std::vector<std::vector<char>> adjacent(count, std::vector<char>(count));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      adjacent[a][b] = adjacent[b][a] = classes_adjacent(partition, a, b, power.graph);

  for (std::size_t u = 0; u < count; ++u) {
    const auto top = partition.classes[u].order;
    std::vector<std::size_t> below;
    for (std::size_t v = 0; v < count; ++v)
      if (v != u && adjacent[u][v] && partition.classes[v].order <= top) below.push_back(v);
    for (std::size_t i = 0; i < below.size(); ++i) {
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        const std::size_t v1 = below[i];
        const std::size_t v2 = below[j];
        const bool same_order = partition.classes[v1].order == partition.classes[v2].order;
        if (!adjacent[v1][v2] || same_order) {
          result.counterexample = LowerHookTriple{u, v1, v2};
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace powerlambda
