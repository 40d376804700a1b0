#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "powerlambda/constructive.hpp"
#include "powerlambda/search.hpp"
#include "support.hpp"

using namespace powerlambda;

namespace {

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// A random graph with a universal vertex, hence of diameter at most two.
Graph random_coned_graph(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  for (Vertex u = 1; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("lambda is invariant under relabelling the vertices") {
  std::mt19937 rng(3);
  for (const auto& [name, group] : support::small_groups()) {
    CAPTURE(name);
    const auto graph = build_power_graph(group).graph;
    const Label lambda = exact_lambda(graph).lambda;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Vertex> permutation(graph.vertex_count());
      std::iota(permutation.begin(), permutation.end(), Vertex{0});
      std::shuffle(permutation.begin(), permutation.end(), rng);
      CHECK(exact_lambda(relabel(graph, permutation)).lambda == lambda);
    }
  }
}

TEST_CASE("complete graphs need 2(n - 1)") {
  for (std::size_t n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(exact_lambda(complete_graph(n)).lambda == 2 * (static_cast<Label>(n) - 1));
  }
}

TEST_CASE("exact lambda matches Held-Karp on random diameter-two graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const Graph g = random_coned_graph(n, 0.15 + 0.1 * (trial % 8), rng);
    CAPTURE(g.edges());
    const auto certificate = exact_lambda(g);
    CHECK(certificate.lambda == oracle::lambda_diameter_two(oracle::matrix_of(g)));
    CHECK(validate_labelling(g, certificate.witness.labels).empty());
  }
}

TEST_CASE("span |G| iff the reduced complement has a Hamiltonian path") {
  for (const auto& [name, group] : support::small_groups()) {
    if (group.order() < 3) continue;
    CAPTURE(name);
    const auto power = build_power_graph(group);
    const auto rest = delete_vertex(power.graph, group.identity());
    const bool path = find_hamiltonian_path(complement(rest.graph)).found();
    const Label lambda = oracle::lambda_diameter_two(oracle::power_graph(group));
    CHECK(lambda >= static_cast<Label>(group.order()));
    CHECK(path == (lambda == static_cast<Label>(group.order())));
  }
}

TEST_CASE("constructive witnesses always validate") {
  for (const auto& [name, group] : support::small_groups()) {
    if (!prime_power_base(group.order())) continue;
    CAPTURE(name);
    const auto power = build_power_graph(group);
    const auto certificate = lambda_p_group(group);
    CHECK(validate_labelling(power.graph, certificate.witness.labels).empty());
    CHECK(certificate.lambda == oracle::lambda_diameter_two(oracle::power_graph(group)));
  }
}
