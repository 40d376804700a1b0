#include "powerlambda/search.hpp"

#include <algorithm>
#include <map>

#include "powerlambda/error.hpp"

namespace powerlambda {

namespace {

constexpr auto kNoVertex = static_cast<Vertex>(-1);

struct BudgetExpired {};

class Budget {
 public:
  explicit Budget(std::chrono::milliseconds limit)
      : deadline_(std::chrono::steady_clock::now() + limit) {}

  void tick() {
    if ((++nodes_ & 0x3ffU) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExpired{};
    }
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

/// For every vertex, the previous member of its twin class (vertices whose
/// swap is a graph automorphism), or kNoVertex. Searches only accept a
/// vertex once its predecessor is placed.
std::vector<Vertex> twin_predecessors(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::map<VertexSet, std::vector<Vertex>> open;
  std::map<VertexSet, std::vector<Vertex>> closed;
  for (Vertex v = 0; v < n; ++v) {
    open[graph.neighbours(v)].push_back(v);
    VertexSet with_self = graph.neighbours(v);
    with_self.set(v);
    closed[with_self].push_back(v);
  }
  std::vector<Vertex> pred(n, kNoVertex);
  for (const auto* groups : {&open, &closed}) {
    for (const auto& [key, members] : *groups) {
      for (std::size_t i = 1; i < members.size(); ++i) pred[members[i]] = members[i - 1];
    }
  }
  return pred;
}

bool connected(const Graph& graph) {
  if (graph.vertex_count() == 0) return true;
  return component_of(graph, 0, graph.full_set()).all();
}

class PathSearch {
 public:
  PathSearch(const Graph& graph, Budget& budget)
      : graph_(graph), budget_(budget), pred_(twin_predecessors(graph)) {}

  std::optional<std::vector<Vertex>> run() {
    const std::size_t n = graph_.vertex_count();
    if (n == 0) return std::vector<Vertex>{};
    if (n == 1) return std::vector<Vertex>{0};
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
      const auto d = graph_.degree(v);
      if (d == 0) return std::nullopt;
      if (d == 1) leaves.push_back(v);
    }
    if (leaves.size() > 2 || !connected(graph_)) return std::nullopt;

    std::vector<Vertex> starts;
    if (!leaves.empty()) {
      starts.push_back(leaves.front());
    } else {
      for (Vertex v = 0; v < n; ++v)
        if (pred_[v] == kNoVertex) starts.push_back(v);
      std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
        return graph_.degree(a) < graph_.degree(b);
      });
    }
    for (Vertex start : starts) {
      VertexSet unvisited = graph_.full_set();
      unvisited.reset(start);
      path_.assign(1, start);
      if (extend(start, unvisited)) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex current, VertexSet& unvisited) {
    if (unvisited.none()) return true;
    budget_.tick();
    const VertexSet& reach = graph_.neighbours(current);
    if (!reach.intersects(unvisited)) return false;

    const std::size_t remaining = unvisited.count();
    std::size_t forced_ends = 0;
    std::vector<std::pair<std::size_t, Vertex>> candidates;
    for (auto u = unvisited.find_first(); u != VertexSet::npos; u = unvisited.find_next(u)) {
      const auto d = (graph_.neighbours(static_cast<Vertex>(u)) & unvisited).count();
      const bool next_to_current = reach.test(u);
      if (d == 0 && !(next_to_current && remaining == 1)) return false;
      if (d == 1 && !next_to_current && ++forced_ends > 1) return false;
      if (next_to_current) {
        const Vertex p = pred_[u];
        if (p == kNoVertex || !unvisited.test(p)) {
          candidates.emplace_back(d, static_cast<Vertex>(u));
        }
      }
    }
    if ((component_of(graph_, current, unvisited) & unvisited) != unvisited) return false;

    std::sort(candidates.begin(), candidates.end());
    for (const auto& [degree, v] : candidates) {
      unvisited.reset(v);
      path_.push_back(v);
      if (extend(v, unvisited)) return true;
      path_.pop_back();
      unvisited.set(v);
    }
    return false;
  }

  const Graph& graph_;
  Budget& budget_;
  std::vector<Vertex> pred_;
  std::vector<Vertex> path_;
};

/// Sweeps labels 0, 1, ..., span in order, deciding at each label which
/// vertices receive it. Label 0 is always used (translation).
class LabelSweep {
 public:
  LabelSweep(const Graph& graph, Label span, Budget& budget)
      : graph_(graph),
        span_(span),
        budget_(budget),
        pred_(twin_predecessors(graph)),
        labels_(graph.vertex_count(), 0) {
    const std::size_t n = graph.vertex_count();
    const auto two = distance_two_sets(graph);
    within_two_.reserve(n);
    diameter_two_ = true;
    for (Vertex v = 0; v < n; ++v) {
      VertexSet near = graph.neighbours(v) | two[v];
      near.set(v);
      if (!near.all()) diameter_two_ = false;
      within_two_.push_back(std::move(near));
    }
    if (diameter_two_) complement_ = complement(graph);
  }

  bool run() {
    remaining_ = graph_.full_set();
    if (remaining_.none()) return true;
    if (span_ < 0) return false;
    if (diameter_two_) return sweep_single(0, kNoVertex);
    return sweep_sets(0, graph_.empty_set());
  }

  const std::vector<Label>& labels() const { return labels_; }

 private:
  /// Lower bound on the number of paths needed to cover `set` in the
  /// complement: each component needs one, and one more per extra pair of
  /// degree-one vertices.
  std::size_t path_cover_bound(const VertexSet& set) const {
    VertexSet seen = graph_.empty_set();
    std::size_t paths = 0;
    for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) {
      if (seen.test(v)) continue;
      const VertexSet component = component_of(complement_, static_cast<Vertex>(v), set);
      seen |= component;
      const std::size_t size = component.count();
      if (size == 1) {
        ++paths;
        continue;
      }
      std::size_t ends = 0;
      for (auto u = component.find_first(); u != VertexSet::npos; u = component.find_next(u)) {
        if ((complement_.neighbours(static_cast<Vertex>(u)) & set).count() == 1) ++ends;
      }
      paths += std::max<std::size_t>(1, (ends + 1) / 2);
    }
    return paths;
  }

  bool placeable(Vertex v) const {
    const Vertex p = pred_[v];
    return p == kNoVertex || !remaining_.test(p);
  }

  /// Every pair is within distance two, so each label holds at most one
  /// vertex and consecutive labels need non-adjacent vertices.
  bool sweep_single(Label pos, Vertex previous) {
    if (remaining_.none()) return true;
    budget_.tick();
    const Label labels_left = span_ - pos + 1;
    if (labels_left <= 0) return false;
    const auto count = static_cast<Label>(remaining_.count());
    Label needed = count + static_cast<Label>(path_cover_bound(remaining_)) - 1;
    if (previous != kNoVertex && !complement_.neighbours(previous).intersects(remaining_)) {
      ++needed;
    }
    if (needed > labels_left) return false;

    const VertexSet pool =
        previous == kNoVertex ? remaining_ : (complement_.neighbours(previous) & remaining_);
    std::vector<std::pair<std::size_t, Vertex>> candidates;
    for (auto v = pool.find_first(); v != VertexSet::npos; v = pool.find_next(v)) {
      if (!placeable(static_cast<Vertex>(v))) continue;
      candidates.emplace_back((complement_.neighbours(static_cast<Vertex>(v)) & remaining_).count(),
                              static_cast<Vertex>(v));
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [degree, v] : candidates) {
      labels_[v] = pos;
      remaining_.reset(v);
      if (sweep_single(pos + 1, v)) return true;
      remaining_.set(v);
    }
    return previous != kNoVertex && sweep_single(pos + 1, kNoVertex);
  }

  /// General graphs: any set of vertices pairwise at distance >= 3 may share
  /// a label, and none of them may neighbour the previous label's set.
  bool sweep_sets(Label pos, const VertexSet& previous) {
    if (remaining_.none()) return true;
    budget_.tick();
    if (pos > span_) return false;
    VertexSet pool = remaining_;
    for (auto u = previous.find_first(); u != VertexSet::npos; u = previous.find_next(u)) {
      pool -= graph_.neighbours(static_cast<Vertex>(u));
    }
    std::vector<Vertex> candidates;
    for (auto v = pool.find_first(); v != VertexSet::npos; v = pool.find_next(v)) {
      candidates.push_back(static_cast<Vertex>(v));
    }
    VertexSet chosen = graph_.empty_set();
    VertexSet blocked = graph_.empty_set();
    return choose(pos, previous, candidates, 0, chosen, blocked);
  }

  bool choose(Label pos, const VertexSet& previous, const std::vector<Vertex>& candidates,
              std::size_t from, VertexSet& chosen, const VertexSet& blocked) {
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Vertex v = candidates[i];
      if (blocked.test(v) || !placeable(v)) continue;
      labels_[v] = pos;
      remaining_.reset(v);
      chosen.set(v);
      if (choose(pos, previous, candidates, i + 1, chosen, blocked | within_two_[v])) return true;
      chosen.reset(v);
      remaining_.set(v);
    }
    // Two empty labels in a row never help; label 0 is always used.
    if (chosen.none() && (pos == 0 || previous.none())) return false;
    const VertexSet here = chosen;
    return sweep_sets(pos + 1, here);
  }

  const Graph& graph_;
  Label span_;
  Budget& budget_;
  std::vector<Vertex> pred_;
  std::vector<VertexSet> within_two_;
  bool diameter_two_ = true;
  Graph complement_;
  VertexSet remaining_;
  std::vector<Label> labels_;
};

void check_size(const Graph& graph, const SearchOptions& options) {
  if (graph.vertex_count() > options.max_vertices) {
    throw Error(ErrorCode::TooLarge, std::to_string(graph.vertex_count()) +
                                         " vertices exceed the search cap of " +
                                         std::to_string(options.max_vertices));
  }
}

bool feasible(const Graph& graph, Label span, std::vector<Label>* witness, Budget& budget) {
  LabelSweep sweep(graph, span, budget);
  if (!sweep.run()) return false;
  if (witness) *witness = sweep.labels();
  return true;
}

}  // namespace

std::string_view to_string(EvidenceKind kind) {
  switch (kind) {
    case EvidenceKind::Degenerate: return "degenerate";
    case EvidenceKind::PowerGraphBound: return "power-graph-bound";
    case EvidenceKind::UniversalNonIdentityVertex: return "universal-nonidentity-vertex";
    case EvidenceKind::CompleteGraphBound: return "complete-graph-bound";
    case EvidenceKind::ExhaustiveSearch: return "exhaustive-search";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  return method == Method::Constructive ? "constructive" : "exact-search";
}

HamiltonianSearchResult find_hamiltonian_path(const Graph& graph, const SearchOptions& options) {
  check_size(graph, options);
  Budget budget(options.budget);
  HamiltonianSearchResult result;
  try {
    PathSearch search(graph, budget);
    result.path = search.run();
  } catch (const BudgetExpired&) {
    throw TimeoutError("Hamiltonian path search exceeded its budget", 0, std::nullopt);
  }
  result.nodes = budget.nodes();
  return result;
}

bool l21_labelling_exists(const Graph& graph, Label span, std::vector<Label>* witness,
                          const SearchOptions& options, std::uint64_t* nodes) {
  check_size(graph, options);
  Budget budget(options.budget);
  try {
    const bool found = feasible(graph, span, witness, budget);
    if (nodes) *nodes = budget.nodes();
    return found;
  } catch (const BudgetExpired&) {
    throw TimeoutError("labelling search at span " + std::to_string(span) +
                           " exceeded its budget",
                       0, std::nullopt);
  }
}

LambdaCertificate exact_lambda(const Graph& graph, Label start_span,
                               const SearchOptions& options) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "graph has no vertices");
  check_size(graph, options);

  LambdaCertificate certificate;
  certificate.method = Method::ExactSearch;
  Budget budget(options.budget);
  Label refuted = -1;  // largest span shown infeasible
  std::optional<Label> achieved;
  std::vector<Label> witness;
  try {
    Label s = std::max<Label>(start_span, 0);
    std::vector<Label> labels;
    if (feasible(graph, s, &labels, budget)) {
      achieved = s;
      witness = labels;
      while (s > 0) {
        if (!feasible(graph, s - 1, &labels, budget)) {
          refuted = s - 1;
          break;
        }
        --s;
        achieved = s;
        witness = labels;
      }
    } else {
      refuted = s;
      while (!feasible(graph, ++s, &labels, budget)) refuted = s;
      achieved = s;
      witness = labels;
    }
  } catch (const BudgetExpired&) {
    throw TimeoutError("exact lambda search exceeded its budget", refuted + 1, achieved);
  }

  certificate.lambda = *achieved;
  certificate.witness.labels = std::move(witness);
  certificate.search_nodes = budget.nodes();
  if (certificate.lambda == 0) {
    certificate.evidence = {EvidenceKind::Degenerate, 0, std::nullopt, std::nullopt};
  } else {
    certificate.evidence = {EvidenceKind::ExhaustiveSearch, certificate.lambda, std::nullopt,
                            certificate.lambda - 1};
  }
  return certificate;
}

LowerBound power_graph_lower_bound(const PowerGraph& power) {
  const std::size_t n = power.group.order();
  if (n == 1) return {0, {EvidenceKind::Degenerate, 0, std::nullopt, std::nullopt}};
  const auto order = static_cast<Label>(n);
  if (n >= 3) {
    for (Vertex v = 0; v < n; ++v) {
      if (v != power.group.identity() && power.graph.degree(v) == n - 1) {
        return {order + 1, {EvidenceKind::UniversalNonIdentityVertex, order + 1, v, std::nullopt}};
      }
    }
  }
  return {order, {EvidenceKind::PowerGraphBound, order, std::nullopt, std::nullopt}};
}

}  // namespace powerlambda
