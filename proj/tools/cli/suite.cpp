#include "cli/suite.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "powerlambda/constructive.hpp"
#include "powerlambda/error.hpp"
#include "powerlambda/power_graph.hpp"
#include "powerlambda/search.hpp"

namespace powerlambda::cli {

namespace {

struct CheckFailure {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw CheckFailure{detail};
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  while (exp--) result *= base;
  return result;
}

struct Context {
  const FiniteGroup& group;
  const Limits& limits;
  PowerGraph power;
  OrderTable orders;
  ClassPartition partition;
  std::optional<std::uint64_t> prime;
};

void check_orders(const Context& ctx) {
  const auto n = ctx.group.order();
  require(ctx.orders.orders[ctx.group.identity()] == 1, "identity order is not 1");
  for (Element g = 0; g < n; ++g) {
    const auto order = ctx.orders.orders[g];
    require(n % order == 0, "order of " + ctx.group.name(g) + " does not divide |G|");
    require(cyclic_subgroup(ctx.group, g).size() == order,
            "|<" + ctx.group.name(g) + ">| differs from its order");
    if (ctx.prime) {
      require(prime_power_base(order).value_or(*ctx.prime) == *ctx.prime,
              "element order " + std::to_string(order) + " is not a power of p");
    }
  }
}

void check_classes(const Context& ctx) {
  const auto n = ctx.group.order();
  std::size_t covered = 0;
  for (std::size_t c = 0; c < ctx.partition.classes.size(); ++c) {
    const auto& cls = ctx.partition.classes[c];
    covered += cls.members.size();
    require(cls.members.size() == euler_phi(cls.order), "class size differs from phi(order)");
    const auto generated = cyclic_subgroup(ctx.group, cls.representative);
    for (Element m : cls.members) {
      require(ctx.partition.class_of[m] == c, "class_of disagrees with members");
      require(cyclic_subgroup(ctx.group, m) == generated, "class members generate different subgroups");
    }
  }
  require(covered == n, "classes do not partition the group");

  std::map<std::uint64_t, std::size_t> by_order;
  std::map<std::uint64_t, std::set<std::vector<Element>>> subgroups;
  for (Element g = 0; g < n; ++g) {
    ++by_order[ctx.orders.orders[g]];
    subgroups[ctx.orders.orders[g]].insert(cyclic_subgroup(ctx.group, g));
  }
  for (const auto& [order, count] : by_order) {
    const auto m = ctx.partition.class_number(order);
    require(m * euler_phi(order) == count, "m(" + std::to_string(order) + ") * phi != |Lambda|");
    require(m == subgroups[order].size(),
            "m(" + std::to_string(order) + ") differs from the cyclic subgroup count");
  }
}

void check_power_graph(const Context& ctx) {
  const auto n = ctx.group.order();
  const auto& graph = ctx.power.graph;
  require(graph.degree(ctx.group.identity()) == n - 1, "identity is not universal");
  const auto two = distance_two_sets(graph);
  for (Vertex u = 0; u < n; ++u) {
    VertexSet near = graph.neighbours(u) | two[u];
    near.set(u);
    require(near.all(), "vertex " + ctx.group.name(u) + " has a vertex beyond distance 2");
  }
  for (std::size_t a = 0; a < ctx.partition.classes.size(); ++a) {
    const auto& ca = ctx.partition.classes[a];
    if (prime_power_base(ca.order)) {
      for (std::size_t i = 0; i < ca.members.size(); ++i)
        for (std::size_t j = i + 1; j < ca.members.size(); ++j)
          require(graph.adjacent(ca.members[i], ca.members[j]), "prime-power class is not a clique");
    }
    for (std::size_t b = a + 1; b < ctx.partition.classes.size(); ++b) {
      if (ctx.partition.classes[b].order != ca.order) continue;
      require(!classes_adjacent(ctx.partition, a, b, graph),
              "distinct classes of equal order are adjacent");
    }
  }
}

void check_nilpotent(const Context& ctx) {
  const auto series = lower_central_series(ctx.group);
  require(series.back().size() == 1, "lower central series stalls above the identity");
  for (std::size_t i = 1; i < series.size(); ++i) {
    require(series[i].size() < series[i - 1].size(), "lower central series is not strictly descending");
  }
}

bool check_congruences(const Context& ctx) {
  const auto p = *ctx.prime;
  const bool cyclic = ctx.orders.exponent == ctx.group.order();
  if (cyclic) return false;
  if (p == 2 && is_maximal_class(ctx.group)) return false;
  const unsigned e = exponent_of(ctx.orders.exponent, p);
  const auto m1 = ctx.partition.class_number(p);
  require(m1 % (p * p) == (1 + p) % (p * p),
          "m(p) = " + std::to_string(m1) + " is not 1 + p mod p^2");
  for (unsigned i = 2; i <= e; ++i) {
    const auto mi = ctx.partition.class_number(ipow(p, i));
    require(mi % p == 0, "p does not divide m(p^" + std::to_string(i) + ") = " + std::to_string(mi));
  }
  return true;
}

bool check_family_class_numbers(const Context& ctx) {
  const auto family = recognize_family(ctx.group);
  const unsigned e = family.exponent_power;
  const auto p = *ctx.prime;
  bool thin = false;
  for (unsigned i = 1; i <= e; ++i) thin |= ctx.partition.class_number(ipow(p, i)) == 1;
  const bool listed = family.family == Family::Cyclic || family.family == Family::Dihedral ||
                      family.family == Family::Quaternion || family.family == Family::Semidihedral;
  require(thin == listed, "thin level does not match the dihedral/quaternion/semidihedral/cyclic list");

  auto m = [&](unsigned j) { return ctx.partition.class_number(std::uint64_t{1} << j); };
  const std::uint64_t two_e = std::uint64_t{1} << e;
  switch (family.family) {
    case Family::Dihedral:
      require(m(1) == 1 + two_e, "dihedral m(2) != 1 + 2^e");
      for (unsigned j = 2; j <= e; ++j) require(m(j) == 1, "dihedral m(2^j) != 1");
      return true;
    case Family::Quaternion:
      require(m(1) == 1, "quaternion m(2) != 1");
      require(m(2) == 1 + two_e / 2, "quaternion m(4) != 1 + 2^(e-1)");
      for (unsigned j = 3; j <= e; ++j) require(m(j) == 1, "quaternion m(2^j) != 1");
      return true;
    case Family::Semidihedral:
      require(m(1) == 1 + two_e / 2, "semidihedral m(2) != 1 + 2^(e-1)");
      require(m(2) == 1 + two_e / 4, "semidihedral m(4) != 1 + 2^(e-2)");
      for (unsigned j = 3; j <= e; ++j) require(m(j) == 1, "semidihedral m(2^j) != 1");
      return true;
    default:
      return family.family != Family::Trivial;
  }
}

void check_path_equivalence(const Context& ctx) {
  const auto n = ctx.group.order();
  const auto rest = delete_vertex(ctx.power.graph, ctx.group.identity());
  const auto path = find_hamiltonian_path(complement(rest.graph), SearchOptions::path(ctx.limits));
  const auto exact = exact_lambda(ctx.power.graph, 0, SearchOptions::exact(ctx.limits));
  require(exact.lambda >= static_cast<Label>(n), "exact lambda below |G|");
  require(path.found() == (exact.lambda == static_cast<Label>(n)),
          std::string("Hamiltonian path ") + (path.found() ? "found" : "absent") +
              " but exact lambda is " + std::to_string(exact.lambda));
}

void check_agreement(const Context& ctx, std::string& detail) {
  const auto n = ctx.group.order();
  const auto certificate = lambda_p_group(ctx.group, ctx.limits);
  const Label predicted = predicted_p_group_lambda(ctx.group);
  require(certificate.lambda == predicted, "constructive lambda " +
                                               std::to_string(certificate.lambda) +
                                               " differs from the predicted " +
                                               std::to_string(predicted));
  require(validate_labelling(ctx.power.graph, certificate.witness.labels).empty(),
          "constructive witness is invalid");
  require(certificate.witness.span() == certificate.lambda, "witness span differs from lambda");
  if (n <= ctx.limits.max_exact_vertices) {
    const auto exact = exact_lambda(ctx.power.graph, 0, SearchOptions::exact(ctx.limits));
    require(exact.lambda == certificate.lambda,
            "exact lambda " + std::to_string(exact.lambda) + " differs from constructive " +
                std::to_string(certificate.lambda));
    detail = "lambda " + std::to_string(certificate.lambda) + " (constructive = exact)";
  } else {
    detail = "lambda " + std::to_string(certificate.lambda) + " (constructive, validated)";
  }

  const auto& built = certificate.construction;
  if (built && !built->path.empty() && built->path.size() + 1 == n) {
    const HamPath path{built->path, ctx.group.identity()};
    const Labelling labels = path_to_labelling(ctx.power, path);
    require(labels.span() == static_cast<Label>(n), "path labelling span differs from |G|");
    require(labelling_to_path(ctx.power, labels.labels) == path, "round trip changed the path");
  }
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::ExpectedFail: return "expected-fail";
  }
  return "unknown";
}

bool GroupReport::failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::vector<std::string> builtin_catalogue(std::size_t max_order) {
  std::vector<std::pair<std::uint64_t, std::string>> entries;
  auto add = [&](std::uint64_t order, std::string spec) {
    if (order <= max_order) entries.emplace_back(order, std::move(spec));
  };
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t q = p; q <= max_order; q *= p) add(q, "cyclic:" + std::to_string(q));
    std::uint64_t q = p * p;
    for (unsigned k = 2; q <= max_order; ++k, q *= p) {
      add(q, "elemab:" + std::to_string(p) + "," + std::to_string(k));
    }
  }
  for (std::uint64_t order = 8; order <= max_order; order *= 2) {
    add(order, "dihedral:" + std::to_string(order));
    add(order, "quaternion:" + std::to_string(order));
    if (order >= 16) add(order, "semidihedral:" + std::to_string(order));
  }
  add(27, "heisenberg:3");
  add(125, "heisenberg:5");
  const std::pair<std::uint64_t, const char*> products[] = {
      {8, "product:cyclic:2,cyclic:4"},
      {16, "product:cyclic:2,cyclic:8"},
      {16, "product:cyclic:4,cyclic:4"},
      {16, "product:cyclic:2,product:cyclic:2,cyclic:4"},
      {16, "product:dihedral:8,cyclic:2"},
      {16, "product:quaternion:8,cyclic:2"},
      {32, "product:cyclic:2,cyclic:16"},
      {32, "product:cyclic:4,cyclic:8"},
      {32, "product:cyclic:2,product:cyclic:4,cyclic:4"},
      {32, "product:elemab:2,3,cyclic:4"},
      {32, "product:dihedral:8,cyclic:4"},
      {32, "product:quaternion:8,cyclic:4"},
      {32, "product:dihedral:16,cyclic:2"},
      {32, "product:quaternion:16,cyclic:2"},
      {32, "product:semidihedral:16,cyclic:2"},
      {32, "product:dihedral:8,elemab:2,2"},
      {32, "product:quaternion:8,elemab:2,2"},
      {64, "product:cyclic:2,cyclic:32"},
      {64, "product:cyclic:8,cyclic:8"},
      {64, "product:dihedral:8,quaternion:8"},
      {64, "product:quaternion:8,quaternion:8"},
      {64, "product:dihedral:32,cyclic:2"},
      {64, "product:semidihedral:32,cyclic:2"},
      {27, "product:cyclic:3,cyclic:9"},
      {81, "product:cyclic:9,cyclic:9"},
      {81, "product:heisenberg:3,cyclic:3"},
      {125, "product:cyclic:5,cyclic:25"},
  };
  for (const auto& [order, spec] : products) add(order, spec);
  // Small non-p-groups; the exact search settles these quickly.
  const std::pair<std::uint64_t, const char*> others[] = {
      {6, "cyclic:6"},
      {10, "cyclic:10"},
      {12, "cyclic:12"},
      {12, "product:cyclic:2,cyclic:6"},
      {14, "cyclic:14"},
      {15, "cyclic:15"},
      {18, "product:cyclic:3,cyclic:6"},
      {24, "cyclic:24"},
      {24, "product:dihedral:8,cyclic:3"},
  };
  for (const auto& [order, spec] : others) add(order, spec);
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    const bool pa = prime_power_base(a.first).has_value();
    const bool pb = prime_power_base(b.first).has_value();
    if (pa != pb) return pa;
    return a.first < b.first;
  });
  std::vector<std::string> result;
  for (auto& [order, spec] : entries) result.push_back(std::move(spec));
  return result;
}

Label predicted_p_group_lambda(const FiniteGroup& group) {
  const auto n = static_cast<Label>(group.order());
  const OrderTable orders = order_table(group);
  if (orders.exponent == group.order()) return 2 * (n - 1);
  const auto involutions = std::count(orders.orders.begin(), orders.orders.end(), 2U);
  if (orders.p_group_prime == 2U && involutions == 1) return n + 1;
  return n;
}

GroupReport run_group_checks(const std::string& spec, const FiniteGroup& group,
                             const Limits& limits) {
  GroupReport report;
  report.spec = spec;
  report.order = group.order();
  const Context ctx{group,           limits, build_power_graph(group), order_table(group),
                    cyclic_classes(group), prime_power_base(group.order())};
  const bool p_group = ctx.prime.has_value();
  const bool small = group.order() <= limits.max_exact_vertices;

  auto run = [&](const std::string& name,
                 const std::function<CheckStatus(std::string&)>& body) {
    CheckResult result{name, CheckStatus::Pass, {}};
    try {
      result.status = body(result.detail);
    } catch (const CheckFailure& failure) {
      result.status = CheckStatus::Fail;
      result.detail = failure.detail;
    } catch (const std::exception& error) {
      result.status = CheckStatus::Fail;
      result.detail = error.what();
    }
    report.checks.push_back(std::move(result));
  };
  auto applied = [](bool ran) { return ran ? CheckStatus::Pass : CheckStatus::Skipped; };

  run("orders", [&](std::string&) {
    check_orders(ctx);
    return CheckStatus::Pass;
  });
  run("cyclic-classes", [&](std::string&) {
    check_classes(ctx);
    return CheckStatus::Pass;
  });
  run("power-graph", [&](std::string&) {
    check_power_graph(ctx);
    return CheckStatus::Pass;
  });
  run("nilpotent", [&](std::string&) {
    if (p_group) check_nilpotent(ctx);
    return applied(p_group);
  });
  run("class-number-congruences",
      [&](std::string&) { return applied(p_group && check_congruences(ctx)); });
  run("thin-families",
      [&](std::string&) { return applied(p_group && check_family_class_numbers(ctx)); });
  run("lower-hook", [&](std::string& detail) {
    const auto hook = check_lower_hook(group);
    if (hook.holds()) return CheckStatus::Pass;
    const auto& t = *hook.counterexample;
    const auto& cls = ctx.partition.classes;
    detail = "classes of orders " + std::to_string(cls[t.upper].order) + ", " +
             std::to_string(cls[t.first].order) + ", " + std::to_string(cls[t.second].order);
    require(!p_group, "counterexample in a p-group: " + detail);
    return CheckStatus::ExpectedFail;
  });
  run("path-equivalence", [&](std::string&) {
    const bool ran = small && group.order() >= 3;
    if (ran) check_path_equivalence(ctx);
    return applied(ran);
  });
  run("constructive-agreement", [&](std::string& detail) {
    if (p_group) check_agreement(ctx, detail);
    return applied(p_group);
  });
  return report;
}

}  // namespace powerlambda::cli
