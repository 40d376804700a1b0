#pragma once

#include <chrono>
#include <cstddef>

namespace powerlambda {

/// Size caps and search budgets. Defaults suit desk-scale experiments.
struct Limits {
  /// Largest group order any constructor or reader will accept.
  std::size_t max_group_order = 512;
  /// Largest graph handed to the exact lambda search.
  std::size_t max_exact_vertices = 32;
  /// Largest graph handed to the Hamiltonian path search.
  std::size_t max_path_vertices = 512;
  /// Wall-clock budget per search instance.
  std::chrono::milliseconds search_budget{60'000};
};

/// Defaults, with `max_group_order` overridden by LAMBDA_MAX_ORDER when set
/// to a positive integer.
Limits limits_from_environment();

}  // namespace powerlambda
