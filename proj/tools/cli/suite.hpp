#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "powerlambda/config.hpp"
#include "powerlambda/group.hpp"
#include "powerlambda/labelling.hpp"

namespace powerlambda::cli {

enum class CheckStatus { Pass, Fail, Skipped, ExpectedFail };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string property;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct GroupReport {
  std::string spec;
  std::size_t order = 0;
  std::vector<CheckResult> checks;

  bool failed() const;
};

/// Spec strings of the built-in families with order <= max_order, in a fixed
/// order: p-groups first, then a handful of small non-p-groups.
std::vector<std::string> builtin_catalogue(std::size_t max_order);

/// Lambda predicted for a p-group: 2(n - 1) when cyclic, n + 1 when a
/// 2-group with a single involution (generalized quaternion), n otherwise.
Label predicted_p_group_lambda(const FiniteGroup& group);

/// Runs every property check that applies to `group`.
GroupReport run_group_checks(const std::string& spec, const FiniteGroup& group,
                             const Limits& limits);

}  // namespace powerlambda::cli
