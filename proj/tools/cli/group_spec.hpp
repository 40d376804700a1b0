#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "powerlambda/config.hpp"
#include "powerlambda/group.hpp"

namespace powerlambda::cli {

/// Parsed group specification string:
///
///     cyclic:N | dihedral:ORDER | quaternion:ORDER | semidihedral:ORDER
///     | elemab:P,K | heisenberg:P | product:SPEC,SPEC | file:PATH
///
/// Product operands may be parenthesized; without parentheses the first
/// comma split whose halves both parse is used.
struct GroupSpec {
  std::string family;
  std::vector<std::uint64_t> parameters;
  std::vector<GroupSpec> factors;
  std::string path;

  std::string to_string() const;
};

/// Throws Error(ParseError) on grammar violations.
GroupSpec parse_group_spec(const std::string& text);

/// Builds and validates the group; throws TooLarge above `limits.max_group_order`.
FiniteGroup build_group(const GroupSpec& spec, const Limits& limits);

}  // namespace powerlambda::cli
