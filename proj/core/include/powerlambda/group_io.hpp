#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "powerlambda/group.hpp"

namespace powerlambda {

/// Reads the Cayley-table text format:
///
///     n
///     <n rows of n space-separated 0-based indices>
///     names: a,b,c,...        (optional)
///
/// Element 0 must be the identity. Throws ParseError on malformed text and
/// the validation errors of FiniteGroup::validate on a bad table.
FiniteGroup read_cayley(std::istream& in, std::size_t max_order = 512);
FiniteGroup read_cayley_file(const std::string& path, std::size_t max_order = 512);

/// Inverse of read_cayley. The group's identity must be element 0.
void write_cayley(std::ostream& out, const FiniteGroup& group);

}  // namespace powerlambda
