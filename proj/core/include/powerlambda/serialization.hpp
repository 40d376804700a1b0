#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <span>
#include <vector>

#include "powerlambda/certificate.hpp"
#include "powerlambda/group.hpp"

namespace powerlambda {

using Json = nlohmann::ordered_json;

/// {lambda, method, evidence, labels[], construction?, search_nodes?}
Json certificate_to_json(const LambdaCertificate& certificate);

/// Labelling CSV: header `element,label`, then one row per element where
/// element is a name of the group or, failing that, a 0-based index.
/// Throws ParseError on malformed rows and MissingLabel when an element is
/// not covered.
std::vector<Label> read_labelling_csv(std::istream& in, const FiniteGroup& group);
void write_labelling_csv(std::ostream& out, const FiniteGroup& group,
                         std::span<const Label> labels);

}  // namespace powerlambda
