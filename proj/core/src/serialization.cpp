#include "powerlambda/serialization.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>

#include "powerlambda/error.hpp"

namespace powerlambda {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<long long> parse_integer(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Json certificate_to_json(const LambdaCertificate& certificate) {
  Json evidence = {{"kind", to_string(certificate.evidence.kind)},
                   {"bound", certificate.evidence.bound}};
  if (certificate.evidence.vertex) evidence["vertex"] = *certificate.evidence.vertex;
  if (certificate.evidence.refuted_span) {
    evidence["refuted_span"] = *certificate.evidence.refuted_span;
  }
  Json out = {{"lambda", certificate.lambda},
              {"method", to_string(certificate.method)},
              {"evidence", std::move(evidence)},
              {"labels", certificate.witness.labels}};
  if (certificate.construction) {
    Json joints = Json::array();
    for (const auto& [a, b] : certificate.construction->joints) joints.push_back({a, b});
    out["construction"] = {{"kind", certificate.construction->kind},
                           {"path", certificate.construction->path},
                           {"joints", std::move(joints)}};
  }
  if (certificate.method == Method::ExactSearch) out["search_nodes"] = certificate.search_nodes;
  return out;
}

std::vector<Label> read_labelling_csv(std::istream& in, const FiniteGroup& group) {
  std::unordered_map<std::string, Element> by_name;
  for (Element g = 0; g < group.order(); ++g) by_name.emplace(group.name(g), g);

  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<std::optional<Label>> labels(group.order());
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing comma");
    }
    const std::string element = trim(line.substr(0, comma));
    const std::string value = trim(line.substr(comma + 1));
    if (!header) {
      if (element != "element" || value != "label") {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                               ": expected header `element,label`");
      }
      header = true;
      continue;
    }
    std::optional<Element> g;
    if (const auto it = by_name.find(element); it != by_name.end()) {
      g = it->second;
    } else if (const auto index = parse_integer(element);
               index && *index >= 0 && static_cast<std::size_t>(*index) < group.order()) {
      g = static_cast<Element>(*index);
    }
    if (!g) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                             ": unknown element `" + element + "`");
    }
    const auto label = parse_integer(value);
    if (!label) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                             ": label `" + value + "` is not an integer");
    }
    if (labels[*g]) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": element `" +
                                             element + "` labelled twice");
    }
    labels[*g] = *label;
  }
  if (!header) throw Error(ErrorCode::ParseError, "empty labelling file");
  std::vector<Label> result;
  result.reserve(labels.size());
  for (Element g = 0; g < labels.size(); ++g) {
    if (!labels[g]) {
      throw Error(ErrorCode::MissingLabel, "element " + group.name(g) + " has no label");
    }
    result.push_back(*labels[g]);
  }
  return result;
}

void write_labelling_csv(std::ostream& out, const FiniteGroup& group,
                         std::span<const Label> labels) {
  out << "element,label\n";
  for (Element g = 0; g < labels.size(); ++g) out << group.name(g) << ',' << labels[g] << '\n';
}

}  // namespace powerlambda
