#include "powerlambda/group_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "powerlambda/error.hpp"

namespace powerlambda {

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

FiniteGroup read_cayley(std::istream& in, std::size_t max_order) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw Error(ErrorCode::ParseError, "empty input");
  long long n = 0;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> n) || (header >> rest) || n <= 0) {
      throw Error(ErrorCode::ParseError, "line 1: expected a positive order");
    }
  }
  if (static_cast<std::size_t>(n) > max_order) {
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) +
                                         " exceeds maximum " + std::to_string(max_order));
  }
  const auto order = static_cast<std::size_t>(n);
  CayleyTable table(order);
  for (std::size_t r = 0; r < order; ++r) {
    if (!next_line()) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(order) +
                                             " table rows, got " + std::to_string(r));
    }
    std::istringstream row(line);
    long long value = 0;
    while (row >> value) {
      if (value < 0) {
        throw Error(ErrorCode::NotClosed, "line " + std::to_string(line_no) +
                                              ": negative entry " + std::to_string(value));
      }
      table[r].push_back(static_cast<Element>(value));
    }
    if (!row.eof()) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": non-numeric entry");
    }
  }

  std::vector<std::string> names;
  if (next_line()) {
    const std::string prefix = "names:";
    const std::string trimmed = trim(line);
    if (trimmed.rfind(prefix, 0) != 0) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": unexpected trailing content");
    }
    std::istringstream list(trimmed.substr(prefix.size()));
    std::string name;
    while (std::getline(list, name, ',')) names.push_back(trim(name));
    if (next_line()) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": content after names line");
    }
  }
  return FiniteGroup::validate(table, 0, std::move(names), "file");
}

FiniteGroup read_cayley_file(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_cayley(in, max_order);
}

void write_cayley(std::ostream& out, const FiniteGroup& group) {
  if (group.identity() != 0) {
    throw Error(ErrorCode::InvalidParameter, "Cayley text format needs identity at index 0");
  }
  const std::size_t n = group.order();
  out << n << '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << group.mul(a, b);
    }
    out << '\n';
  }
  if (group.has_names()) {
    out << "names: ";
    for (Element g = 0; g < n; ++g) {
      if (g) out << ',';
      out << group.name(g);
    }
    out << '\n';
  }
}

}  // namespace powerlambda
