#include <doctest.h>

#include <sstream>

#include "powerlambda/error.hpp"
#include "powerlambda/group_io.hpp"
#include "support.hpp"

using namespace powerlambda;

namespace {

FiniteGroup parse(const std::string& text, std::size_t max_order = 512) {
  std::istringstream in(text);
  return read_cayley(in, max_order);
}

}  // namespace

TEST_CASE("reads the S3 fixture with names") {
  const auto s3 = read_cayley_file(support::data_path("s3.cayley"));
  CHECK(s3.order() == 6);
  CHECK(s3.name(4) == "(123)");
  CHECK(s3.mul(1, 2) == 5);
  CHECK(s3.mul(2, 1) == 4);
  CHECK(s3.family_tag() == "file");
}

TEST_CASE("write then read reproduces the table byte for byte") {
  const auto q8 = make_quaternion(8);
  std::ostringstream first;
  write_cayley(first, q8);
  std::istringstream in(first.str());
  const auto again = read_cayley(in);
  std::ostringstream second;
  write_cayley(second, again);
  CHECK(first.str() == second.str());
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) CHECK(q8.mul(a, b) == again.mul(a, b));
  CHECK(again.name(4) == "y");
}

TEST_CASE("byte-level format") {
  std::ostringstream out;
  write_cayley(out, make_cyclic(3));
  CHECK(out.str() == "3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(parse("2\n0 1\n1 0\nnames: e,a\n").name(1) == "a");
  CHECK(parse("  2\n0 1\n\n1 0\n").order() == 2);
}

TEST_CASE("malformed input") {
  CHECK_ERROR_CODE(parse(""), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse("x\n"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse("3\n0 1 2\n1 2 0\n"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse("2\n0 1\n1 a\n"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse("2\n0 1\n1 0\nnames: e\n"), ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(parse("2\n0 1\n1 0\n7\n"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse("600\n", 512), ErrorCode::TooLarge);
  CHECK_ERROR_CODE(parse("2\n1 0\n0 1\n"), ErrorCode::NoIdentity);
  CHECK_ERROR_CODE(read_cayley_file(support::data_path("missing.cayley")), ErrorCode::ParseError);
}
