#pragma once

#include <string>
#include <utility>
#include <vector>

#include "powerlambda/group.hpp"
#include "powerlambda/group_io.hpp"

namespace support {

inline std::string data_path(const std::string& name) {
  return std::string(POWERLAMBDA_TEST_DATA_DIR) + "/" + name;
}

struct NamedGroup {
  std::string name;
  powerlambda::FiniteGroup group;
};

/// Small groups of assorted shapes, orders <= 16.
inline std::vector<NamedGroup> small_groups() {
  using namespace powerlambda;
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= 16; ++n) out.push_back({"C" + std::to_string(n), make_cyclic(n)});
  out.push_back({"C2xC2", make_elementary_abelian(2, 2)});
  out.push_back({"C2^3", make_elementary_abelian(2, 3)});
  out.push_back({"C2^4", make_elementary_abelian(2, 4)});
  out.push_back({"C3xC3", make_elementary_abelian(3, 2)});
  out.push_back({"C2xC4", make_direct_product(make_cyclic(2), make_cyclic(4))});
  out.push_back({"C4xC4", make_direct_product(make_cyclic(4), make_cyclic(4))});
  out.push_back({"C2xC8", make_direct_product(make_cyclic(2), make_cyclic(8))});
  out.push_back({"C2xC6", make_direct_product(make_cyclic(2), make_cyclic(6))});
  out.push_back({"D8", make_dihedral(8)});
  out.push_back({"D16", make_dihedral(16)});
  out.push_back({"Q8", make_quaternion(8)});
  out.push_back({"Q16", make_quaternion(16)});
  out.push_back({"SD16", make_semidihedral(16)});
  out.push_back({"D8xC2", make_direct_product(make_dihedral(8), make_cyclic(2))});
  out.push_back({"Q8xC2", make_direct_product(make_quaternion(8), make_cyclic(2))});
  out.push_back({"S3", read_cayley_file(data_path("s3.cayley"))});
  out.push_back({"A4", read_cayley_file(data_path("a4.cayley"))});
  out.push_back({"S3xC2", make_direct_product(read_cayley_file(data_path("s3.cayley")),
                                              make_cyclic(2))});
  return out;
}

}  // namespace support

/// Checks that `expr` throws powerlambda::Error carrying `expected`.
#define CHECK_ERROR_CODE(expr, expected)                               \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const powerlambda::Error& error_) {                       \
      thrown_ = true;                                                  \
      CHECK_MESSAGE(error_.code() == (expected), error_.what());       \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr);           \
  } while (false)
