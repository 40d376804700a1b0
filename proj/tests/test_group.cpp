#include <doctest.h>

#include <algorithm>
#include <map>

#include "powerlambda/error.hpp"
#include "powerlambda/group.hpp"
#include "support.hpp"

using namespace powerlambda;

namespace {

std::map<std::uint64_t, std::size_t> order_counts(const FiniteGroup& g) {
  std::map<std::uint64_t, std::size_t> counts;
  for (Element a = 0; a < g.order(); ++a) ++counts[element_order(g, a)];
  return counts;
}

CayleyTable z3() { return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}; }

}  // namespace

TEST_CASE("validation rejects malformed tables in order") {
  CHECK_ERROR_CODE(FiniteGroup::validate({}, 0), ErrorCode::NotSquare);
  CHECK_ERROR_CODE(FiniteGroup::validate({{0, 1}, {1}}, 0), ErrorCode::NotSquare);
  CHECK_ERROR_CODE(FiniteGroup::validate({{0, 1}, {1, 2}}, 0), ErrorCode::NotClosed);
  CHECK_ERROR_CODE(FiniteGroup::validate(z3(), 1), ErrorCode::NoIdentity);
  CHECK_ERROR_CODE(FiniteGroup::validate(z3(), 5), ErrorCode::NoIdentity);
  CHECK_ERROR_CODE(FiniteGroup::validate({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}, 0),
                   ErrorCode::NotLatinSquare);
  CHECK_ERROR_CODE(read_cayley_file(support::data_path("s3_corrupted.cayley")),
                   ErrorCode::NotAssociative);
  CHECK_ERROR_CODE(FiniteGroup::validate(z3(), 0, {"a", "b"}), ErrorCode::InvalidParameter);
}

TEST_CASE("sampled associativity accepts large groups") {
  const auto g = make_cyclic(300);
  CHECK(g.order() == 300);
  CHECK(element_order(g, 1) == 300);
}

TEST_CASE("element arithmetic") {
  const auto g = make_cyclic(12);
  CHECK(g.identity() == 0);
  CHECK(g.mul(7, 8) == 3);
  CHECK(g.inverse(5) == 7);
  CHECK(g.power(5, 3) == 3);
  CHECK(g.power(5, 0) == 0);
  CHECK(g.commutator(4, 9) == 0);
  CHECK(g.name(4) == "4");
  CHECK_FALSE(g.has_names());
  CHECK(g.contains(11));
  CHECK_FALSE(g.contains(12));
}

TEST_CASE("family constructors reject bad orders") {
  CHECK_ERROR_CODE(make_cyclic(0), ErrorCode::ParameterTooSmall);
  CHECK_ERROR_CODE(make_dihedral(12), ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(make_dihedral(4), ErrorCode::ParameterTooSmall);
  CHECK_ERROR_CODE(make_quaternion(4), ErrorCode::ParameterTooSmall);
  CHECK_ERROR_CODE(make_semidihedral(8), ErrorCode::ParameterTooSmall);
  CHECK_ERROR_CODE(make_semidihedral(24), ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(make_heisenberg(2), ErrorCode::EvenPrime);
  CHECK_ERROR_CODE(make_heisenberg(9), ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(make_elementary_abelian(4, 2), ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(make_elementary_abelian(2, 0), ErrorCode::ParameterTooSmall);
  CHECK_ERROR_CODE(make_elementary_abelian(2, 10), ErrorCode::TooLarge);
}

TEST_CASE("dihedral, quaternion and semidihedral relations") {
  for (std::size_t order : {8, 16, 32, 64}) {
    const std::size_t n = order / 2;
    const Element x = 1;
    const auto y = static_cast<Element>(n);
    CAPTURE(order);

    const auto d = make_dihedral(order);
    CHECK(element_order(d, x) == n);
    CHECK(element_order(d, y) == 2);
    CHECK(d.mul(d.mul(y, x), d.inverse(y)) == d.inverse(x));

    const auto q = make_quaternion(order);
    CHECK(element_order(q, x) == n);
    CHECK(q.power(y, 2) == q.power(x, n / 2));
    CHECK(q.mul(q.mul(q.inverse(y), x), y) == q.inverse(x));

    if (order >= 16) {
      const auto sd = make_semidihedral(order);
      CHECK(element_order(sd, y) == 2);
      CHECK(sd.mul(sd.mul(y, x), y) == sd.power(x, n / 2 - 1));
    }
  }
}

TEST_CASE("element order statistics") {
  CHECK(order_counts(make_dihedral(8)) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(order_counts(make_quaternion(8)) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_counts(make_semidihedral(16)) ==
        std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 5}, {4, 6}, {8, 4}});
  CHECK(order_counts(make_heisenberg(3)) == std::map<std::uint64_t, std::size_t>{{1, 1}, {3, 26}});

  const auto table = order_table(make_direct_product(make_cyclic(2), make_cyclic(4)));
  CHECK(table.exponent == 4);
  CHECK(table.p_group_prime == 2U);
  CHECK_FALSE(order_table(make_cyclic(6)).p_group_prime.has_value());
}

TEST_CASE("heisenberg group is non-abelian with centre of order p") {
  for (std::uint64_t p : {3, 5}) {
    const auto h = make_heisenberg(p);
    CHECK(h.order() == p * p * p);
    std::size_t centre = 0;
    bool abelian = true;
    for (Element a = 0; a < h.order(); ++a) {
      bool central = true;
      for (Element b = 0; b < h.order(); ++b) central &= h.mul(a, b) == h.mul(b, a);
      centre += central;
      abelian &= central;
    }
    CHECK(centre == p);
    CHECK_FALSE(abelian);
  }
}

TEST_CASE("direct product and elementary abelian names") {
  const auto g = make_direct_product(make_dihedral(8), make_cyclic(3));
  CHECK(g.order() == 24);
  CHECK(g.identity() == 0);
  CHECK(g.name(4) == "(x;1)");
  const auto e = make_elementary_abelian(2, 3);
  CHECK(e.name(0) == "(0;0;0)");
  CHECK(e.name(6) == "(1;1;0)");
  CHECK(make_heisenberg(3).name(5) == "[0;1;2]");
  CHECK(make_quaternion(8).name(5) == "xy");
}

TEST_CASE("subgroups") {
  const auto g = make_cyclic(12);
  CHECK(cyclic_subgroup(g, 8) == std::vector<Element>{0, 4, 8});
  CHECK(generated_subgroup(g, {4, 6}) == std::vector<Element>{0, 2, 4, 6, 8, 10});
  CHECK(generated_subgroup(g, {}) == std::vector<Element>{0});
}

TEST_CASE("lower central series and maximal class") {
  const auto d8 = lower_central_series(make_dihedral(8));
  REQUIRE(d8.size() == 3);
  CHECK(d8[0].size() == 8);
  CHECK(d8[1].size() == 2);
  CHECK(d8[2].size() == 1);
  CHECK(lower_central_series(make_cyclic(5)).size() == 2);
  CHECK(lower_central_series(make_cyclic(6)).size() == 2);
  const auto s3 = lower_central_series(read_cayley_file(support::data_path("s3.cayley")));
  REQUIRE(s3.size() == 2);
  CHECK(s3.back().size() == 3);

  for (std::size_t order : {8, 16, 32}) {
    CHECK(is_maximal_class(make_dihedral(order)));
    CHECK(is_maximal_class(make_quaternion(order)));
    if (order >= 16) CHECK(is_maximal_class(make_semidihedral(order)));
  }
  CHECK(is_maximal_class(make_heisenberg(3)));
  CHECK_FALSE(is_maximal_class(make_cyclic(8)));
  CHECK_FALSE(is_maximal_class(make_direct_product(make_cyclic(2), make_cyclic(4))));
  CHECK_FALSE(is_maximal_class(make_direct_product(make_dihedral(8), make_cyclic(2))));
  CHECK_ERROR_CODE(is_maximal_class(make_cyclic(6)), ErrorCode::NotPGroup);
  CHECK_ERROR_CODE(is_maximal_class(make_cyclic(7)), ErrorCode::NotPGroup);
}

TEST_CASE("number helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power_base(64) == 2U);
  CHECK(prime_power_base(81) == 3U);
  CHECK(prime_power_base(7) == 7U);
  CHECK_FALSE(prime_power_base(12).has_value());
  CHECK_FALSE(prime_power_base(1).has_value());
  CHECK(exponent_of(64, 2) == 6);
  CHECK(exponent_of(48, 2) == 4);
}
