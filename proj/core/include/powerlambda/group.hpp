#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace powerlambda {

using Element = std::uint32_t;
using CayleyTable = std::vector<std::vector<Element>>;

/// Group orders at or below this are checked for associativity on every
/// triple; larger tables get a randomized check of 10 * n^2 triples.
inline constexpr std::size_t kExhaustiveAssociativityOrder = 256;

/// A finite group stored as its multiplication table.
///
/// Instances are immutable and share their storage, so copies are cheap and
/// safe to hand to concurrent readers.
class FiniteGroup {
 public:
  /// Checks closure, identity, the Latin-square property and associativity,
  /// throwing `Error` that names the first violating cell or triple.
  static FiniteGroup validate(const CayleyTable& table, Element identity,
                              std::vector<std::string> names = {},
                              std::string family_tag = {});

  std::size_t order() const noexcept { return data_->order; }
  Element identity() const noexcept { return data_->identity; }
  Element mul(Element a, Element b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inverse(Element a) const noexcept { return data_->inverse[a]; }
  /// g^k for k >= 0.
  Element power(Element g, std::uint64_t k) const noexcept;
  /// h^-1 k^-1 h k
  Element commutator(Element h, Element k) const noexcept;

  /// Display name; falls back to the decimal index when none was supplied.
  std::string name(Element g) const;
  bool has_names() const noexcept { return !data_->names.empty(); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  const std::string& family_tag() const noexcept { return data_->family_tag; }

  bool contains(Element g) const noexcept { return g < data_->order; }

 private:
  struct Data {
    std::size_t order = 0;
    Element identity = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> names;
    std::string family_tag;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

struct OrderTable {
  std::vector<std::uint64_t> orders;
  std::uint64_t exponent = 1;
  /// Set when the group order is a positive power of a prime.
  std::optional<std::uint64_t> p_group_prime;
};

FiniteGroup make_cyclic(std::size_t n);
/// Dihedral group of the given order 2^(e+1), e >= 2. Elements are
/// x^0..x^(2^e - 1) followed by y, xy, .., x^(2^e - 1)y.
FiniteGroup make_dihedral(std::size_t order);
/// Generalized quaternion group of order 2^(e+1), e >= 2; same enumeration.
FiniteGroup make_quaternion(std::size_t order);
/// Semidihedral group of order 2^(e+1), e >= 3; same enumeration.
FiniteGroup make_semidihedral(std::size_t order);
/// Element (g, h) has index g * |H| + h.
FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup make_elementary_abelian(std::uint64_t p, std::size_t k,
                                    std::size_t max_order = 512);
/// Upper unitriangular 3x3 matrices over Z/p, p an odd prime.
FiniteGroup make_heisenberg(std::uint64_t p);

std::uint64_t element_order(const FiniteGroup& group, Element g);
OrderTable order_table(const FiniteGroup& group);

/// Sorted elements of <g>.
std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element g);
/// Sorted elements of the subgroup generated by `generators`.
std::vector<Element> generated_subgroup(const FiniteGroup& group,
                                        const std::vector<Element>& generators);
/// G, [G,G], [[G,G],G], ... up to and including the first repeated term.
std::vector<std::vector<Element>> lower_central_series(const FiniteGroup& group);
bool is_maximal_class(const FiniteGroup& group);

/// p when n = p^k for some k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// k with n = p^k, assuming n is a power of p.
unsigned exponent_of(std::uint64_t n, std::uint64_t p);

}  // namespace powerlambda
