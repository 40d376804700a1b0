#include "powerlambda/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "powerlambda/error.hpp"

namespace powerlambda {

namespace {

std::string cell(std::size_t row, std::size_t col) {
  std::ostringstream out;
  out << "(" << row << "," << col << ")";
  return out.str();
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Exponent e for a family group of order 2^(e+1).
unsigned family_exponent(std::size_t order, unsigned min_e, const char* family) {
  if (!is_power_of_two(order) || order < 2) {
    throw Error(ErrorCode::InvalidParameter,
                std::string(family) + " order must be a power of two, got " +
                    std::to_string(order));
  }
  const unsigned e = exponent_of(order, 2) - 1;
  if (e < min_e) {
    throw Error(ErrorCode::ParameterTooSmall,
                std::string(family) + " needs order >= " +
                    std::to_string(std::size_t{2} << min_e) + ", got " +
                    std::to_string(order));
  }
  return e;
}

std::vector<std::string> family_names(std::size_t rotations) {
  std::vector<std::string> names;
  names.reserve(2 * rotations);
  auto x_power = [](std::size_t k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return "x";
    return "x^" + std::to_string(k);
  };
  for (std::size_t k = 0; k < rotations; ++k) {
    names.push_back(k == 0 ? "e" : x_power(k));
  }
  for (std::size_t k = 0; k < rotations; ++k) {
    names.push_back(x_power(k) + "y");
  }
  return names;
}

/// Builds the metacyclic group <x, y | x^n = 1, y^2 = x^square, y x = x^r y>
/// on elements x^k (index k) and x^k y (index n + k).
FiniteGroup make_metacyclic(std::size_t n, std::size_t r, std::size_t square,
                            std::string tag) {
  CayleyTable table(2 * n, std::vector<Element>(2 * n));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const std::size_t a = i % n;
    const bool s = i >= n;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const std::size_t b = j % n;
      const bool t = j >= n;
      // x^a y^s x^b y^t = x^(a + r^s b) y^(s+t)
      std::size_t exponent = s ? (a + r * b) % n : (a + b) % n;
      bool outside = s != t;
      if (s && t) exponent = (exponent + square) % n;
      table[i][j] = static_cast<Element>(outside ? n + exponent : exponent);
    }
  }
  return FiniteGroup::validate(table, 0, family_names(n), std::move(tag));
}

}  // namespace

FiniteGroup FiniteGroup::validate(const CayleyTable& table, Element identity,
                                  std::vector<std::string> names,
                                  std::string family_tag) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotSquare, "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(r) + " has " +
                                            std::to_string(table[r].size()) +
                                            " entries, expected " + std::to_string(n));
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        throw Error(ErrorCode::NotClosed, "entry at " + cell(r, c) + " is " +
                                              std::to_string(table[r][c]));
      }
    }
  }
  if (identity >= n) {
    throw Error(ErrorCode::NoIdentity, "identity index " + std::to_string(identity) +
                                           " out of range");
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[identity][g] != g) {
      throw Error(ErrorCode::NoIdentity, "cell " + cell(identity, g) + " is not " +
                                             std::to_string(g));
    }
    if (table[g][identity] != g) {
      throw Error(ErrorCode::NoIdentity, "cell " + cell(g, identity) + " is not " +
                                             std::to_string(g));
    }
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table[r][c]]++) {
        throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(r) +
                                                   " repeats value at " + cell(r, c));
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[table[r][c]]++) {
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(c) +
                                                   " repeats value at " + cell(r, c));
      }
    }
  }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table[table[a][b]][c] != table[a][table[b][c]]) {
      std::ostringstream out;
      out << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b << "*" << c
          << ")";
      throw Error(ErrorCode::NotAssociative, out.str());
    }
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t samples = 10 * n * n;
    for (std::size_t i = 0; i < samples; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }

  if (!names.empty() && names.size() != n) {
    throw Error(ErrorCode::InvalidParameter, "expected " + std::to_string(n) +
                                                 " names, got " +
                                                 std::to_string(names.size()));
  }

  auto data = std::make_shared<Data>();
  data->order = n;
  data->identity = identity;
  data->table.reserve(n * n);
  for (const auto& row : table) data->table.insert(data->table.end(), row.begin(), row.end());
  data->inverse.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == identity) {
        data->inverse[g] = static_cast<Element>(h);
        break;
      }
    }
  }
  data->names = std::move(names);
  data->family_tag = std::move(family_tag);
  return FiniteGroup(std::move(data));
}

Element FiniteGroup::power(Element g, std::uint64_t k) const noexcept {
  Element result = identity();
  Element base = g;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Element FiniteGroup::commutator(Element h, Element k) const noexcept {
  return mul(mul(inverse(h), inverse(k)), mul(h, k));
}

std::string FiniteGroup::name(Element g) const {
  if (data_->names.empty()) return std::to_string(g);
  return data_->names[g];
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::ParameterTooSmall, "cyclic group needs n >= 1");
  CayleyTable table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = static_cast<Element>((i + j) % n);
  return FiniteGroup::validate(table, 0, {}, "cyclic");
}

FiniteGroup make_dihedral(std::size_t order) {
  const unsigned e = family_exponent(order, 2, "dihedral");
  const std::size_t n = std::size_t{1} << e;
  return make_metacyclic(n, n - 1, 0, "dihedral");
}

FiniteGroup make_quaternion(std::size_t order) {
  const unsigned e = family_exponent(order, 2, "quaternion");
  const std::size_t n = std::size_t{1} << e;
  return make_metacyclic(n, n - 1, n / 2, "quaternion");
}

FiniteGroup make_semidihedral(std::size_t order) {
  const unsigned e = family_exponent(order, 3, "semidihedral");
  const std::size_t n = std::size_t{1} << e;
  return make_metacyclic(n, n / 2 - 1, 0, "semidihedral");
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t n = ng * nh;
  CayleyTable table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ga = static_cast<Element>(a / nh);
    const auto ha = static_cast<Element>(a % nh);
    names[a] = "(" + g.name(ga) + ";" + h.name(ha) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const auto gb = static_cast<Element>(b / nh);
      const auto hb = static_cast<Element>(b % nh);
      table[a][b] = static_cast<Element>(g.mul(ga, gb) * nh + h.mul(ha, hb));
    }
  }
  const auto identity = static_cast<Element>(g.identity() * nh + h.identity());
  return FiniteGroup::validate(table, identity, std::move(names), "product");
}

FiniteGroup make_elementary_abelian(std::uint64_t p, std::size_t k, std::size_t max_order) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidParameter, std::to_string(p) + " is not prime");
  }
  if (k == 0) throw Error(ErrorCode::ParameterTooSmall, "elementary abelian needs k >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > max_order) {
      throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(k) +
                                           " exceeds maximum order " +
                                           std::to_string(max_order));
    }
  }
  // Element index read in base p; digit i is coordinate i from the left.
  CayleyTable table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string name = "(";
    std::size_t scale = n / p;
    for (std::size_t i = 0; i < k; ++i, scale /= p) {
      if (i) name += ";";
      name += std::to_string((a / scale) % p);
    }
    names[a] = name + ")";
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t sum = 0;
      for (std::size_t s = 1; s < n; s *= p) {
        sum += (((a / s) % p + (b / s) % p) % p) * s;
      }
      table[a][b] = static_cast<Element>(sum);
    }
  }
  return FiniteGroup::validate(table, 0, std::move(names), "elemab");
}

FiniteGroup make_heisenberg(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::EvenPrime, "heisenberg group needs an odd prime");
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidParameter, std::to_string(p) + " is not prime");
  }
  // [[1,a,c],[0,1,b],[0,0,1]] has index a*p^2 + b*p + c.
  const std::size_t n = p * p * p;
  CayleyTable table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  auto index = [p](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<Element>(((a % p) * p + (b % p)) * p + (c % p));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = i / (p * p), b = (i / p) % p, c = i % p;
    names[i] = "[" + std::to_string(a) + ";" + std::to_string(b) + ";" + std::to_string(c) + "]";
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t a2 = j / (p * p), b2 = (j / p) % p, c2 = j % p;
      table[i][j] = index(a + a2, b + b2, c + c2 + a * b2);
    }
  }
  return FiniteGroup::validate(table, 0, std::move(names), "heisenberg");
}

std::uint64_t element_order(const FiniteGroup& group, Element g) {
  std::uint64_t k = 1;
  for (Element x = g; x != group.identity(); x = group.mul(x, g)) ++k;
  return k;
}

OrderTable order_table(const FiniteGroup& group) {
  OrderTable result;
  result.orders.resize(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    result.orders[g] = element_order(group, g);
    result.exponent = std::max(result.exponent, result.orders[g]);
  }
  result.p_group_prime = prime_power_base(group.order());
  return result;
}

std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element g) {
  std::vector<Element> members{group.identity()};
  for (Element x = g; x != group.identity(); x = group.mul(x, g)) members.push_back(x);
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> generated_subgroup(const FiniteGroup& group,
                                        const std::vector<Element>& generators) {
  std::vector<char> in(group.order());
  std::vector<Element> members{group.identity()};
  in[group.identity()] = 1;
  // Worklist saturation: right-multiply every member by every generator.
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (Element s : generators) {
      const Element product = group.mul(members[next], s);
      if (!in[product]) {
        in[product] = 1;
        members.push_back(product);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<Element>> lower_central_series(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<std::vector<Element>> series{all};
  while (true) {
    const auto& current = series.back();
    std::vector<char> seen(group.order());
    std::vector<Element> commutators;
    for (Element h : current) {
      for (Element k = 0; k < group.order(); ++k) {
        const Element c = group.commutator(h, k);
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    }
    auto next = generated_subgroup(group, commutators);
    if (next == current) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_maximal_class(const FiniteGroup& group) {
  const auto p = prime_power_base(group.order());
  if (!p) {
    throw Error(ErrorCode::NotPGroup,
                "order " + std::to_string(group.order()) + " is not a prime power");
  }
  const unsigned n = exponent_of(group.order(), *p);
  if (n < 2) {
    throw Error(ErrorCode::NotPGroup, "maximal class needs order p^n with n >= 2");
  }
  const auto series = lower_central_series(group);
  // series[i - 1] is gamma_i; the chain is constant past its end.
  auto gamma_size = [&](std::size_t i) { return series[std::min(i, series.size()) - 1].size(); };
  return gamma_size(n - 1) != 1 && gamma_size(n) == 1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

unsigned exponent_of(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace powerlambda
