#include "zsalg/families.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "zsalg/errors.hpp"
#include "zsalg/fp.hpp"

namespace zsalg {
namespace {

using Element = Group::Element;

std::optional<std::uint32_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint32_t q = 2;
  while (n % q != 0) ++q;
  while (n % q == 0) n /= q;
  if (n != 1) return std::nullopt;
  return q;
}

GroupPtr from_rule(std::uint64_t order, const std::function<Element(Element, Element)>& rule,
                   std::vector<Element> gens, std::vector<std::string> names) {
  if (order > kDefaultOrderCap)
    throw CapExceeded("group order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(kDefaultOrderCap));
  const auto n = static_cast<std::size_t>(order);
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a * n + b] = rule(a, b);
  return std::make_shared<const Group>(Group::from_table(n, std::move(mul), std::move(gens),
                                                         std::move(names), {},
                                                         prime_power_base(order)));
}

std::uint32_t ipow(std::uint32_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= b;
    if (r > kDefaultOrderCap)
      throw CapExceeded("group order exceeds cap " + std::to_string(kDefaultOrderCap));
  }
  return static_cast<std::uint32_t>(r);
}

std::string letter_name(std::size_t j, std::size_t count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + j));
  return "x" + std::to_string(j + 1);
}

bool power_of_two(std::uint32_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

GroupPtr cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  if (n > kDefaultOrderCap) throw CapExceeded("cyclic order exceeds cap");
  std::vector<Element> gens;
  std::vector<std::string> names;
  if (n > 1) {
    gens.push_back(1);
    names.push_back("a");
  }
  return from_rule(n, [n](Element a, Element b) { return (a + b) % n; }, gens, names);
}

GroupPtr elementary_abelian(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("elementary abelian group needs a prime");
  const std::uint32_t order = ipow(p, k);
  std::vector<Element> gens;
  std::vector<std::string> names;
  for (unsigned j = 0; j < k; ++j) {
    gens.push_back(ipow(p, j));
    names.push_back(letter_name(j, k));
  }
  return from_rule(order,
                   [p, k](Element a, Element b) {
                     Element out = 0, place = 1;
                     for (unsigned j = 0; j < k; ++j) {
                       out += ((a % p + b % p) % p) * place;
                       a /= p;
                       b /= p;
                       place *= p;
                     }
                     return out;
                   },
                   gens, names);
}

GroupPtr extraspecial_plus(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p_+^{1+2} needs an odd prime");
  const std::uint32_t pp = ipow(p, 2);
  const std::uint32_t order = ipow(p, 3);
  // b^j a^i' = a^i' b^j c^{j i'}
  auto rule = [p, pp](Element x, Element y) {
    Element i = x % p, j = (x / p) % p, k = x / pp;
    Element i2 = y % p, j2 = (y / p) % p, k2 = y / pp;
    Element ci = (i + i2) % p, cj = (j + j2) % p, ck = (k + k2 + j * i2) % p;
    return ci + p * cj + pp * ck;
  };
  return from_rule(order, rule, {1, p, pp}, {"a", "b", "c"});
}

GroupPtr extraspecial_minus(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p_-^{1+2} needs an odd prime");
  const std::uint32_t pp = ipow(p, 2);
  const std::uint32_t order = ipow(p, 3);
  // b^j a^i' = a^i' b^{j (1+p)^i'}
  auto rule = [p, pp](Element x, Element y) {
    Element i = x % p, j = x / p;
    Element i2 = y % p, j2 = y / p;
    std::uint64_t twist = 1;
    for (Element t = 0; t < i2; ++t) twist = twist * (1 + p) % pp;
    Element ci = (i + i2) % p;
    Element cj = static_cast<Element>((j * twist + j2) % pp);
    return ci + p * cj;
  };
  return from_rule(order, rule, {1, p, pp}, {"a", "b", "c"});
}

GroupPtr dihedral(std::uint32_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("dihedral order must be even");
  const std::uint32_t m = n / 2;
  auto rule = [m](Element x, Element y) {
    Element i = x % m, e = x / m, j = y % m, f = y / m;
    Element rot = e ? (i + m - j) % m : (i + j) % m;
    return rot + m * ((e + f) % 2);
  };
  if (m == 1) return from_rule(n, rule, {1}, {"s"});
  return from_rule(n, rule, {1, m}, {"r", "s"});
}

GroupPtr quaternion(std::uint32_t n) {
  if (n < 8 || n % 4 != 0) throw std::invalid_argument("quaternion order must be a multiple of 4, at least 8");
  const std::uint32_t m = n / 2;
  auto rule = [m](Element x, Element y) {
    Element i = x % m, e = x / m, j = y % m, f = y / m;
    Element rot = e ? (i + m - j) % m : (i + j) % m;
    if (e && f) return (rot + m / 2) % m;
    return rot + m * ((e + f) % 2);
  };
  return from_rule(n, rule, {1, m}, {"r", "s"});
}

GroupPtr semidihedral(std::uint32_t n) {
  if (n < 16 || !power_of_two(n)) throw std::invalid_argument("semidihedral order must be 2^k >= 16");
  const std::uint32_t m = n / 2;
  const std::uint32_t u = m / 2 - 1;
  auto rule = [m, u](Element x, Element y) {
    Element i = x % m, e = x / m, j = y % m, f = y / m;
    Element rot = e ? static_cast<Element>((i + std::uint64_t{j} * u) % m) : (i + j) % m;
    return rot + m * ((e + f) % 2);
  };
  return from_rule(n, rule, {1, m}, {"r", "s"});
}

GroupPtr direct_product(const Group& a, const Group& b) {
  const std::uint64_t order = std::uint64_t{a.order()} * b.order();
  const auto na = static_cast<Element>(a.order());
  auto rule = [&a, &b, na](Element x, Element y) {
    return a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  };
  std::vector<Element> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    gens.push_back(a.generators()[i]);
    names.push_back(a.generator_names()[i]);
  }
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    gens.push_back(na * b.generators()[i]);
    std::string name = b.generator_names()[i];
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  }
  return from_rule(order, rule, gens, names);
}

}  // namespace zsalg
