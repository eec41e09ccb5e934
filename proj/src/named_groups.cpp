#include <array>
#include <string>
#include <type_traits>

#include "facnum/errors.hpp"
#include "facnum/group.hpp"

namespace facnum {

namespace {

std::size_t checked_order(const BigInt& order, std::size_t max_order) {
  if (order > max_order) {
    throw ResourceError("group order " + order.str() + " exceeds the order cap " +
                        std::to_string(max_order));
  }
  return static_cast<std::size_t>(order);
}

std::string power_label(Prime p, unsigned a) {
  std::uint64_t v = 1;
  for (unsigned k = 0; k < a; ++k) v *= p;
  return "Z" + std::to_string(v);
}

std::string abelian_label(const PartitionType& t) {
  if (t.alphas().empty()) return "1";
  if (t.is_elementary() && t.rank() > 1) {
    return "Z" + std::to_string(t.prime()) + "^" + std::to_string(t.rank());
  }
  std::string out;
  for (unsigned a : t.alphas()) {
    if (!out.empty()) out += "x";
    out += power_label(t.prime(), a);
  }
  return out;
}

void require_odd(Prime p, const char* name) {
  require_prime(p);
  if (p == 2) {
    throw DomainError(std::string("p must be an odd prime for ") + name +
                      " (for p = 2 the presentation collapses to D8)");
  }
}

void relation(bool holds, const std::string& what) {
  if (!holds) throw InvariantError("presentation check failed: " + what);
}

Element power(const FiniteGroup& g, Element x, std::uint64_t k) {
  Element r = 0;
  for (std::uint64_t i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

Element commutator(const FiniteGroup& g, Element x, Element y) {
  return g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
}

bool is_central(const FiniteGroup& g, Element z) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.mul(x, z) != g.mul(z, x)) return false;
  }
  return true;
}

FiniteGroup build_d8() {
  // r^a s^b at index a + 4b; s r s = r^-1.
  std::vector<Element> t(64);
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 2; ++b) {
      for (unsigned c = 0; c < 4; ++c) {
        for (unsigned d = 0; d < 2; ++d) {
          const unsigned rot = (a + (b == 0 ? c : 4 - c)) % 4;
          const unsigned ref = b ^ d;
          t[(a + 4 * b) * 8 + (c + 4 * d)] = rot + 4 * ref;
        }
      }
    }
  }
  FiniteGroup g = FiniteGroup::from_table(8, std::move(t), "D8");
  const Element r = 1;
  const Element s = 4;
  relation(g.element_order(r) == 4 && g.element_order(s) == 2, "D8: |r| = 4, |s| = 2");
  relation(g.mul(g.mul(s, r), s) == g.inverse(r), "D8: srs = r^-1");
  return g;
}

FiniteGroup build_q8() {
  // Index 2u + sign for unit u in (1, i, j, k); sign 1 means negated.
  // kUnit[u][v] = {unit, sign} of u*v.
  static constexpr std::array<std::array<std::array<unsigned, 2>, 4>, 4> kUnit{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  std::vector<Element> t(64);
  for (unsigned x = 0; x < 8; ++x) {
    for (unsigned y = 0; y < 8; ++y) {
      const auto& uv = kUnit[x / 2][y / 2];
      const unsigned sign = (x % 2) ^ (y % 2) ^ uv[1];
      t[x * 8 + y] = 2 * uv[0] + sign;
    }
  }
  FiniteGroup g = FiniteGroup::from_table(8, std::move(t), "Q8");
  std::size_t involutions = 0;
  for (Element x = 1; x < 8; ++x) involutions += g.element_order(x) == 2 ? 1 : 0;
  relation(involutions == 1, "Q8: unique involution");
  relation(g.mul(2, 2) == 1 && g.mul(2, 4) == 6, "Q8: i^2 = -1, ij = k");
  return g;
}

FiniteGroup build_modular(Prime p, std::size_t max_order) {
  require_odd(p, "M(p^3)");
  const std::size_t n = checked_order(BigInt(p) * p * p, max_order);
  const std::uint64_t p2 = p * p;
  // x^a y^b at index a + p^2 b, with y x y^-1 = x^(1-p).
  std::vector<std::uint64_t> twist(p);
  twist[0] = 1;
  for (std::uint64_t b = 1; b < p; ++b) twist[b] = twist[b - 1] * (p2 + 1 - p) % p2;
  std::vector<Element> t(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t a = i % p2;
    const std::uint64_t b = i / p2;
    for (std::uint64_t j = 0; j < n; ++j) {
      const std::uint64_t c = j % p2;
      const std::uint64_t d = j / p2;
      t[i * n + j] = static_cast<Element>((a + c * twist[b]) % p2 + p2 * ((b + d) % p));
    }
  }
  FiniteGroup g = FiniteGroup::from_table(n, std::move(t), "M(" + std::to_string(n) + ")", max_order);
  const Element x = 1;
  const auto y = static_cast<Element>(p2);
  relation(g.element_order(x) == p2, "M(p^3): x has order p^2");
  relation(g.element_order(y) == p, "M(p^3): y has order p");
  relation(g.mul(g.mul(g.inverse(y), x), y) == power(g, x, p + 1), "M(p^3): y^-1 x y = x^(p+1)");
  relation(closure(g, std::array{x, y}).order() == n, "M(p^3): x, y generate");
  relation(!g.is_commutative(), "M(p^3) is non-abelian");
  return g;
}

FiniteGroup build_heisenberg(Prime p, std::size_t max_order) {
  require_odd(p, "E(p^3)");
  const std::size_t n = checked_order(BigInt(p) * p * p, max_order);
  // [[1,a,c],[0,1,b],[0,0,1]] at index a + p b + p^2 c.
  std::vector<Element> t(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t a = i % p;
    const std::uint64_t b = (i / p) % p;
    const std::uint64_t c = i / (p * p);
    for (std::uint64_t j = 0; j < n; ++j) {
      const std::uint64_t a2 = j % p;
      const std::uint64_t b2 = (j / p) % p;
      const std::uint64_t c2 = j / (p * p);
      t[i * n + j] = static_cast<Element>((a + a2) % p + p * ((b + b2) % p) +
                                          p * p * ((c + c2 + a * b2) % p));
    }
  }
  FiniteGroup g = FiniteGroup::from_table(n, std::move(t), "E(" + std::to_string(n) + ")", max_order);
  const Element x = 1;
  const auto y = static_cast<Element>(p);
  const Element z = commutator(g, x, y);
  relation(z != 0 && g.element_order(z) == p, "E(p^3): [x,y] has order p");
  relation(is_central(g, z), "E(p^3): [x,y] is central");
  relation(closure(g, std::array{x, y}).order() == n, "E(p^3): x, y generate");
  for (Element e = 1; e < n; ++e) relation(g.element_order(e) == p, "E(p^3) has exponent p");
  return g;
}

}  // namespace

FiniteGroup build_abelian(const PartitionType& type, std::size_t max_order) {
  const std::size_t n = checked_order(type.order(), max_order);
  std::vector<std::uint64_t> radix;
  for (unsigned a : type.alphas()) {
    std::uint64_t m = 1;
    for (unsigned k = 0; k < a; ++k) m *= type.prime();
    radix.push_back(m);
  }
  std::vector<Element> t(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      std::uint64_t x = i;
      std::uint64_t y = j;
      std::uint64_t out = 0;
      std::uint64_t place = 1;
      for (std::uint64_t m : radix) {
        out += ((x % m + y % m) % m) * place;
        x /= m;
        y /= m;
        place *= m;
      }
      t[i * n + j] = static_cast<Element>(out);
    }
  }
  return FiniteGroup::from_table(n, std::move(t), abelian_label(type), max_order);
}

FiniteGroup build_named(const NamedFamily& family, std::size_t max_order) {
  return std::visit(
      [max_order](const auto& f) -> FiniteGroup {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          std::vector<unsigned> alphas;
          if (f.n > 0) alphas.push_back(f.n);
          return build_abelian(PartitionType(f.p, alphas), max_order);
        } else if constexpr (std::is_same_v<T, ElementaryAbelian>) {
          return build_abelian(PartitionType(f.p, std::vector<unsigned>(f.n, 1)), max_order);
        } else if constexpr (std::is_same_v<T, Abelian>) {
          return build_abelian(f.type, max_order);
        } else if constexpr (std::is_same_v<T, Dihedral8>) {
          checked_order(8, max_order);
          return build_d8();
        } else if constexpr (std::is_same_v<T, Quaternion8>) {
          checked_order(8, max_order);
          return build_q8();
        } else if constexpr (std::is_same_v<T, ModularM>) {
          return build_modular(f.p, max_order);
        } else {
          return build_heisenberg(f.p, max_order);
        }
      },
      family);
}

}  // namespace facnum
