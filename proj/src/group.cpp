#include "facnum/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "facnum/errors.hpp"

namespace facnum {

namespace {

using Table = std::vector<Element>;

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Right-multiplication closure of {0} under `gens`. For an associative table
// this is the subgroup they generate; for a merely candidate table it is the
// set swept by Light's associativity test.
std::vector<bool> right_closure(const Table& t, std::size_t n, const std::vector<Element>& gens) {
  std::vector<bool> seen(n, false);
  std::vector<Element> queue{0};
  seen[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (Element s : gens) {
      const Element x = t[queue[q] * n + s];
      if (!seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
  }
  return seen;
}

std::vector<Element> greedy_generators(const Table& t, std::size_t n) {
  std::vector<Element> gens;
  std::vector<bool> covered = right_closure(t, n, gens);
  for (Element x = 0; x < n; ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    covered = right_closure(t, n, gens);
  }
  return gens;
}

// Identity at 0, rows/columns are permutations, two-sided inverses exist,
// associativity. Associativity uses Light's test: elements c with
// (ab)c = a(bc) for all a, b are closed under products, so checking c over
// a generating set covers every triple.
void check_laws(const Table& t, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (t[j] != j || t[j * n] != j) {
      throw ValidationError("identity law fails at element " + std::to_string(j));
    }
  }
  std::vector<std::size_t> mark(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = t[i * n + j];
      if (mark[v] == i) {
        throw ValidationError("row " + std::to_string(i) + " is not a permutation (value " +
                              std::to_string(v) + " repeated)");
      }
      mark[v] = i;
    }
  }
  std::fill(mark.begin(), mark.end(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = t[i * n + j];
      if (mark[v] == j) {
        throw ValidationError("column " + std::to_string(j) + " is not a permutation (value " +
                              std::to_string(v) + " repeated)");
      }
      mark[v] = j;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (t[i * n + j] != 0) ++j;
    if (t[j * n + i] != 0) {
      throw ValidationError("inverse law fails at element " + std::to_string(i));
    }
  }
  for (Element s : greedy_generators(t, n)) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Element lhs = t[t[a * n + b] * n + s];
        const Element rhs = t[a * n + t[b * n + s]];
        if (lhs != rhs) {
          throw ValidationError("associativity fails at " + triple(a, b, s));
        }
      }
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::string label, std::size_t max_order) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (order > max_order) {
    throw ResourceError("group order " + std::to_string(order) + " exceeds the order cap " +
                        std::to_string(max_order));
  }
  if (table.size() != order * order) {
    throw ValidationError("Cayley table must have " + std::to_string(order * order) +
                          " entries, got " + std::to_string(table.size()));
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= order) {
      throw ValidationError("entry (" + std::to_string(k / order) + "," +
                            std::to_string(k % order) + ") = " + std::to_string(table[k]) +
                            " is out of range");
    }
  }

  // Locate a two-sided identity and move it to index 0.
  std::size_t e = order;
  for (std::size_t c = 0; c < order && e == order; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < order && ok; ++j) {
      ok = table[c * order + j] == j && table[j * order + c] == j;
    }
    if (ok) e = c;
  }
  if (e == order) throw ValidationError("identity law fails: no two-sided identity element");
  if (e != 0) {
    std::vector<Element> perm(order);
    std::iota(perm.begin(), perm.end(), Element{0});
    std::swap(perm[0], perm[e]);
    Table renamed(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        renamed[perm[i] * order + perm[j]] = perm[table[i * order + j]];
      }
    }
    table = std::move(renamed);
  }

  check_laws(table, order);

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.derive();
  return g;
}

void FiniteGroup::derive() {
  inverses_.assign(order_, 0);
  for (Element i = 0; i < order_; ++i) {
    for (Element j = 0; j < order_; ++j) {
      if (mul(i, j) == 0) {
        inverses_[i] = j;
        break;
      }
    }
  }
  generators_ = greedy_generators(table_, order_);
}

void FiniteGroup::validate() const {
  if (table_.size() != order_ * order_) throw ValidationError("Cayley table has the wrong size");
  check_laws(table_, order_);
  for (Element i = 0; i < order_; ++i) {
    if (mul(i, inverses_[i]) != 0) {
      throw ValidationError("stored inverse of " + std::to_string(i) + " is wrong");
    }
  }
}

bool FiniteGroup::is_commutative() const {
  for (Element i = 0; i < order_; ++i) {
    for (Element j = i + 1; j < order_; ++j) {
      if (mul(i, j) != mul(j, i)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup g = *this;
  g.label_ = std::move(label);
  return g;
}

GeneratedSubgroup trivial_subgroup(const FiniteGroup& g) {
  GeneratedSubgroup h{Bitset(g.order()), {0}, {}};
  h.bits.set(0);
  return h;
}

GeneratedSubgroup extend(const FiniteGroup& g, const GeneratedSubgroup& base, Element x) {
  if (base.bits.test(x)) return base;
  GeneratedSubgroup out = base;
  out.gens.push_back(x);
  const std::size_t base_size = base.members.size();
  std::vector<Element> reps;

  auto add_coset = [&](Element r) {
    for (std::size_t k = 0; k < base_size; ++k) {
      const Element e = g.mul(base.members[k], r);
      out.bits.set(e);
      out.members.push_back(e);
    }
    reps.push_back(r);
  };

  add_coset(x);
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    for (Element s : out.gens) {
      const Element y = g.mul(reps[ri], s);
      if (!out.bits.test(y)) add_coset(y);
    }
  }
  return out;
}

Subgroup closure(const FiniteGroup& g, std::span<const Element> seed) {
  GeneratedSubgroup h = trivial_subgroup(g);
  for (Element x : seed) {
    if (x >= g.order()) throw DomainError("closure seed index out of range");
    h = extend(g, h, x);
  }
  return Subgroup(std::move(h.bits));
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  const auto members = n.members().members();
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inverse(x);
    for (Element m : members) {
      if (!n.contains(g.mul(g.mul(x, m), xi))) return false;
    }
  }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (n.members().size() != g.order()) throw DomainError("subgroup belongs to a different group");
  if (!is_normal(g, n)) throw DomainError("quotient requires a normal subgroup");
  const auto members = n.members().members();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset_of(g.order(), kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : members) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return FiniteGroup::from_table(q, std::move(table),
                                 g.label() + "/N" + std::to_string(members.size()), g.order());
}

std::optional<ElementaryInfo> prime_power_order(std::size_t order) {
  if (order == 1) return ElementaryInfo{0, 0};
  std::size_t p = 2;
  while (order % p != 0) ++p;
  unsigned n = 0;
  while (order % p == 0) {
    order /= p;
    ++n;
  }
  if (order != 1) return std::nullopt;
  return ElementaryInfo{p, n};
}

std::optional<ElementaryInfo> is_elementary_abelian(const FiniteGroup& g) {
  const auto pp = prime_power_order(g.order());
  if (!pp) return std::nullopt;
  if (g.order() == 1) return pp;
  if (!g.is_commutative()) return std::nullopt;
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != pp->p) return std::nullopt;
  }
  return pp;
}

FiniteGroup relabel(const FiniteGroup& g, std::span<const Element> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n || perm[0] != 0) throw DomainError("relabeling must be a permutation fixing 0");
  std::vector<bool> hit(n, false);
  for (Element v : perm) {
    if (v >= n || hit[v]) throw DomainError("relabeling is not a permutation");
    hit[v] = true;
  }
  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) table[perm[i] * n + perm[j]] = perm[g.mul(i, j)];
  }
  return FiniteGroup::from_table(n, std::move(table), g.label(), n);
}

}  // namespace facnum
