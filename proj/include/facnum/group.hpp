#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "facnum/bitset.hpp"
#include "facnum/exactform.hpp"

namespace facnum {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 4096;

/// A finite group given by a validated Cayley table.
///
/// Elements are the indices 0..order-1 and index 0 is always the identity.
/// Instances are immutable once constructed.
class FiniteGroup {
 public:
  /// Validates `table` (row-major, entry i*n+j = index of g_i * g_j) and
  /// renumbers the identity to index 0 if needed. Throws ValidationError
  /// naming the first failing law, or ResourceError when n exceeds
  /// `max_order`.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table, std::string label,
                                std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  static constexpr Element identity() { return 0; }

  std::span<const Element> table() const { return table_; }
  std::span<const Element> row(Element a) const {
    return std::span<const Element>(table_).subspan(static_cast<std::size_t>(a) * order_, order_);
  }

  bool is_commutative() const;
  std::size_t element_order(Element a) const;
  /// A small generating set, chosen greedily in index order.
  const std::vector<Element>& generators() const { return generators_; }

  /// Re-runs every Cayley law check; throws ValidationError on failure.
  void validate() const;

  FiniteGroup with_label(std::string label) const;

 private:
  FiniteGroup() = default;
  void derive();

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<Element> generators_;
  std::string label_;
};

/// A subgroup as a bitset over element indices.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(Bitset members) : members_(std::move(members)) {}

  const Bitset& members() const { return members_; }
  std::size_t order() const { return members_.count(); }
  bool contains(Element e) const { return members_.test(e); }
  bool is_subgroup_of(const Subgroup& o) const { return members_.subset_of(o.members_); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  Bitset members_;
};

// Named families ------------------------------------------------------------

struct Cyclic {
  Prime p;
  unsigned n;
};
struct ElementaryAbelian {
  Prime p;
  unsigned n;
};
struct Abelian {
  PartitionType type;
};
struct Dihedral8 {};
struct Quaternion8 {};
/// <x, y | x^{p^2} = y^p = 1, y^-1 x y = x^{p+1}>, p odd.
struct ModularM {
  Prime p;
};
/// Upper unitriangular 3x3 matrices over F_p, p odd.
struct HeisenbergE {
  Prime p;
};

using NamedFamily =
    std::variant<Cyclic, ElementaryAbelian, Abelian, Dihedral8, Quaternion8, ModularM, HeisenbergE>;

/// Direct product of cyclic groups of orders p^alpha_i. Elements are
/// enumerated in mixed radix with the first factor least significant.
FiniteGroup build_abelian(const PartitionType& type, std::size_t max_order = kDefaultMaxOrder);

/// Builds and validates a named family, re-checking its defining relations.
FiniteGroup build_named(const NamedFamily& family, std::size_t max_order = kDefaultMaxOrder);

/// Text Cayley table: optional '#' comment lines, then the order n, then n
/// rows of n space-separated indices.
FiniteGroup load_cayley_table(std::istream& in, std::string label = "table",
                              std::size_t max_order = kDefaultMaxOrder);
FiniteGroup load_cayley_table_file(const std::string& path,
                                   std::size_t max_order = kDefaultMaxOrder);
void write_cayley_table(const FiniteGroup& g, std::ostream& out);

/// A subgroup together with its element list and a generating set.
struct GeneratedSubgroup {
  Bitset bits;
  std::vector<Element> members;
  std::vector<Element> gens;
};

GeneratedSubgroup trivial_subgroup(const FiniteGroup& g);

/// <base, x>, grown one right coset of `base` at a time (Dimino).
GeneratedSubgroup extend(const FiniteGroup& g, const GeneratedSubgroup& base, Element x);

/// Smallest subgroup containing `seed`.
Subgroup closure(const FiniteGroup& g, std::span<const Element> seed);

bool is_normal(const FiniteGroup& g, const Subgroup& n);

/// G/N on cosets, identity coset at index 0, cosets numbered by their
/// smallest element. DomainError if N is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

struct ElementaryInfo {
  Prime p;  // 0 for the trivial group
  unsigned n;
};

/// Set when G is elementary abelian (the trivial group counts, with p = 0).
std::optional<ElementaryInfo> is_elementary_abelian(const FiniteGroup& g);

/// (p, n) with |G| = p^n, or nothing if the order is not a prime power.
/// The trivial group yields p = 0, n = 0.
std::optional<ElementaryInfo> prime_power_order(std::size_t order);

/// Same group with element i renamed perm[i]; perm must fix 0.
FiniteGroup relabel(const FiniteGroup& g, std::span<const Element> perm);

}  // namespace facnum
