#pragma once

// Subgroup lattices of concrete finite groups and the brute-force side of
// every factorization-number identity: Möbius values, F2 by pair counting,
// subgroup commutativity degree, and the inversion formulas checked term by
// term.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facnum/bigint.hpp"
#include "facnum/bitset.hpp"
#include "facnum/group.hpp"

namespace facnum {

inline constexpr std::size_t kDefaultMaxSubgroups = 100000;

struct LatticeOptions {
  std::size_t max_subgroups = kDefaultMaxSubgroups;
  /// Worker count for pair counting; 0 = hardware parallelism.
  unsigned threads = 0;
};

/// All subgroups of a group, sorted by (order, bitset value), with the
/// inclusion relation materialized as sorted up-sets and down-sets.
/// Index 0 is the trivial subgroup and the last index is the whole group.
/// Immutable once built; safe to share across threads.
class SubgroupLattice {
 public:
  const FiniteGroup& group() const { return *group_; }
  std::size_t size() const { return orders_.size(); }
  std::size_t trivial_index() const { return 0; }
  std::size_t full_index() const { return size() - 1; }
  unsigned threads() const { return threads_; }
  std::size_t max_subgroups() const { return max_subgroups_; }

  std::size_t order_of(std::size_t i) const { return orders_[i]; }
  std::span<const Word> bits(std::size_t i) const {
    return std::span<const Word>(bits_).subspan(i * words_, words_);
  }
  Subgroup subgroup(std::size_t i) const { return Subgroup(Bitset(group_->order(), bits(i))); }
  const std::vector<Element>& generators(std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> index_of(const Bitset& b) const;

  /// H <= K, by bitset containment.
  bool contains(std::size_t h, std::size_t k) const { return is_subset(bits(h), bits(k)); }
  /// All K >= H (including H), ascending.
  std::span<const std::size_t> up(std::size_t h) const {
    return std::span<const std::size_t>(up_).subspan(up_off_[h], up_off_[h + 1] - up_off_[h]);
  }
  /// All K <= H (including H), ascending.
  std::span<const std::size_t> down(std::size_t h) const {
    return std::span<const std::size_t>(down_).subspan(down_off_[h], down_off_[h + 1] - down_off_[h]);
  }

  std::size_t intersection_order(std::size_t a, std::size_t b) const {
    return and_popcount(bits(a), bits(b));
  }
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  bool is_normal(std::size_t i) const { return normal_[i]; }

  /// HK = KH, i.e. |<H,K>| = |H||K|/|H∩K|.
  bool permutes(std::size_t a, std::size_t b) const;

 private:
  friend SubgroupLattice enumerate_subgroups(const FiniteGroup&, const LatticeOptions&);
  SubgroupLattice() = default;

  std::shared_ptr<const FiniteGroup> group_;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<Element>> gens_;
  std::vector<bool> normal_;
  std::vector<std::size_t> up_off_, up_, down_off_, down_;
  unsigned threads_ = 0;
  std::size_t max_subgroups_ = kDefaultMaxSubgroups;
};

/// Breadth-first: every known subgroup is extended by one element from each
/// right coset outside it, deduplicated by bitset hash. ResourceError past
/// `max_subgroups`.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const LatticeOptions& options = {});

struct MobiusTable {
  /// mu(H, G) for every lattice index H.
  std::vector<BigInt> mu_to_top;
};

MobiusTable mobius_to_top(const SubgroupLattice& l);
/// mu(1, H) for every lattice index H, each inside its own interval [1, H].
std::vector<BigInt> mobius_from_bottom(const SubgroupLattice& l);
/// sum_{H <= K <= G} mu(K, G) == [H == G] for every H.
bool check_mobius_recursion(const SubgroupLattice& l, const MobiusTable& t);

/// Ordered pairs (H, K) with HK = G, via |H||K| = |G||H∩K|.
BigInt f2_bruteforce(const SubgroupLattice& l);
std::vector<std::pair<std::size_t, std::size_t>> list_factorizations(const SubgroupLattice& l);
/// Ordered pairs (A, B) of members below H with AB = H.
BigInt f2_of_member(const SubgroupLattice& l, std::size_t h);

/// Ordered pairs (H, K) of subgroups with HK = KH.
BigInt count_permuting_pairs(const SubgroupLattice& l);
/// For each H, the number of permuting pairs inside L(H), i.e. sd(H)|L(H)|^2.
std::vector<BigInt> permuting_pairs_below(const SubgroupLattice& l);

struct SdResult {
  BigRational value;
  BigInt f2_sum;             // sum over H of F2(H)
  BigInt permuting_pairs;    // #{(H,K) : HK = KH}
  BigInt lattice_size_squared;
};

/// Subgroup commutativity degree, computed both from the F2 sum and from
/// permuting pairs; InvariantError if they disagree.
SdResult sd(const SubgroupLattice& l);

struct InversionReport {
  std::string label;
  BigInt f2_bruteforce;
  /// sum_H sd(H)|L(H)|^2 mu(H,G), with sd(H)|L(H)|^2 from permuting pairs.
  BigInt eq1_sum;
  /// Abelian only: sum_H |L(H)|^2 mu(H,G).
  std::optional<BigInt> eq2_lattice_form;
  /// Abelian only: sum_H |L(G/H)|^2 mu(1,H), quotients built explicitly.
  std::optional<BigInt> eq2_quotient_form;
  std::string skipped;  // why the abelian-only forms were not evaluated
  /// |L(G/H)| agrees with the interval size |[H, G]| for every quotient built.
  bool quotient_sizes_match = true;
  /// For p-groups: mu(1,H) agrees with hall_mobius at every H.
  std::optional<bool> hall_agrees;
  /// (|H|, |L(G/H)|, mu(1,H)) for the nonzero quotient-form terms.
  struct Term {
    std::size_t subgroup;
    std::size_t order;
    std::size_t quotient_lattice_size;
    BigInt mu;
  };
  std::vector<Term> quotient_terms;

  bool passed() const;
};

InversionReport verify_inversion(const SubgroupLattice& l);
InversionReport verify_inversion(const FiniteGroup& g, const LatticeOptions& options = {});

struct HallReport {
  Prime p;
  unsigned n;
  bool elementary;
  BigInt mu_lattice;
  BigInt mu_hall;
  bool passed() const { return mu_lattice == mu_hall; }
};

/// DomainError when |G| is not a prime power.
HallReport verify_hall(const SubgroupLattice& l);
HallReport verify_hall(const FiniteGroup& g, const LatticeOptions& options = {});

/// JSON export: label, order, subgroups (hex bitset + order), mu(H,G),
/// F2 and sd, all big values as strings.
std::string lattice_to_json(const SubgroupLattice& l);

}  // namespace facnum
