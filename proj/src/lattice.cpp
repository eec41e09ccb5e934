#include "facnum/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "facnum/errors.hpp"
#include "facnum/parallel.hpp"

namespace facnum {

namespace {

void build_csr(const std::vector<std::vector<std::size_t>>& lists, std::vector<std::size_t>& offsets,
               std::vector<std::size_t>& flat) {
  offsets.assign(lists.size() + 1, 0);
  for (std::size_t i = 0; i < lists.size(); ++i) offsets[i + 1] = offsets[i] + lists[i].size();
  flat.clear();
  flat.reserve(offsets.back());
  for (const auto& l : lists) flat.insert(flat.end(), l.begin(), l.end());
}

}  // namespace

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const LatticeOptions& options) {
  const std::size_t n = g.order();
  std::vector<GeneratedSubgroup> found;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;

  auto insert = [&](GeneratedSubgroup&& s) {
    if (seen.contains(s.bits)) return;
    if (found.size() >= options.max_subgroups) {
      throw ResourceError("subgroup count exceeds the cap " + std::to_string(options.max_subgroups) +
                          " for " + g.label());
    }
    seen.emplace(s.bits, found.size());
    found.push_back(std::move(s));
  };

  const GeneratedSubgroup trivial = trivial_subgroup(g);
  insert(GeneratedSubgroup(trivial));
  for (Element x = 1; x < n; ++x) insert(extend(g, trivial, x));

  // Subgroups generated by k+1 elements are one-element extensions of those
  // generated by k, so sweeping the growing list reaches every subgroup.
  for (std::size_t q = 1; q < found.size(); ++q) {
    const GeneratedSubgroup base = found[q];
    Bitset covered = base.bits;
    for (Element x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      for (Element h : base.members) covered.set(g.mul(h, x));
      insert(extend(g, base, x));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> counts(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) counts[i] = found[i].members.size();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a] != counts[b]) return counts[a] < counts[b];
    return compare_numeric(found[a].bits.words(), found[b].bits.words()) < 0;
  });

  SubgroupLattice l;
  l.group_ = std::make_shared<const FiniteGroup>(g);
  l.words_ = words_for(n);
  l.threads_ = resolve_threads(options.threads);
  l.max_subgroups_ = options.max_subgroups;
  const std::size_t m = found.size();
  l.bits_.resize(m * l.words_);
  l.orders_.resize(m);
  l.gens_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    GeneratedSubgroup& s = found[perm[i]];
    std::copy(s.bits.words().begin(), s.bits.words().end(), l.bits_.begin() + static_cast<std::ptrdiff_t>(i * l.words_));
    l.orders_[i] = counts[perm[i]];
    l.gens_[i] = std::move(s.gens);
  }
  found.clear();

  // Down-sets: H <= K iff every generator of H lies in K.
  std::vector<std::vector<std::size_t>> downs(m);
  parallel_chunks(m, l.threads_, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto kb = l.bits(k);
      auto in_k = [&](Element e) { return (kb[e / kWordBits] >> (e % kWordBits)) & 1U; };
      auto& out = downs[k];
      for (std::size_t h = 0; h < k; ++h) {
        if (l.orders_[h] >= l.orders_[k]) break;
        if (l.orders_[k] % l.orders_[h] != 0) continue;
        if (std::all_of(l.gens_[h].begin(), l.gens_[h].end(), in_k)) out.push_back(h);
      }
      out.push_back(k);
    }
  }, 4);
  std::vector<std::vector<std::size_t>> ups(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t h : downs[k]) ups[h].push_back(k);
  }
  build_csr(downs, l.down_off_, l.down_);
  downs.clear();
  build_csr(ups, l.up_off_, l.up_);

  l.normal_.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto b = l.bits(i);
    bool normal = true;
    for (Element x : g.generators()) {
      const Element xi = g.inverse(x);
      for (Element y : l.gens_[i]) {
        const Element c = g.mul(g.mul(x, y), xi);
        if (((b[c / kWordBits] >> (c % kWordBits)) & 1U) == 0) {
          normal = false;
          break;
        }
      }
      if (!normal) break;
    }
    l.normal_[i] = normal;
  }
  return l;
}

std::optional<std::size_t> SubgroupLattice::index_of(const Bitset& b) const {
  if (b.size() != group_->order()) return std::nullopt;
  const std::size_t c = b.count();
  const auto lo = std::lower_bound(orders_.begin(), orders_.end(), c);
  for (auto it = lo; it != orders_.end() && *it == c; ++it) {
    const auto i = static_cast<std::size_t>(it - orders_.begin());
    if (std::equal(b.words().begin(), b.words().end(), bits(i).begin())) return i;
  }
  return std::nullopt;
}

std::size_t SubgroupLattice::meet(std::size_t a, std::size_t b) const {
  Bitset m(group_->order(), bits(a));
  m &= Bitset(group_->order(), bits(b));
  const auto idx = index_of(m);
  if (!idx) throw InvariantError("lattice is not closed under intersection");
  return *idx;
}

std::size_t SubgroupLattice::join(std::size_t a, std::size_t b) const {
  const auto bb = bits(b);
  for (std::size_t k : up(a)) {
    if (is_subset(bb, bits(k))) return k;
  }
  throw InvariantError("no common upper bound in the lattice");
}

bool SubgroupLattice::permutes(std::size_t a, std::size_t b) const {
  if (normal_[a] || normal_[b]) return true;
  const std::size_t product = orders_[a] * orders_[b];
  return orders_[join(a, b)] * intersection_order(a, b) == product;
}

MobiusTable mobius_to_top(const SubgroupLattice& l) {
  const std::size_t m = l.size();
  MobiusTable t;
  t.mu_to_top.assign(m, 0);
  t.mu_to_top[m - 1] = 1;
  for (std::size_t i = m - 1; i-- > 0;) {
    BigInt s = 0;
    for (std::size_t k : l.up(i)) {
      if (k != i) s += t.mu_to_top[k];
    }
    t.mu_to_top[i] = -s;
  }
  return t;
}

std::vector<BigInt> mobius_from_bottom(const SubgroupLattice& l) {
  const std::size_t m = l.size();
  std::vector<BigInt> mu(m, 0);
  mu[0] = 1;
  for (std::size_t i = 1; i < m; ++i) {
    BigInt s = 0;
    for (std::size_t k : l.down(i)) {
      if (k != i) s += mu[k];
    }
    mu[i] = -s;
  }
  return mu;
}

bool check_mobius_recursion(const SubgroupLattice& l, const MobiusTable& t) {
  for (std::size_t h = 0; h < l.size(); ++h) {
    BigInt s = 0;
    for (std::size_t k : l.up(h)) s += t.mu_to_top[k];
    if (s != (h == l.full_index() ? 1 : 0)) return false;
  }
  return true;
}

namespace {

// First index in [0, m) whose order is at least `need`.
std::size_t first_with_order(const SubgroupLattice& l, std::size_t need) {
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (l.order_of(mid) < need) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// |A||B| >= |G| is necessary; equality of |A||B| with |G||A∩B| is exact.
template <typename Emit>
std::uint64_t factorizations_from(const SubgroupLattice& l, std::size_t a, Emit&& emit) {
  const std::size_t n = l.group().order();
  const std::size_t oa = l.order_of(a);
  const auto abits = l.bits(a);
  std::uint64_t count = 0;
  for (std::size_t b = first_with_order(l, (n + oa - 1) / oa); b < l.size(); ++b) {
    if (and_popcount(abits, l.bits(b)) * n == oa * l.order_of(b)) {
      ++count;
      emit(b);
    }
  }
  return count;
}

}  // namespace

BigInt f2_bruteforce(const SubgroupLattice& l) {
  return BigInt(parallel_sum(l.size(), l.threads(), [&](std::size_t a) {
    return factorizations_from(l, a, [](std::size_t) {});
  }));
}

std::vector<std::pair<std::size_t, std::size_t>> list_factorizations(const SubgroupLattice& l) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    factorizations_from(l, a, [&](std::size_t b) { out.emplace_back(a, b); });
  }
  return out;
}

namespace {

std::uint64_t f2_of_member_u64(const SubgroupLattice& l, std::size_t h) {
  const auto below = l.down(h);
  const std::size_t oh = l.order_of(h);
  std::uint64_t count = 0;
  for (std::size_t a : below) {
    const std::size_t oa = l.order_of(a);
    const std::size_t need = (oh + oa - 1) / oa;
    const auto start = std::partition_point(below.begin(), below.end(),
                                            [&](std::size_t k) { return l.order_of(k) < need; });
    const auto abits = l.bits(a);
    for (auto it = start; it != below.end(); ++it) {
      if (and_popcount(abits, l.bits(*it)) * oh == oa * l.order_of(*it)) ++count;
    }
  }
  return count;
}

}  // namespace

BigInt f2_of_member(const SubgroupLattice& l, std::size_t h) {
  if (h >= l.size()) throw DomainError("subgroup index out of range");
  return BigInt(f2_of_member_u64(l, h));
}

std::vector<BigInt> permuting_pairs_below(const SubgroupLattice& l) {
  const std::size_t m = l.size();
  std::vector<std::int64_t> counts(m);
  for (std::size_t h = 0; h < m; ++h) {
    const auto d = static_cast<std::int64_t>(l.down(h).size());
    counts[h] = d * d;
  }
  // Pairs involving a normal subgroup always permute; only non-normal pairs
  // need the join test. A failing pair lies below exactly the members of
  // up(join).
  std::vector<std::size_t> non_normal;
  for (std::size_t i = 0; i < m; ++i) {
    if (!l.is_normal(i)) non_normal.push_back(i);
  }
  for (std::size_t a : non_normal) {
    for (std::size_t b : non_normal) {
      if (l.permutes(a, b)) continue;
      for (std::size_t h : l.up(l.join(a, b))) --counts[h];
    }
  }
  std::vector<BigInt> out(m);
  for (std::size_t h = 0; h < m; ++h) out[h] = counts[h];
  return out;
}

BigInt count_permuting_pairs(const SubgroupLattice& l) { return permuting_pairs_below(l).back(); }

SdResult sd(const SubgroupLattice& l) {
  SdResult r;
  r.f2_sum = BigInt(parallel_sum(l.size(), l.threads(),
                                 [&](std::size_t h) { return f2_of_member_u64(l, h); }, 1));
  r.permuting_pairs = count_permuting_pairs(l);
  if (r.f2_sum != r.permuting_pairs) {
    throw InvariantError("sd routes disagree for " + l.group().label() + ": F2 sum " +
                         r.f2_sum.str() + " vs permuting pairs " + r.permuting_pairs.str());
  }
  r.lattice_size_squared = BigInt(l.size()) * l.size();
  r.value = BigRational(r.permuting_pairs, r.lattice_size_squared);
  return r;
}

}  // namespace facnum
