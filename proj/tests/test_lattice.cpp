#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "facnum/errors.hpp"
#include "facnum/exactform.hpp"
#include "facnum/lattice.hpp"
#include "oracle.hpp"

using namespace facnum;

namespace {

struct Case {
  std::string name;
  FiniteGroup g;
};

std::vector<Case> small_groups() {
  std::vector<Case> out;
  auto add = [&](FiniteGroup g) { out.push_back({g.label(), std::move(g)}); };
  add(build_named(Cyclic{2, 0}));
  add(build_named(Cyclic{5, 1}));
  add(build_named(Cyclic{2, 3}));
  add(build_named(ElementaryAbelian{2, 3}));
  add(build_abelian(PartitionType(2, {1, 2})));
  add(build_named(Dihedral8{}));
  add(build_named(Quaternion8{}));
  add(oracle::symmetric(3));
  add(oracle::symmetric(4));
  add(build_named(ElementaryAbelian{2, 4}));
  add(build_abelian(PartitionType(2, {2, 2})));
  add(build_abelian(PartitionType(2, {1, 1, 2})));
  add(build_abelian(PartitionType(3, {1, 2})));
  add(build_named(ModularM{3}));
  add(build_named(HeisenbergE{3}));
  add(build_named(ElementaryAbelian{3, 3}));
  add(build_abelian(PartitionType(2, {1, 1, 1, 2})));
  return out;
}

std::vector<Element> bits_to_members(const SubgroupLattice& l, std::size_t i) {
  return l.subgroup(i).members().members();
}

}  // namespace

class LatticeOracle : public ::testing::TestWithParam<std::size_t> {};

TEST_P(LatticeOracle, MatchesNaiveEnumerationAndCounts) {
  const Case c = small_groups()[GetParam()];
  SCOPED_TRACE(c.name);
  const SubgroupLattice l = enumerate_subgroups(c.g);
  const auto naive = oracle::subgroups(c.g);

  std::set<std::vector<bool>> expect(naive.begin(), naive.end());
  std::set<std::vector<bool>> got;
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::vector<bool> m(c.g.order(), false);
    for (Element e : bits_to_members(l, i)) m[e] = true;
    got.insert(m);
  }
  EXPECT_EQ(got, expect);
  EXPECT_EQ(l.size(), naive.size());

  EXPECT_EQ(f2_bruteforce(l), BigInt(oracle::f2(c.g, naive)));
  EXPECT_EQ(list_factorizations(l).size(), oracle::f2(c.g, naive));
  if (c.g.order() <= 32) {
    EXPECT_EQ(count_permuting_pairs(l), BigInt(oracle::permuting_pairs(c.g, naive)));
  }
  EXPECT_EQ(mobius_from_bottom(l).back(), BigInt(oracle::mobius_bottom_top(naive)));
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, LatticeOracle, ::testing::Range<std::size_t>(0, 17));

TEST(Lattice, CanonicalOrdering) {
  const SubgroupLattice l = enumerate_subgroups(build_named(Dihedral8{}));
  ASSERT_EQ(l.size(), 10u);
  EXPECT_EQ(l.order_of(l.trivial_index()), 1u);
  EXPECT_EQ(l.order_of(l.full_index()), 8u);
  for (std::size_t i = 1; i < l.size(); ++i) {
    EXPECT_LE(l.order_of(i - 1), l.order_of(i));
    if (l.order_of(i - 1) == l.order_of(i)) {
      EXPECT_EQ(compare_numeric(l.bits(i - 1), l.bits(i)), std::strong_ordering::less);
    }
  }
}

TEST(Lattice, ClosedUnderIntersection) {
  for (const Case& c : small_groups()) {
    if (c.g.order() > 32) continue;
    const SubgroupLattice l = enumerate_subgroups(c.g);
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = 0; b < l.size(); ++b) {
        const Bitset both = l.subgroup(a).members() & l.subgroup(b).members();
        const auto idx = l.index_of(both);
        ASSERT_TRUE(idx.has_value()) << c.name;
        EXPECT_EQ(*idx, l.meet(a, b));
        const std::size_t j = l.join(a, b);
        EXPECT_TRUE(l.contains(a, j) && l.contains(b, j));
        for (std::size_t k : l.up(a)) {
          if (l.contains(b, k)) EXPECT_TRUE(l.contains(j, k));
        }
      }
    }
  }
}

TEST(Lattice, UpAndDownSetsAreConsistent) {
  const SubgroupLattice l = enumerate_subgroups(oracle::symmetric(4));
  EXPECT_EQ(l.size(), 30u);
  for (std::size_t h = 0; h < l.size(); ++h) {
    for (std::size_t k = 0; k < l.size(); ++k) {
      const auto up = l.up(h);
      const auto down = l.down(k);
      const bool in_up = std::binary_search(up.begin(), up.end(), k);
      const bool in_down = std::binary_search(down.begin(), down.end(), h);
      EXPECT_EQ(in_up, l.contains(h, k));
      EXPECT_EQ(in_down, l.contains(h, k));
    }
  }
  std::size_t normals = 0;
  for (std::size_t h = 0; h < l.size(); ++h) normals += l.is_normal(h);
  EXPECT_EQ(normals, 4u);  // 1, V4, A4, S4
}

TEST(Mobius, RecursionSumsToZeroBelowTop) {
  for (const Case& c : small_groups()) {
    const SubgroupLattice l = enumerate_subgroups(c.g);
    const MobiusTable t = mobius_to_top(l);
    EXPECT_TRUE(check_mobius_recursion(l, t)) << c.name;
    EXPECT_EQ(t.mu_to_top[l.full_index()], 1);
    // mu(1, G) is the same number whichever end the recursion starts from.
    EXPECT_EQ(t.mu_to_top[0], mobius_from_bottom(l).back()) << c.name;
  }
}

TEST(Mobius, HallValuesOnPGroups) {
  EXPECT_EQ(mobius_from_bottom(enumerate_subgroups(build_named(ElementaryAbelian{2, 4}))).back(), 64);
  EXPECT_EQ(mobius_from_bottom(enumerate_subgroups(build_named(ElementaryAbelian{3, 3}))).back(), -27);
  for (const Case& c : small_groups()) {
    if (!prime_power_order(c.g.order())) {
      EXPECT_THROW(verify_hall(c.g), DomainError);
      continue;
    }
    const HallReport r = verify_hall(c.g);
    EXPECT_TRUE(r.passed()) << c.name;
  }
  // S4 is not a p-group; value from an independent enumeration.
  EXPECT_EQ(mobius_from_bottom(enumerate_subgroups(oracle::symmetric(4))).back(), -12);
}

TEST(Factorizations, KnownValues) {
  auto f2 = [](const FiniteGroup& g) { return f2_bruteforce(enumerate_subgroups(g)); };
  EXPECT_EQ(f2(build_named(ElementaryAbelian{2, 3})), 129);
  EXPECT_EQ(f2(build_abelian(PartitionType(2, {1, 2}))), 29);
  EXPECT_EQ(f2(build_named(Cyclic{2, 3})), 7);
  EXPECT_EQ(f2(build_named(Dihedral8{})), 41);
  EXPECT_EQ(f2(build_named(Quaternion8{})), 17);
  EXPECT_EQ(f2(build_named(HeisenbergE{3})), 121);
  EXPECT_EQ(f2(build_named(ModularM{3})), 49);
}

TEST(Factorizations, ThreadCountDoesNotChangeResults) {
  const FiniteGroup g = build_named(ElementaryAbelian{2, 5});
  const BigInt one = f2_bruteforce(enumerate_subgroups(g, {kDefaultMaxSubgroups, 1}));
  const BigInt four = f2_bruteforce(enumerate_subgroups(g, {kDefaultMaxSubgroups, 4}));
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, f2_elementary(5, 2));
}

TEST(Factorizations, MemberCountsSumToPermutingPairs) {
  for (const Case& c : small_groups()) {
    const SubgroupLattice l = enumerate_subgroups(c.g);
    EXPECT_EQ(f2_of_member(l, l.full_index()), f2_bruteforce(l));
    const auto below = permuting_pairs_below(l);
    EXPECT_EQ(below.back(), count_permuting_pairs(l)) << c.name;
    BigInt sum = 0;
    for (std::size_t h = 0; h < l.size(); ++h) sum += f2_of_member(l, h);
    EXPECT_EQ(sum, below.back()) << c.name;
  }
}

TEST(CommutativityDegree, KnownValues) {
  const SdResult d8 = sd(enumerate_subgroups(build_named(Dihedral8{})));
  EXPECT_EQ(d8.value, BigRational(23, 25));
  EXPECT_EQ(d8.permuting_pairs, 92);
  EXPECT_EQ(d8.lattice_size_squared, 100);
  EXPECT_EQ(sd(enumerate_subgroups(build_named(Quaternion8{}))).value, 1);
  for (const Case& c : small_groups()) {
    const SdResult r = sd(enumerate_subgroups(c.g));
    if (c.g.is_commutative()) EXPECT_EQ(r.value, 1) << c.name;
    EXPECT_EQ(r.f2_sum, r.permuting_pairs);
  }
  EXPECT_LT(sd(enumerate_subgroups(oracle::symmetric(3))).value, 1);
}

TEST(Inversion, WorkedRankTwoDecomposition) {
  const InversionReport r = verify_inversion(build_abelian(PartitionType(2, {1, 2})));
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.eq2_quotient_form.has_value());
  EXPECT_EQ(*r.eq2_quotient_form, 29);
  EXPECT_EQ(*r.eq2_lattice_form, 29);
  BigInt by_order[9];
  for (const auto& t : r.quotient_terms) {
    by_order[t.order] += BigInt(t.quotient_lattice_size * t.quotient_lattice_size) * t.mu;
  }
  EXPECT_EQ(by_order[1], 64);
  EXPECT_EQ(by_order[2], -43);
  EXPECT_EQ(by_order[4], 8);
  EXPECT_EQ(by_order[8], 0);
}

TEST(Inversion, PassesOnSmallGroups) {
  for (const Case& c : small_groups()) {
    const InversionReport r = verify_inversion(c.g);
    EXPECT_TRUE(r.passed()) << c.name;
    EXPECT_EQ(r.eq1_sum, r.f2_bruteforce);
    EXPECT_EQ(r.eq2_quotient_form.has_value(), c.g.is_commutative()) << c.name;
  }
}

TEST(Limits, SubgroupCapIsResourceError) {
  EXPECT_THROW(enumerate_subgroups(build_named(ElementaryAbelian{2, 5}), {100, 1}), ResourceError);
  EXPECT_NO_THROW(enumerate_subgroups(build_named(ElementaryAbelian{2, 5}), {374, 1}));
}

TEST(Properties, RelabelingInvariance) {
  std::mt19937 rng(20260101);
  for (const Case& c : small_groups()) {
    if (c.g.order() > 64) continue;
    const SubgroupLattice base = enumerate_subgroups(c.g);
    const BigInt f2 = f2_bruteforce(base);
    const BigInt mu = mobius_from_bottom(base).back();
    std::vector<Element> perm(c.g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      const SubgroupLattice l = enumerate_subgroups(relabel(c.g, perm));
      EXPECT_EQ(l.size(), base.size()) << c.name;
      EXPECT_EQ(f2_bruteforce(l), f2) << c.name;
      EXPECT_EQ(mobius_from_bottom(l).back(), mu) << c.name;
    }
  }
}

TEST(Export, JsonDocument) {
  const SubgroupLattice l = enumerate_subgroups(build_named(Dihedral8{}));
  const auto j = nlohmann::json::parse(lattice_to_json(l));
  EXPECT_EQ(j.at("label"), "D8");
  EXPECT_EQ(j.at("order"), "8");
  EXPECT_EQ(j.at("f2"), "41");
  EXPECT_EQ(j.at("sd"), "23/25");
  ASSERT_EQ(j.at("subgroups").size(), 10u);
  EXPECT_EQ(j.at("subgroups")[0].at("bits"), "01");
  EXPECT_EQ(j.at("subgroups")[9].at("bits"), "ff");
  EXPECT_EQ(j.at("mobius_to_top")[9], "1");
  EXPECT_EQ(j.at("subgroup_count"), "10");
}
