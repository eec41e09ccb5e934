#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "facnum/errors.hpp"
#include "facnum/group.hpp"
#include "oracle.hpp"

using namespace facnum;

namespace {

std::size_t count_of_order(const FiniteGroup& g, std::size_t k) {
  std::size_t c = 0;
  for (Element e = 0; e < g.order(); ++e) c += g.element_order(e) == k;
  return c;
}

std::size_t center_size(const FiniteGroup& g) {
  std::size_t c = 0;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    c += central;
  }
  return c;
}

}  // namespace

TEST(Tables, IdentityMovedToZero) {
  // Z3 with identity stored at index 2.
  const FiniteGroup g = FiniteGroup::from_table(3, {1, 2, 0, 2, 0, 1, 0, 1, 2}, "z3");
  for (Element x = 0; x < 3; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
  }
  EXPECT_EQ(g.element_order(1), 3u);
  EXPECT_TRUE(g.is_commutative());
}

TEST(Tables, RejectsNonAssociativeLoop) {
  // A Latin square with identity where every element squares to 1: a loop of order 5.
  const std::vector<Element> t = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                  3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup::from_table(5, t, "loop"), ValidationError);
}

TEST(Tables, RejectsBrokenTables) {
  EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 1}, "x"), ValidationError);
  EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 2}, "x"), ValidationError);
  EXPECT_THROW(FiniteGroup::from_table(2, {1, 0, 0, 0}, "x"), ValidationError);
  EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1}, "x"), ValidationError);
  EXPECT_THROW(FiniteGroup::from_table(0, {}, "x"), ValidationError);
}

TEST(Tables, OrderCapIsResourceError) {
  EXPECT_THROW(build_named(ElementaryAbelian{2, 5}, 16), ResourceError);
  EXPECT_NO_THROW(build_named(ElementaryAbelian{2, 4}, 16));
}

TEST(CayleyFile, RoundTrip) {
  for (const FiniteGroup& g : {build_named(Dihedral8{}), build_named(HeisenbergE{3}), oracle::symmetric(3)}) {
    std::stringstream s;
    write_cayley_table(g, s);
    const FiniteGroup back = load_cayley_table(s, g.label());
    ASSERT_EQ(back.order(), g.order());
    EXPECT_TRUE(std::equal(back.table().begin(), back.table().end(), g.table().begin()));
  }
}

TEST(CayleyFile, AcceptsCommentsAndCrlf) {
  std::istringstream in("# Z2\n# second comment\r\n2\r\n0 1\r\n1 0\n\n");
  const FiniteGroup g = load_cayley_table(in);
  EXPECT_EQ(g.order(), 2u);
}

TEST(CayleyFile, ParseErrorsCarryLineNumbers) {
  auto fails = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      load_cayley_table(in);
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
      return;
    }
    ADD_FAILURE() << "no ParseError for: " << text;
  };
  fails("2\n0 1\n1\n", "line 3");
  fails("2\n0 1\n1 x\n", "line 3");
  fails("2\n0\t1\n1 0\n", "line 2");
  fails("2\n0 1\n1 0\n1 0\n", "line 4");
  fails("two\n", "line 1");
  fails("", "line 1");
  std::istringstream bad_value("2\n0 1\n1 5\n");
  EXPECT_THROW(load_cayley_table(bad_value), ValidationError);
}

TEST(CayleyFile, MissingFile) {
  EXPECT_THROW(load_cayley_table_file("/nonexistent/facnum.txt"), ValidationError);
}

TEST(Named, SmallNonAbelianGroups) {
  const FiniteGroup d8 = build_named(Dihedral8{});
  const FiniteGroup q8 = build_named(Quaternion8{});
  EXPECT_EQ(d8.label(), "D8");
  EXPECT_EQ(q8.label(), "Q8");
  EXPECT_FALSE(d8.is_commutative());
  EXPECT_FALSE(q8.is_commutative());
  EXPECT_EQ(count_of_order(d8, 2), 5u);
  EXPECT_EQ(count_of_order(q8, 2), 1u);
  EXPECT_EQ(count_of_order(q8, 4), 6u);
  EXPECT_EQ(center_size(d8), 2u);
  EXPECT_EQ(center_size(q8), 2u);
}

TEST(Named, OrderPCubedFamilies) {
  for (Prime p : {3, 5, 7}) {
    const FiniteGroup m = build_named(ModularM{p});
    const FiniteGroup e = build_named(HeisenbergE{p});
    EXPECT_EQ(m.order(), p * p * p);
    EXPECT_EQ(e.order(), p * p * p);
    EXPECT_FALSE(m.is_commutative());
    EXPECT_FALSE(e.is_commutative());
    EXPECT_EQ(count_of_order(m, p * p), p * p * p - p * p);
    EXPECT_EQ(count_of_order(e, p), p * p * p - 1);
    EXPECT_EQ(center_size(m), p);
    EXPECT_EQ(center_size(e), p);
  }
  EXPECT_EQ(build_named(ModularM{3}).label(), "M(27)");
  EXPECT_EQ(build_named(HeisenbergE{3}).label(), "E(27)");
  EXPECT_THROW(build_named(ModularM{2}), DomainError);
  EXPECT_THROW(build_named(HeisenbergE{2}), DomainError);
}

TEST(Named, AbelianTypes) {
  const FiniteGroup g = build_abelian(PartitionType(2, {1, 2}));
  EXPECT_EQ(g.label(), "Z2xZ4");
  EXPECT_EQ(g.order(), 8u);
  EXPECT_TRUE(g.is_commutative());
  EXPECT_EQ(count_of_order(g, 4), 4u);
  EXPECT_EQ(build_named(Cyclic{2, 3}).label(), "Z8");
  EXPECT_EQ(build_named(ElementaryAbelian{2, 3}).label(), "Z2^3");
  EXPECT_EQ(build_named(Cyclic{5, 0}).order(), 1u);
  EXPECT_EQ(count_of_order(build_named(Cyclic{3, 3}), 27), 18u);
}

TEST(Closure, GeneratedSubgroups) {
  const FiniteGroup s3 = oracle::symmetric(3);
  std::vector<Element> all(s3.order());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(closure(s3, all).order(), 6u);
  std::vector<Element> none;
  EXPECT_EQ(closure(s3, none).order(), 1u);
  for (Element x = 1; x < s3.order(); ++x) {
    const Element one[] = {x};
    EXPECT_EQ(closure(s3, one).order(), s3.element_order(x));
  }
  GeneratedSubgroup h = trivial_subgroup(s3);
  for (Element x = 1; x < s3.order(); ++x) h = extend(s3, h, x);
  EXPECT_EQ(h.members.size(), 6u);
  EXPECT_LE(h.gens.size(), 2u);
}

TEST(Closure, NormalityAndQuotients) {
  const FiniteGroup d8 = build_named(Dihedral8{});
  Subgroup center;
  Subgroup reflection;
  for (Element x = 1; x < 8; ++x) {
    const Element one[] = {x};
    const Subgroup c = closure(d8, one);
    if (c.order() != 2) continue;
    bool central = true;
    for (Element y = 0; y < 8; ++y) central = central && d8.mul(x, y) == d8.mul(y, x);
    (central ? center : reflection) = c;
  }
  ASSERT_EQ(center.order(), 2u);
  ASSERT_EQ(reflection.order(), 2u);
  EXPECT_TRUE(is_normal(d8, center));
  EXPECT_FALSE(is_normal(d8, reflection));
  const FiniteGroup q = quotient(d8, center);
  EXPECT_EQ(q.order(), 4u);
  const auto info = is_elementary_abelian(q);
  ASSERT_TRUE(info.has_value());
  EXPECT_EQ(info->p, 2u);
  EXPECT_EQ(info->n, 2u);
  EXPECT_THROW(quotient(d8, reflection), DomainError);
}

TEST(Closure, PrimePowerDetection) {
  EXPECT_FALSE(prime_power_order(12).has_value());
  EXPECT_EQ(prime_power_order(81)->p, 3u);
  EXPECT_EQ(prime_power_order(81)->n, 4u);
  EXPECT_FALSE(is_elementary_abelian(build_named(Cyclic{2, 2})).has_value());
  EXPECT_FALSE(is_elementary_abelian(build_named(HeisenbergE{3})).has_value());
  EXPECT_EQ(is_elementary_abelian(build_named(Cyclic{2, 0}))->p, 0u);
}

TEST(Relabel, PreservesStructure) {
  const FiniteGroup g = build_named(Quaternion8{});
  std::mt19937 rng(7);
  std::vector<Element> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  const FiniteGroup h = relabel(g, perm);
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) EXPECT_EQ(h.mul(perm[a], perm[b]), perm[g.mul(a, b)]);
  }
  std::swap(perm[0], perm[1]);
  EXPECT_THROW(relabel(g, perm), DomainError);
}
