#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "facnum/errors.hpp"
#include "facnum/group_spec.hpp"

using namespace facnum;

TEST(GroupSpec, CanonicalRoundTrip) {
  for (const char* text : {"abelian:p=2,type=1,2", "abelian:p=3,type=2,1,1", "named:D8", "named:Q8",
                           "named:M:p=3", "named:E:p=5", "named:Cyclic:p=2:n=3", "named:Elem:n=4:p=2",
                           "table:/tmp/x.txt"}) {
    const GroupSpec s = GroupSpec::parse(text);
    const GroupSpec again = GroupSpec::parse(s.canonical());
    EXPECT_EQ(again.canonical(), s.canonical()) << text;
  }
  EXPECT_EQ(GroupSpec::parse("abelian:p=3,type=2,1,1").canonical(), "abelian:p=3,type=1,1,2");
  EXPECT_EQ(GroupSpec::parse("named:Elem:n=4:p=2").canonical(), "named:Elem:p=2:n=4");
}

TEST(GroupSpec, BuildsExpectedGroups) {
  EXPECT_EQ(GroupSpec::parse("abelian:p=2,type=1,2").build().label(), "Z2xZ4");
  EXPECT_EQ(GroupSpec::parse("named:E:p=3").build().order(), 27u);
  EXPECT_EQ(GroupSpec::parse("named:Cyclic:p=2:n=3").build().order(), 8u);
  EXPECT_EQ(GroupSpec::parse("abelian:p=2,type=").build().order(), 1u);
}

TEST(GroupSpec, TableSpecLoadsFile) {
  const std::string path = ::testing::TempDir() + "facnum_spec_z2.txt";
  {
    std::ofstream f(path);
    f << "2\n0 1\n1 0\n";
  }
  EXPECT_EQ(GroupSpec::parse("table:" + path).build().order(), 2u);
  std::remove(path.c_str());
}

TEST(GroupSpec, RejectsMalformedInput) {
  EXPECT_THROW(GroupSpec::parse("D8"), ParseError);
  EXPECT_THROW(GroupSpec::parse("foo:bar"), ParseError);
  EXPECT_THROW(GroupSpec::parse("named:S3"), ParseError);
  EXPECT_THROW(GroupSpec::parse("abelian:type=1,2"), ParseError);
  EXPECT_THROW(GroupSpec::parse("abelian:p=two,type=1"), ParseError);
  EXPECT_THROW(GroupSpec::parse("named:M:p=3:q=1"), ParseError);
  EXPECT_THROW(GroupSpec::parse("table:"), ParseError);
}

TEST(GroupSpec, RejectsMissingOrExtraParameters) {
  EXPECT_THROW(GroupSpec::parse("named:M"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("named:D8:p=2"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("named:Cyclic:p=2"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("named:E:p=3:n=2"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("named:E:p=9"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("abelian:p=4,type=1"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("abelian:p=2,type=0,1"), ValidationError);
  EXPECT_THROW(GroupSpec::parse("named:E:p=2").build(), DomainError);
}
