#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <map>

#include <json.hpp>

#include "facnum/errors.hpp"
#include "facnum/explorer.hpp"

using namespace facnum;

namespace {

std::map<std::string, BigInt> values(const std::vector<CatalogResult>& rows) {
  std::map<std::string, BigInt> out;
  for (const auto& r : rows) out[r.label] = r.f2;
  return out;
}

}  // namespace

TEST(Partitions, OrderAndForms) {
  const auto ps = partitions(4);
  ASSERT_EQ(ps.size(), 5u);
  EXPECT_EQ(ps.front().nonincreasing, (std::vector<unsigned>{4}));
  EXPECT_EQ(ps.back().nonincreasing, (std::vector<unsigned>{1, 1, 1, 1}));
  EXPECT_EQ(ps[1].nonincreasing, (std::vector<unsigned>{3, 1}));
  EXPECT_EQ(ps[1].nondecreasing, (std::vector<unsigned>{1, 3}));
  EXPECT_EQ(partitions(1).size(), 1u);
  EXPECT_EQ(partitions(6).size(), 11u);
  EXPECT_EQ(partition_string({2, 1, 1}), "(2,1,1)");
}

TEST(ExtremalCheck, OrderEight) {
  const Theorem5Report r = check_theorem5(2, 3);
  EXPECT_TRUE(r.verified());
  const auto v = values(r.members);
  EXPECT_EQ(v.at("Z2^3"), 129);
  EXPECT_EQ(v.at("Z2xZ4"), 29);
  EXPECT_EQ(v.at("Z8"), 7);
  EXPECT_EQ(v.at("D8"), 41);
  EXPECT_EQ(v.at("Q8"), 17);
}

TEST(ExtremalCheck, OrderTwentySeven) {
  const Theorem5Report r = check_theorem5(3, 3);
  EXPECT_TRUE(r.verified());
  const auto v = values(r.members);
  EXPECT_EQ(v.at("Z3^3"), 445);
  EXPECT_EQ(v.at("Z3xZ9"), 49);
  EXPECT_EQ(v.at("M(27)"), 49);
  EXPECT_EQ(v.at("E(27)"), 121);
  EXPECT_EQ(v.at("Z27"), 7);
}

TEST(ExtremalCheck, OrderPSquared) {
  for (Prime p : {2, 3, 5}) {
    const Theorem5Report r = check_theorem5(p, 2);
    EXPECT_TRUE(r.verified());
    EXPECT_EQ(r.members.size(), 2u);
  }
  EXPECT_THROW(check_theorem5(2, 4), DomainError);
  EXPECT_THROW(check_theorem5(4, 2), ValidationError);
}

TEST(UpperBound, AbelianCatalogAndTables) {
  const Conjecture6Report r = check_conjecture6(2, 4, {});
  EXPECT_TRUE(r.verified());
  EXPECT_FALSE(r.coverage_complete);
  EXPECT_EQ(r.bound, 1983);
  EXPECT_EQ(r.members.size(), 5u);

  const std::string path = ::testing::TempDir() + "facnum_d8.txt";
  {
    std::ofstream f(path);
    write_cayley_table(build_named(Dihedral8{}), f);
  }
  const Conjecture6Report with_table = check_conjecture6(2, 3, {path});
  EXPECT_TRUE(with_table.verified());
  EXPECT_TRUE(with_table.coverage_complete);
  EXPECT_EQ(with_table.members.size(), 6u);
  EXPECT_THROW(check_conjecture6(2, 4, {path}), DomainError);
  std::remove(path.c_str());
}

TEST(Monotonicity, OrderSixteenTable) {
  const MonotonicityReport r = open_problem_table(2, 4);
  ASSERT_EQ(r.rows.size(), 5u);
  std::map<std::string, BigInt> by;
  for (const auto& row : r.rows) by[partition_string(row.partition.nonincreasing)] = row.f2;
  EXPECT_EQ(by.at("(1,1,1,1)"), 1983);
  EXPECT_EQ(by.at("(2,1,1)"), 279);
  EXPECT_EQ(by.at("(2,2)"), 83);
  EXPECT_EQ(by.at("(3,1)"), 43);
  EXPECT_EQ(by.at("(4)"), 9);
  EXPECT_TRUE(r.closed_forms_agree);
  EXPECT_TRUE(r.nonincreasing.monotone);
  EXPECT_FALSE(r.nondecreasing.monotone);
  ASSERT_TRUE(r.nondecreasing.violation.has_value());
  const auto [a, b] = *r.nondecreasing.violation;
  EXPECT_EQ(partition_string(r.rows[a].partition.nondecreasing), "(1,3)");
  EXPECT_EQ(partition_string(r.rows[b].partition.nondecreasing), "(2,2)");
  EXPECT_FALSE(r.refuted());
}

TEST(Monotonicity, OrderTwentySeven) {
  const MonotonicityReport r = open_problem_table(3, 3);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_TRUE(r.nonincreasing.monotone && r.nonincreasing.strict);
  EXPECT_TRUE(r.nondecreasing.monotone);
}

TEST(Rendering, JsonAndCsvAreWellFormed) {
  const MonotonicityReport r = open_problem_table(2, 3);
  const auto j = nlohmann::json::parse(render(r, OutputFormat::Json));
  EXPECT_EQ(j.at("rows").size(), 3u);
  EXPECT_TRUE(j.at("rows")[0].at("f2").is_string());
  const std::string csv = render(r, OutputFormat::Csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  const std::string table = render(check_theorem5(2, 2), OutputFormat::Table);
  EXPECT_NE(table.find("verified"), std::string::npos);
  EXPECT_NO_THROW(nlohmann::json::parse(render(check_theorem5(3, 3), OutputFormat::Json)));
  EXPECT_NO_THROW(nlohmann::json::parse(render(check_conjecture6(2, 3, {}), OutputFormat::Json)));
}
