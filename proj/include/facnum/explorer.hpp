#pragma once

// Comparative claims over catalogs of p-groups of a fixed order: the
// extremal statement for n <= 3, instance checks of the elementary-abelian
// upper bound for larger n, and the partition-order monotonicity table.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facnum/bigint.hpp"
#include "facnum/exactform.hpp"
#include "facnum/lattice.hpp"

namespace facnum {

enum class OutputFormat { Table, Json, Csv };

struct ExploreOptions {
  LatticeOptions lattice;
  std::size_t max_order = kDefaultMaxOrder;
};

struct Partition {
  std::vector<unsigned> nondecreasing;
  std::vector<unsigned> nonincreasing;
};

/// Every partition of n, generated in descending lexicographic order of the
/// nonincreasing form ({n} first, {1,...,1} last).
std::vector<Partition> partitions(unsigned n);

struct CatalogResult {
  std::string label;
  std::string source;  // "abelian", "named" or a table path
  std::size_t order = 0;
  std::size_t lattice_size = 0;
  BigInt f2;
  bool elementary = false;
  bool cyclic = false;
};

struct Theorem5Report {
  Prime p = 0;
  unsigned n = 0;
  std::vector<CatalogResult> members;
  BigInt elementary_closed_form;  // f2_elementary(n, p)
  BigInt cyclic_closed_form;      // 2n + 1
  bool elementary_matches_closed_form = false;
  bool strict_max_at_elementary = false;
  bool cyclic_min = false;
  bool verified() const {
    return elementary_matches_closed_form && strict_max_at_elementary && cyclic_min;
  }
};

/// n must be 2 or 3; the catalogs list every group of order p^n.
Theorem5Report check_theorem5(Prime p, unsigned n, const ExploreOptions& options = {});

struct Conjecture6Report {
  Prime p = 0;
  unsigned n = 0;
  BigInt bound;  // f2_elementary(n, p)
  std::vector<CatalogResult> members;
  std::vector<CatalogResult> counterexamples;
  bool cyclic_min = false;
  bool coverage_complete = false;
  std::string coverage;
  bool verified() const { return counterexamples.empty() && cyclic_min; }
};

/// Every abelian type of order p^n, the named non-abelian groups when n = 3,
/// plus each supplied Cayley table (DomainError if one has the wrong order).
Conjecture6Report check_conjecture6(Prime p, unsigned n, const std::vector<std::string>& tables,
                                    const ExploreOptions& options = {});

struct MonotonicityRow {
  Partition partition;
  BigInt f2;
  std::vector<std::pair<std::string, BigInt>> closed_forms;
  std::size_t lattice_size = 0;
  std::size_t rank_nondecreasing = 0;  // 1-based position in ascending lex order
  std::size_t rank_nonincreasing = 0;
};

struct ConventionVerdict {
  bool monotone = true;  // F2 nonincreasing along ascending lex order
  bool strict = true;
  /// Row indices (earlier, later) of the first adjacent pair where F2 rises.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

struct MonotonicityReport {
  Prime p = 0;
  unsigned n = 0;
  std::vector<MonotonicityRow> rows;
  ConventionVerdict nondecreasing;
  ConventionVerdict nonincreasing;
  bool closed_forms_agree = true;
  /// A counterexample needs a violation under both conventions.
  bool refuted() const { return !nondecreasing.monotone && !nonincreasing.monotone; }
};

MonotonicityReport open_problem_table(Prime p, unsigned n, const ExploreOptions& options = {});

std::string render(const Theorem5Report& r, OutputFormat f);
std::string render(const Conjecture6Report& r, OutputFormat f);
std::string render(const MonotonicityReport& r, OutputFormat f);

std::string partition_string(const std::vector<unsigned>& parts);

}  // namespace facnum
