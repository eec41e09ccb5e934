#include "facnum/explorer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "facnum/errors.hpp"
#include "facnum/group.hpp"

namespace facnum {

namespace {

using Json = nlohmann::ordered_json;

struct CatalogEntry {
  std::string source;
  std::function<FiniteGroup()> build;
  bool elementary = false;
  bool cyclic = false;
};

CatalogResult run_entry(const CatalogEntry& e, const ExploreOptions& o) {
  const FiniteGroup g = e.build();
  const SubgroupLattice l = enumerate_subgroups(g, o.lattice);
  CatalogResult r;
  r.label = g.label();
  r.source = e.source;
  r.order = g.order();
  r.lattice_size = l.size();
  r.f2 = f2_bruteforce(l);
  r.elementary = e.elementary;
  r.cyclic = e.cyclic;
  return r;
}

std::vector<CatalogEntry> abelian_catalog(Prime p, unsigned n, const ExploreOptions& o) {
  std::vector<CatalogEntry> out;
  for (const Partition& part : partitions(n)) {
    const PartitionType t(p, part.nondecreasing);
    out.push_back({"abelian", [t, o] { return build_abelian(t, o.max_order); }, t.is_elementary(),
                   t.is_cyclic()});
  }
  // Elementary abelian first, cyclic last.
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<CatalogEntry> named_order_p3(Prime p, const ExploreOptions& o) {
  if (p == 2) {
    return {{"named", [] { return build_named(Dihedral8{}); }},
            {"named", [] { return build_named(Quaternion8{}); }}};
  }
  return {{"named", [p, o] { return build_named(ModularM{p}, o.max_order); }},
          {"named", [p, o] { return build_named(HeisenbergE{p}, o.max_order); }}};
}

void check_cyclic_min(const std::vector<CatalogResult>& members, unsigned n, bool& ok) {
  const BigInt floor = f2_cyclic(n);
  ok = true;
  bool seen = false;
  for (const auto& m : members) {
    if (m.f2 < floor) ok = false;
    if (m.cyclic) {
      seen = true;
      if (m.f2 != floor) ok = false;
    }
  }
  ok = ok && seen;
}

Json member_json(const CatalogResult& m) {
  Json j;
  j["label"] = m.label;
  j["source"] = m.source;
  j["order"] = std::to_string(m.order);
  j["subgroups"] = std::to_string(m.lattice_size);
  j["f2"] = m.f2.str();
  return j;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c != 0) out << ',';
      const bool quote = r[c].find_first_of(",\"") != std::string::npos;
      if (quote) {
        out << '"';
        for (char ch : r[c]) out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
        out << '"';
      } else {
        out << r[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<std::string>> member_rows(const std::vector<CatalogResult>& members) {
  std::vector<std::vector<std::string>> rows{{"group", "source", "order", "subgroups", "F2"}};
  for (const auto& m : members) {
    rows.push_back({m.label, m.source, std::to_string(m.order), std::to_string(m.lattice_size), m.f2.str()});
  }
  return rows;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string partition_string(const std::vector<unsigned>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(unsigned n) {
  if (n < 1) throw DomainError("partitions requires n >= 1");
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned largest) {
    if (remaining == 0) {
      Partition p;
      p.nonincreasing = current;
      p.nondecreasing.assign(current.rbegin(), current.rend());
      out.push_back(std::move(p));
      return;
    }
    for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Theorem5Report check_theorem5(Prime p, unsigned n, const ExploreOptions& o) {
  require_prime(p);
  if (n != 2 && n != 3) throw DomainError("check_theorem5 covers n = 2 and n = 3 only");
  std::vector<CatalogEntry> catalog = abelian_catalog(p, n, o);
  if (n == 3) {
    for (auto& e : named_order_p3(p, o)) catalog.push_back(std::move(e));
  }

  Theorem5Report r;
  r.p = p;
  r.n = n;
  for (const auto& e : catalog) r.members.push_back(run_entry(e, o));
  r.elementary_closed_form = f2_elementary(n, p);
  r.cyclic_closed_form = f2_cyclic(n);

  const auto elem = std::find_if(r.members.begin(), r.members.end(),
                                 [](const CatalogResult& m) { return m.elementary; });
  r.elementary_matches_closed_form = elem != r.members.end() && elem->f2 == r.elementary_closed_form;
  r.strict_max_at_elementary = elem != r.members.end();
  for (const auto& m : r.members) {
    if (!m.elementary && elem != r.members.end() && m.f2 >= elem->f2) r.strict_max_at_elementary = false;
  }
  check_cyclic_min(r.members, n, r.cyclic_min);
  return r;
}

Conjecture6Report check_conjecture6(Prime p, unsigned n, const std::vector<std::string>& tables,
                                    const ExploreOptions& o) {
  require_prime(p);
  if (n < 1) throw DomainError("check_conjecture6 requires n >= 1");
  std::vector<CatalogEntry> catalog = abelian_catalog(p, n, o);
  if (n == 3) {
    for (auto& e : named_order_p3(p, o)) catalog.push_back(std::move(e));
  }
  const BigInt expected_order = PartitionType(p, {n}).order();
  for (const std::string& path : tables) {
    catalog.push_back({path, [path, expected_order, o] {
                         FiniteGroup g = load_cayley_table_file(path, o.max_order);
                         if (BigInt(g.order()) != expected_order) {
                           throw DomainError("table '" + path + "' has order " +
                                             std::to_string(g.order()) + ", expected " +
                                             expected_order.str());
                         }
                         return g;
                       }});
  }

  Conjecture6Report r;
  r.p = p;
  r.n = n;
  r.bound = f2_elementary(n, p);
  for (const auto& e : catalog) r.members.push_back(run_entry(e, o));
  for (const auto& m : r.members) {
    if (m.f2 > r.bound) r.counterexamples.push_back(m);
  }
  check_cyclic_min(r.members, n, r.cyclic_min);

  const std::size_t abelian = partitions(n).size();
  if (n <= 2) {
    r.coverage_complete = true;
    r.coverage = "complete: every group of order p^" + std::to_string(n) + " is abelian (" +
                 std::to_string(abelian) + " types)";
  } else if (n == 3) {
    r.coverage_complete = true;
    r.coverage = "complete: the 3 abelian types and the 2 non-abelian groups of order p^3";
  } else {
    r.coverage = "partial: " + std::to_string(abelian) + " abelian types and " +
                 std::to_string(tables.size()) +
                 " supplied table(s); non-abelian groups of order p^" + std::to_string(n) +
                 " not supplied as tables are not covered";
  }
  return r;
}

MonotonicityReport open_problem_table(Prime p, unsigned n, const ExploreOptions& o) {
  require_prime(p);
  MonotonicityReport r;
  r.p = p;
  r.n = n;
  for (const Partition& part : partitions(n)) {
    const PartitionType t(p, part.nondecreasing);
    const FiniteGroup g = build_abelian(t, o.max_order);
    const SubgroupLattice l = enumerate_subgroups(g, o.lattice);
    MonotonicityRow row;
    row.partition = part;
    row.f2 = f2_bruteforce(l);
    row.lattice_size = l.size();
    const auto& a = t.alphas();
    if (t.is_cyclic()) row.closed_forms.emplace_back("cyclic", f2_cyclic(n));
    if (t.is_elementary()) row.closed_forms.emplace_back("elementary", f2_elementary(n, p));
    if (t.rank() == 2) {
      row.closed_forms.emplace_back("rank2", f2_rank2(p, a[0], a[1]));
      if (a[0] == 1) row.closed_forms.emplace_back("corollary4", f2_corollary4(p, a[1]));
    }
    for (const auto& [name, value] : row.closed_forms) {
      if (value != row.f2) r.closed_forms_agree = false;
    }
    r.rows.push_back(std::move(row));
  }

  auto rank_and_judge = [&r](auto key, std::size_t MonotonicityRow::*rank, ConventionVerdict& v) {
    std::vector<std::size_t> order(r.rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const auto& a = key(r.rows[x]);
      const auto& b = key(r.rows[y]);
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (std::size_t k = 0; k < order.size(); ++k) r.rows[order[k]].*rank = k + 1;
    for (std::size_t k = 1; k < order.size(); ++k) {
      const BigInt& prev = r.rows[order[k - 1]].f2;
      const BigInt& next = r.rows[order[k]].f2;
      if (next >= prev) v.strict = false;
      if (next > prev && v.monotone) {
        v.monotone = false;
        v.violation = std::make_pair(order[k - 1], order[k]);
      }
    }
  };
  rank_and_judge([](const MonotonicityRow& row) -> const std::vector<unsigned>& {
    return row.partition.nondecreasing;
  }, &MonotonicityRow::rank_nondecreasing, r.nondecreasing);
  rank_and_judge([](const MonotonicityRow& row) -> const std::vector<unsigned>& {
    return row.partition.nonincreasing;
  }, &MonotonicityRow::rank_nonincreasing, r.nonincreasing);
  return r;
}

// Rendering -----------------------------------------------------------------

std::string render(const Theorem5Report& r, OutputFormat f) {
  if (f == OutputFormat::Json) {
    Json j;
    j["check"] = "theorem5";
    j["p"] = std::to_string(r.p);
    j["n"] = std::to_string(r.n);
    Json members = Json::array();
    for (const auto& m : r.members) members.push_back(member_json(m));
    j["members"] = std::move(members);
    j["elementary_closed_form"] = r.elementary_closed_form.str();
    j["cyclic_closed_form"] = r.cyclic_closed_form.str();
    j["elementary_matches_closed_form"] = r.elementary_matches_closed_form;
    j["strict_max_at_elementary"] = r.strict_max_at_elementary;
    j["cyclic_min"] = r.cyclic_min;
    j["verdict"] = r.verified() ? "verified" : "violated";
    return j.dump(2) + "\n";
  }
  auto rows = member_rows(r.members);
  if (f == OutputFormat::Csv) return csv(rows);
  std::ostringstream out;
  out << "groups of order " << r.p << "^" << r.n << "\n" << aligned(rows);
  out << "closed form F2(Z" << r.p << "^" << r.n << ") = " << r.elementary_closed_form
      << " (brute force agrees: " << yes_no(r.elementary_matches_closed_form) << ")\n";
  out << "strict maximum at the elementary abelian group: " << yes_no(r.strict_max_at_elementary) << "\n";
  out << "cyclic minimum 2n+1 = " << r.cyclic_closed_form << ": " << yes_no(r.cyclic_min) << "\n";
  out << "verdict: " << (r.verified() ? "verified" : "violated") << "\n";
  return out.str();
}

std::string render(const Conjecture6Report& r, OutputFormat f) {
  if (f == OutputFormat::Json) {
    Json j;
    j["check"] = "conjecture6";
    j["p"] = std::to_string(r.p);
    j["n"] = std::to_string(r.n);
    j["bound"] = r.bound.str();
    Json members = Json::array();
    for (const auto& m : r.members) members.push_back(member_json(m));
    j["members"] = std::move(members);
    Json bad = Json::array();
    for (const auto& m : r.counterexamples) bad.push_back(member_json(m));
    j["counterexamples"] = std::move(bad);
    j["cyclic_min"] = r.cyclic_min;
    j["coverage_complete"] = r.coverage_complete;
    j["coverage"] = r.coverage;
    j["verdict"] = r.verified() ? "verified" : "violated";
    return j.dump(2) + "\n";
  }
  auto rows = member_rows(r.members);
  if (f == OutputFormat::Csv) return csv(rows);
  std::ostringstream out;
  out << "groups of order " << r.p << "^" << r.n << ", bound F2(Z" << r.p << "^" << r.n
      << ") = " << r.bound << "\n"
      << aligned(rows);
  for (const auto& m : r.counterexamples) {
    out << "counterexample candidate: " << m.label << " with F2 = " << m.f2 << "\n";
  }
  out << "cyclic minimum: " << yes_no(r.cyclic_min) << "\n";
  out << "coverage: " << r.coverage << "\n";
  out << "verdict: " << (r.verified() ? "verified" : "violated") << "\n";
  return out.str();
}

namespace {

Json verdict_json(const MonotonicityReport& r, const ConventionVerdict& v, bool nondecreasing) {
  Json j;
  j["monotone"] = v.monotone;
  j["strict"] = v.strict;
  if (v.violation) {
    const auto& [a, b] = *v.violation;
    auto form = [&](std::size_t i) {
      return partition_string(nondecreasing ? r.rows[i].partition.nondecreasing
                                            : r.rows[i].partition.nonincreasing);
    };
    j["violation"] = Json::array({form(a), form(b)});
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

std::string verdict_text(const MonotonicityReport& r, const ConventionVerdict& v, bool nondecreasing) {
  if (v.monotone) return v.strict ? "monotone (strict)" : "monotone";
  const auto& [a, b] = *v.violation;
  auto form = [&](std::size_t i) {
    return partition_string(nondecreasing ? r.rows[i].partition.nondecreasing
                                          : r.rows[i].partition.nonincreasing);
  };
  return "violated at " + form(a) + " < " + form(b) + " (F2 " + r.rows[a].f2.str() + " < " +
         r.rows[b].f2.str() + ")";
}

}  // namespace

std::string render(const MonotonicityReport& r, OutputFormat f) {
  if (f == OutputFormat::Json) {
    Json j;
    j["check"] = "openproblem";
    j["p"] = std::to_string(r.p);
    j["n"] = std::to_string(r.n);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json x;
      x["nonincreasing"] = partition_string(row.partition.nonincreasing);
      x["nondecreasing"] = partition_string(row.partition.nondecreasing);
      x["subgroups"] = std::to_string(row.lattice_size);
      x["f2"] = row.f2.str();
      Json cf = Json::object();
      for (const auto& [name, value] : row.closed_forms) cf[name] = value.str();
      x["closed_forms"] = std::move(cf);
      x["rank_nondecreasing"] = row.rank_nondecreasing;
      x["rank_nonincreasing"] = row.rank_nonincreasing;
      rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["closed_forms_agree"] = r.closed_forms_agree;
    j["nondecreasing"] = verdict_json(r, r.nondecreasing, true);
    j["nonincreasing"] = verdict_json(r, r.nonincreasing, false);
    j["refuted"] = r.refuted();
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{
      {"nonincreasing", "nondecreasing", "subgroups", "F2", "closed_form", "rank_nonincr", "rank_nondecr"}};
  for (const auto& row : r.rows) {
    std::string cf;
    for (const auto& [name, value] : row.closed_forms) {
      if (!cf.empty()) cf += " ";
      cf += name + "=" + value.str();
    }
    rows.push_back({partition_string(row.partition.nonincreasing),
                    partition_string(row.partition.nondecreasing), std::to_string(row.lattice_size),
                    row.f2.str(), cf.empty() ? "-" : cf, std::to_string(row.rank_nonincreasing),
                    std::to_string(row.rank_nondecreasing)});
  }
  if (f == OutputFormat::Csv) return csv(rows);
  std::ostringstream out;
  out << "abelian groups of order " << r.p << "^" << r.n << "\n" << aligned(rows);
  out << "closed forms agree: " << yes_no(r.closed_forms_agree) << "\n";
  out << "nonincreasing-lex: " << verdict_text(r, r.nonincreasing, false) << "\n";
  out << "nondecreasing-lex: " << verdict_text(r, r.nondecreasing, true) << "\n";
  return out.str();
}

}  // namespace facnum
