#include "facnum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "facnum/errors.hpp"
#include "facnum/exactform.hpp"
#include "facnum/explorer.hpp"
#include "facnum/group_spec.hpp"
#include "facnum/lattice.hpp"

namespace facnum {

namespace {

using Json = nlohmann::ordered_json;
using Rows = std::vector<std::pair<std::string, std::string>>;

struct Common {
  std::string format = "table";
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_subgroups = kDefaultMaxSubgroups;
  unsigned threads = 0;

  OutputFormat output() const {
    if (format == "json") return OutputFormat::Json;
    if (format == "csv") return OutputFormat::Csv;
    return OutputFormat::Table;
  }
  LatticeOptions lattice() const { return {max_subgroups, threads}; }
  ExploreOptions explore() const { return {lattice(), max_order}; }
};

std::size_t env_max_order() {
  const char* v = std::getenv("FACNUM_MAX_ORDER");
  if (v == nullptr || *v == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) {
    throw ValidationError(std::string("FACNUM_MAX_ORDER must be a positive integer, got '") + v + "'");
  }
  return static_cast<std::size_t>(n);
}

void add_common(CLI::App* cmd, Common& c, bool lattice_flags) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  if (!lattice_flags) return;
  cmd->add_option("--max-order", c.max_order, "Largest group order accepted")->capture_default_str();
  cmd->add_option("--max-subgroups", c.max_subgroups, "Largest subgroup lattice accepted")
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads for pair counting (0 = all cores)")
      ->capture_default_str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit_rows(const Rows& rows, OutputFormat f, std::ostream& out) {
  if (f == OutputFormat::Json) {
    Json j;
    for (const auto& [k, v] : rows) j[k] = v;
    out << j.dump(2) << '\n';
    return;
  }
  if (f == OutputFormat::Csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) out << k << std::string(w - k.size() + 2, ' ') << v << '\n';
}

// formula ---------------------------------------------------------------------

struct FormulaArgs {
  std::string family;
  std::uint64_t n = 0, p = 0, a1 = 0, a2 = 0;
  bool poly = false;
  CLI::Option *n_opt = nullptr, *p_opt = nullptr, *a1_opt = nullptr, *a2_opt = nullptr;
};

int run_formula(const FormulaArgs& a, const Common& c, std::ostream& out) {
  auto need = [](CLI::Option* o, const char* name) {
    if (o->count() == 0) throw ValidationError(std::string("missing required option --") + name);
  };
  const bool have_p = a.p_opt->count() > 0;
  const auto n = static_cast<unsigned>(a.n);
  Rows rows{{"family", a.family}};
  std::optional<IntPolynomial> poly;
  std::optional<BigInt> value;

  if (a.family == "elementary") {
    need(a.n_opt, "n");
    rows.emplace_back("n", std::to_string(a.n));
    if (a.poly) poly = f2_elementary_poly(n);
    if (!a.poly) need(a.p_opt, "p");
    if (have_p) value = f2_elementary(n, a.p);
  } else if (a.family == "rank2") {
    need(a.p_opt, "p");
    need(a.a1_opt, "a1");
    need(a.a2_opt, "a2");
    if (a.poly) throw ValidationError("rank2 has no symbolic form here; drop --poly");
    if (a.a1 > a.a2) throw ValidationError("rank2 requires a1 <= a2");
    rows.emplace_back("a1", std::to_string(a.a1));
    rows.emplace_back("a2", std::to_string(a.a2));
    value = f2_rank2(a.p, static_cast<unsigned>(a.a1), static_cast<unsigned>(a.a2));
    const BigInt via = f2_rank2_via_eq4(a.p, static_cast<unsigned>(a.a1), static_cast<unsigned>(a.a2));
    rows.emplace_back("via_lattice_counts", via.str());
    if (via != *value) throw InvariantError("rank2 closed form and lattice-count route disagree");
  } else if (a.family == "corollary4") {
    need(a.n_opt, "n");
    rows.emplace_back("n", std::to_string(a.n));
    if (a.poly) poly = f2_corollary4_poly(n);
    if (!a.poly) need(a.p_opt, "p");
    if (have_p) value = f2_corollary4(a.p, n);
  } else if (a.family == "cyclic") {
    need(a.n_opt, "n");
    rows.emplace_back("n", std::to_string(a.n));
    value = f2_cyclic(n);
    if (a.poly) poly = IntPolynomial::constant(*value);
  } else if (a.family == "Mp3" || a.family == "Ep3") {
    const bool m = a.family == "Mp3";
    if (a.poly) poly = m ? f2_M_p3_poly() : f2_E_p3_poly();
    if (!a.poly) need(a.p_opt, "p");
    if (have_p) value = m ? f2_M_p3(a.p) : f2_E_p3(a.p);
    if (have_p && !m) rows.emplace_back("lattice_size", lattice_size_E_p3(a.p).str());
  }
  if (have_p) rows.insert(rows.begin() + 1, {"p", std::to_string(a.p)});
  if (value) rows.emplace_back("F2", value->str());
  if (poly) {
    rows.emplace_back("polynomial", poly->to_string());
    std::string coeffs;
    for (const BigInt& k : poly->coefficients()) coeffs += (coeffs.empty() ? "" : " ") + k.str();
    rows.emplace_back("coefficients_ascending", coeffs);
  }
  emit_rows(rows, c.output(), out);
  return kExitOk;
}

// f2 / sd ---------------------------------------------------------------------

struct GroupArgs {
  std::string spec;
  bool list = false;
  bool verify = false;
};

int run_f2(const GroupArgs& a, const Common& c, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(a.spec);
  const FiniteGroup g = spec.build(c.max_order);
  const SubgroupLattice l = enumerate_subgroups(g, c.lattice());
  const BigInt f2 = f2_bruteforce(l);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (a.list) pairs = list_factorizations(l);

  std::optional<InversionReport> inv;
  std::optional<HallReport> hall;
  std::string hall_note;
  if (a.verify) {
    inv = verify_inversion(l);
    if (prime_power_order(g.order())) {
      hall = verify_hall(l);
    } else {
      hall_note = "skipped (order is not a prime power)";
    }
  }
  bool ok = true;
  if (inv && !inv->passed()) ok = false;
  if (hall && !hall->passed()) ok = false;

  const auto f = c.output();
  if (f == OutputFormat::Json) {
    Json j;
    j["group"] = spec.canonical();
    j["label"] = g.label();
    j["order"] = std::to_string(g.order());
    j["subgroups"] = std::to_string(l.size());
    j["f2"] = f2.str();
    if (a.list) {
      Json arr = Json::array();
      for (const auto& [h, k] : pairs) arr.push_back(Json::array({h, k}));
      j["factorizations"] = std::move(arr);
      Json orders = Json::array();
      for (std::size_t i = 0; i < l.size(); ++i) orders.push_back(std::to_string(l.order_of(i)));
      j["subgroup_orders"] = std::move(orders);
    }
    if (inv) {
      Json v;
      v["f2_bruteforce"] = inv->f2_bruteforce.str();
      v["eq1"] = inv->eq1_sum.str();
      v["eq2_lattice"] = inv->eq2_lattice_form ? Json(inv->eq2_lattice_form->str()) : Json(nullptr);
      v["eq2_quotient"] = inv->eq2_quotient_form ? Json(inv->eq2_quotient_form->str()) : Json(nullptr);
      if (!inv->skipped.empty()) v["eq2_skipped"] = inv->skipped;
      v["quotient_sizes_match"] = inv->quotient_sizes_match;
      v["hall_members"] = inv->hall_agrees ? Json(*inv->hall_agrees) : Json(nullptr);
      if (hall) {
        v["hall_mu_lattice"] = hall->mu_lattice.str();
        v["hall_mu_formula"] = hall->mu_hall.str();
      }
      v["passed"] = ok;
      j["verify"] = std::move(v);
    }
    out << j.dump(2) << '\n';
    return ok ? kExitOk : kExitVerdictFailed;
  }

  Rows rows{{"group", spec.canonical()},
            {"label", g.label()},
            {"order", std::to_string(g.order())},
            {"subgroups", std::to_string(l.size())},
            {"F2", f2.str()}};
  if (inv) {
    auto check = [&](const BigInt& v) { return v.str() + (v == inv->f2_bruteforce ? " pass" : " FAIL"); };
    rows.emplace_back("eq1", check(inv->eq1_sum));
    rows.emplace_back("eq2_lattice", inv->eq2_lattice_form ? check(*inv->eq2_lattice_form) : "skipped (" + inv->skipped + ")");
    rows.emplace_back("eq2_quotient", inv->eq2_quotient_form ? check(*inv->eq2_quotient_form) : "skipped (" + inv->skipped + ")");
    rows.emplace_back("quotient_sizes", inv->quotient_sizes_match ? "pass" : "FAIL");
    rows.emplace_back("hall_members", !inv->hall_agrees ? "skipped" : (*inv->hall_agrees ? "pass" : "FAIL"));
    rows.emplace_back("hall", hall ? "mu(1,G) = " + hall->mu_lattice.str() + ", formula " +
                                         hall->mu_hall.str() + (hall->passed() ? " pass" : " FAIL")
                                   : hall_note);
    rows.emplace_back("verify", ok ? "pass" : "FAIL");
  }
  emit_rows(rows, f, out);
  if (a.list) {
    if (f == OutputFormat::Csv) {
      out << "H,K,order_H,order_K\n";
    } else {
      out << "factorizations (H K |H| |K|):\n";
    }
    const char sep = f == OutputFormat::Csv ? ',' : ' ';
    for (const auto& [h, k] : pairs) {
      out << h << sep << k << sep << l.order_of(h) << sep << l.order_of(k) << '\n';
    }
  }
  return ok ? kExitOk : kExitVerdictFailed;
}

int run_sd(const GroupArgs& a, const Common& c, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(a.spec);
  const FiniteGroup g = spec.build(c.max_order);
  const SubgroupLattice l = enumerate_subgroups(g, c.lattice());
  const SdResult r = sd(l);
  std::ostringstream approx;
  approx << std::fixed << std::setprecision(6) << r.value.convert_to<double>();
  Rows rows{{"group", spec.canonical()},
            {"label", g.label()},
            {"subgroups", std::to_string(l.size())},
            {"permuting_pairs", r.permuting_pairs.str() + "/" + r.lattice_size_squared.str()},
            {"f2_sum", r.f2_sum.str()},
            {"sd", to_string(r.value)},
            {"sd_decimal_approximation", approx.str()}};
  emit_rows(rows, c.output(), out);
  return kExitOk;
}

// explore ---------------------------------------------------------------------

struct ExploreArgs {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<std::string> tables;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization numbers of finite groups: closed forms and brute-force lattices",
               "facnum"};
  app.require_subcommand(1);

  Common common;
  std::function<int()> action;

  try {
    common.max_order = env_max_order();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  FormulaArgs fa;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form factorization number");
  formula->add_option("family", fa.family, "elementary | rank2 | corollary4 | cyclic | Mp3 | Ep3")
      ->required()
      ->check(CLI::IsMember({"elementary", "rank2", "corollary4", "cyclic", "Mp3", "Ep3"}));
  fa.n_opt = formula->add_option("--n", fa.n, "Exponent n");
  fa.p_opt = formula->add_option("--p", fa.p, "Prime p");
  fa.a1_opt = formula->add_option("--a1", fa.a1, "Smaller exponent (rank2)");
  fa.a2_opt = formula->add_option("--a2", fa.a2, "Larger exponent (rank2)");
  formula->add_flag("--poly", fa.poly, "Print the polynomial in p");
  add_common(formula, common, false);
  formula->callback([&] { action = [&] { return run_formula(fa, common, out); }; });

  GroupArgs ga;
  auto* f2 = app.add_subcommand("f2", "Brute-force factorization number of a group");
  f2->add_option("spec", ga.spec, "Group spec")->required();
  f2->add_flag("--list", ga.list, "List every factorization pair");
  f2->add_flag("--verify", ga.verify, "Check the inversion identities and the Möbius formula");
  add_common(f2, common, true);
  f2->callback([&] { action = [&] { return run_f2(ga, common, out); }; });

  auto* sdcmd = app.add_subcommand("sd", "Subgroup commutativity degree");
  sdcmd->add_option("spec", ga.spec, "Group spec")->required();
  add_common(sdcmd, common, true);
  sdcmd->callback([&] { action = [&] { return run_sd(ga, common, out); }; });

  auto* lattice = app.add_subcommand("lattice", "Export the subgroup lattice as JSON");
  lattice->add_option("spec", ga.spec, "Group spec")->required();
  add_common(lattice, common, true);
  lattice->callback([&] {
    action = [&] {
      const FiniteGroup g = GroupSpec::parse(ga.spec).build(common.max_order);
      out << lattice_to_json(enumerate_subgroups(g, common.lattice())) << '\n';
      return int{kExitOk};
    };
  });

  auto* exportcmd = app.add_subcommand("export", "Write a group's Cayley table");
  exportcmd->add_option("spec", ga.spec, "Group spec")->required();
  exportcmd->add_option("--max-order", common.max_order, "Largest group order accepted");
  exportcmd->callback([&] {
    action = [&] {
      write_cayley_table(GroupSpec::parse(ga.spec).build(common.max_order), out);
      return int{kExitOk};
    };
  });

  ExploreArgs ea;
  auto* explore = app.add_subcommand("explore", "Comparative checks over catalogs of p-groups");
  explore->require_subcommand(1);
  auto explore_cmd = [&](const char* name, const char* help) {
    auto* cmd = explore->add_subcommand(name, help);
    cmd->add_option("--p", ea.p, "Prime p")->required();
    cmd->add_option("--n", ea.n, "Exponent n")->required();
    add_common(cmd, common, true);
    return cmd;
  };
  explore_cmd("theorem5", "Extremal check for groups of order p^2 or p^3")->callback([&] {
    action = [&] {
      const auto r = check_theorem5(ea.p, ea.n, common.explore());
      out << render(r, common.output());
      return r.verified() ? kExitOk : kExitVerdictFailed;
    };
  });
  auto* c6 = explore_cmd("conjecture6", "Elementary-abelian upper bound over a catalog");
  c6->add_option("--tables", ea.tables, "Cayley table files of order p^n");
  c6->callback([&] {
    action = [&] {
      const auto r = check_conjecture6(ea.p, ea.n, ea.tables, common.explore());
      out << render(r, common.output());
      return r.verified() ? kExitOk : kExitVerdictFailed;
    };
  });
  explore_cmd("openproblem", "F2 of every abelian type of order p^n in partition order")->callback([&] {
    action = [&] {
      const auto r = open_problem_table(ea.p, ea.n, common.explore());
      out << render(r, common.output());
      return (r.refuted() || !r.closed_forms_agree) ? kExitVerdictFailed : kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    return action();
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kExitVerdictFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kExitResourceCap;
  }
}

}  // namespace facnum
