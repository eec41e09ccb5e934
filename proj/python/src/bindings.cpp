#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "facnum/errors.hpp"
#include "facnum/exactform.hpp"
#include "facnum/explorer.hpp"
#include "facnum/group_spec.hpp"
#include "facnum/lattice.hpp"

namespace py = pybind11;
using namespace facnum;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object fraction(const BigRational& r) {
  return py::module_::import("fractions")
      .attr("Fraction")(to_py(numerator(r)), to_py(denominator(r)));
}

LatticeOptions options(std::size_t max_subgroups, unsigned threads) { return {max_subgroups, threads}; }

SubgroupLattice build(const std::string& spec, std::size_t max_order, std::size_t max_subgroups,
                      unsigned threads) {
  const FiniteGroup g = GroupSpec::parse(spec).build(max_order);
  return enumerate_subgroups(g, options(max_subgroups, threads));
}

ExploreOptions explore_options(std::size_t max_order, std::size_t max_subgroups, unsigned threads) {
  return {options(max_subgroups, threads), max_order};
}

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

}  // namespace

PYBIND11_MODULE(_facnum, m) {
  m.doc() = "Exact factorization numbers of finite groups";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_ArithmeticError);

  m.def("gaussian_binomial", [](unsigned n, unsigned i, Prime p) { return to_py(gaussian_binomial(n, i, p)); },
        py::arg("n"), py::arg("i"), py::arg("p"));
  m.def("f2_elementary", [](unsigned n, Prime p) { return to_py(f2_elementary(n, p)); }, py::arg("n"),
        py::arg("p"));
  m.def("f2_elementary_poly", [](unsigned n) {
    const IntPolynomial poly = f2_elementary_poly(n);
    py::list out;
    for (const BigInt& c : poly.coefficients()) out.append(to_py(c));
    return out;
  }, py::arg("n"), "Coefficients in ascending powers of p.");
  m.def("f2_rank2", [](Prime p, unsigned a1, unsigned a2) { return to_py(f2_rank2(p, a1, a2)); },
        py::arg("p"), py::arg("a1"), py::arg("a2"));
  m.def("f2_rank2_via_eq4", [](Prime p, unsigned a1, unsigned a2) { return to_py(f2_rank2_via_eq4(p, a1, a2)); },
        py::arg("p"), py::arg("a1"), py::arg("a2"));
  m.def("f2_corollary4", [](Prime p, unsigned n) { return to_py(f2_corollary4(p, n)); }, py::arg("p"),
        py::arg("n"));
  m.def("f2_cyclic", [](unsigned n) { return to_py(f2_cyclic(n)); }, py::arg("n"));
  m.def("f2_M_p3", [](Prime p) { return to_py(f2_M_p3(p)); }, py::arg("p"));
  m.def("f2_E_p3", [](Prime p) { return to_py(f2_E_p3(p)); }, py::arg("p"));
  m.def("hall_mobius", [](unsigned n, Prime p, bool elementary) { return to_py(hall_mobius(n, p, elementary)); },
        py::arg("n"), py::arg("p"), py::arg("elementary"));

  const std::size_t mo = kDefaultMaxOrder, ms = kDefaultMaxSubgroups;

  m.def("canonical_spec", [](const std::string& s) { return GroupSpec::parse(s).canonical(); }, py::arg("spec"));
  m.def("group_order", [](const std::string& s, std::size_t max_order) {
    return GroupSpec::parse(s).build(max_order).order();
  }, py::arg("spec"), py::arg("max_order") = mo);

  m.def("f2", [](const std::string& s, std::size_t max_order, std::size_t max_subgroups, unsigned threads) {
    BigInt v;
    {
      py::gil_scoped_release nogil;
      v = f2_bruteforce(build(s, max_order, max_subgroups, threads));
    }
    return to_py(v);
  }, py::arg("spec"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms, py::arg("threads") = 0);

  m.def("subgroup_count", [](const std::string& s, std::size_t max_order, std::size_t max_subgroups) {
    return build(s, max_order, max_subgroups, 0).size();
  }, py::arg("spec"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms);

  m.def("factorizations", [](const std::string& s, std::size_t max_order, std::size_t max_subgroups) {
    const SubgroupLattice l = build(s, max_order, max_subgroups, 0);
    py::list out;
    for (const auto& [h, k] : list_factorizations(l)) {
      out.append(py::make_tuple(l.order_of(h), l.order_of(k)));
    }
    return out;
  }, py::arg("spec"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms,
     "Ordered pairs (|H|, |K|) for every factorization G = HK, in lattice order.");

  m.def("sd", [](const std::string& s, std::size_t max_order, std::size_t max_subgroups, unsigned threads) {
    return fraction(sd(build(s, max_order, max_subgroups, threads)).value);
  }, py::arg("spec"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms, py::arg("threads") = 0);

  m.def("mobius_bottom_top", [](const std::string& s, std::size_t max_order) {
    return to_py(mobius_from_bottom(build(s, max_order, ms, 0)).back());
  }, py::arg("spec"), py::arg("max_order") = mo);

  m.def("verify", [](const std::string& s, std::size_t max_order, std::size_t max_subgroups) {
    const SubgroupLattice l = build(s, max_order, max_subgroups, 0);
    const InversionReport r = verify_inversion(l);
    py::dict d;
    d["f2"] = to_py(r.f2_bruteforce);
    d["eq1"] = to_py(r.eq1_sum);
    d["eq2_lattice"] = r.eq2_lattice_form ? py::object(to_py(*r.eq2_lattice_form)) : py::none();
    d["eq2_quotient"] = r.eq2_quotient_form ? py::object(to_py(*r.eq2_quotient_form)) : py::none();
    d["quotient_sizes_match"] = r.quotient_sizes_match;
    d["passed"] = r.passed();
    if (prime_power_order(l.group().order())) {
      const HallReport h = verify_hall(l);
      d["mu_lattice"] = to_py(h.mu_lattice);
      d["mu_formula"] = to_py(h.mu_hall);
      d["passed"] = r.passed() && h.passed();
    }
    return d;
  }, py::arg("spec"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms);

  m.def("lattice_json", [](const std::string& s, std::size_t max_order, std::size_t max_subgroups) {
    return json_loads(lattice_to_json(build(s, max_order, max_subgroups, 0)));
  }, py::arg("spec"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms);

  m.def("check_theorem5", [](Prime p, unsigned n, std::size_t max_order, std::size_t max_subgroups) {
    return json_loads(render(check_theorem5(p, n, explore_options(max_order, max_subgroups, 0)), OutputFormat::Json));
  }, py::arg("p"), py::arg("n"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms);
  m.def("check_conjecture6", [](Prime p, unsigned n, const std::vector<std::string>& tables,
                                std::size_t max_order, std::size_t max_subgroups) {
    return json_loads(render(check_conjecture6(p, n, tables, explore_options(max_order, max_subgroups, 0)),
                             OutputFormat::Json));
  }, py::arg("p"), py::arg("n"), py::arg("tables") = std::vector<std::string>{}, py::arg("max_order") = mo,
     py::arg("max_subgroups") = ms);
  m.def("open_problem_table", [](Prime p, unsigned n, std::size_t max_order, std::size_t max_subgroups) {
    return json_loads(render(open_problem_table(p, n, explore_options(max_order, max_subgroups, 0)),
                             OutputFormat::Json));
  }, py::arg("p"), py::arg("n"), py::arg("max_order") = mo, py::arg("max_subgroups") = ms);
}
