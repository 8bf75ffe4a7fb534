#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ginv/catalog.hpp"
#include "ginv/chartab.hpp"
#include "ginv/invariants.hpp"
#include "ginv/predicates.hpp"
#include "ginv/report.hpp"
#include "ginv/repmod.hpp"

namespace py = pybind11;
using namespace ginv;

namespace {

struct PyGroup {
  GroupPtr g;

  const FiniteGroup& ref() const { return *g; }
};

PyGroup py_build(const std::string& name, std::uint64_t cap) { return PyGroup{build(name, cap)}; }

py::dict py_b_table(const PyGroup& pg) {
  py::dict d;
  for (const auto& N : normal_subgroups(pg.ref()))
    d[py::int_(N.order())] = b_invariant(pg.ref(), N);
  return d;
}

}  // namespace

PYBIND11_MODULE(_groupinv, m) {
  m.doc() = "finite group invariants: Laitinen numbers, Oliver/gap predicates, rank tables";

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("name", [](const PyGroup& p) { return p.ref().name(); })
      .def_property_readonly("order", [](const PyGroup& p) { return p.ref().order(); })
      .def_property_readonly("degree", [](const PyGroup& p) { return p.ref().degree(); })
      .def_property_readonly("enumerated", [](const PyGroup& p) { return p.ref().enumerated(); })
      .def_property_readonly("num_classes",
                             [](const PyGroup& p) { return p.ref().classes().size(); })
      .def_property_readonly("num_real_classes",
                             [](const PyGroup& p) { return p.ref().real_classes().size(); })
      .def_property_readonly("laitinen_number",
                             [](const PyGroup& p) { return laitinen_number(p.ref()); })
      .def_property_readonly("npp_orders", [](const PyGroup& p) { return npp_orders(p.ref()); })
      .def_property_readonly("is_oliver", [](const PyGroup& p) { return is_oliver(p.ref()).oliver; })
      .def_property_readonly("is_cp", [](const PyGroup& p) { return is_cp(p.ref()); })
      .def_property_readonly("is_ep", [](const PyGroup& p) { return is_ep(p.ref()); })
      .def_property_readonly("p_l_disjoint", [](const PyGroup& p) { return p_l_disjoint(p.ref()); })
      .def_property_readonly("element_orders",
                             [](const PyGroup& p) {
                               std::map<std::uint64_t, std::uint64_t> h;
                               for (const auto& c : p.ref().classes())
                                 h[c.element_order] += c.members.size();
                               return h;
                             })
      .def("rank_io", [](const PyGroup& p) { return rank(p.ref(), RankKind::IO); })
      .def("rank_io_gg", [](const PyGroup& p) { return rank(p.ref(), RankKind::IO_GG); })
      .def("b_table", &py_b_table)
      .def("lo_rank_bounds",
           [](const PyGroup& p) {
             LoBounds lb = lo_rank_bounds(p.ref());
             return py::make_tuple(lb.lower, lb.upper);
           })
      .def("gap_status",
           [](const PyGroup& p, const std::string& mode, std::uint64_t exact_cap) {
             GapOptions opt;
             opt.exact_order_cap = exact_cap;
             return to_string(gap_status(
                 p.ref(), mode == "exact" ? GapMode::Exact : GapMode::Sufficient, opt));
           },
           py::arg("mode") = "sufficient", py::arg("exact_cap") = 10080)
      .def("classification_case",
           [](const PyGroup& p) { return classification_match(p.ref()).matched_case; })
      .def("character_degrees",
           [](const PyGroup& p) { return character_table(p.ref()).degrees; })
      .def("fs_indicators", [](const PyGroup& p) { return character_table(p.ref()).fs; })
      .def("vg_dim", [](const PyGroup& p) { return vg_dim_fixed(p.ref(), p.ref().trivial_subgroup()); })
      .def("a2_exponents",
           [](const PyGroup& p) {
             auto kernels = pq_cyclic_kernels(p.ref());
             if (kernels.empty()) throw std::runtime_error("no cyclic pq quotient");
             A2Pair pr = construct_a2(p.ref(), kernels.front());
             return py::make_tuple(pr.p, pr.q, pr.a, pr.b);
           })
      .def("__repr__", [](const PyGroup& p) {
        std::ostringstream os;
        os << "<Group " << p.ref().name() << " order " << p.ref().order() << ">";
        return os.str();
      });

  m.def("build", &py_build, py::arg("name"), py::arg("cap") = kDefaultElementCap,
        "build a catalog group or constructor expression");
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& s : builtin_catalog()) names.push_back(s.name);
    return names;
  });
  m.def("load_groups", [](const std::string& path) {
    std::vector<PyGroup> out;
    for (auto& g : load(path)) out.push_back(PyGroup{std::move(g)});
    return out;
  });
  m.def(
      "verify",
      [](const std::string& suite, bool include_heavy, bool exact_gap) {
        VerifyOptions opt;
        opt.include_heavy = include_heavy;
        opt.exact_gap = exact_gap;
        if (include_heavy) opt.exact_gap_cap = 50000;
        RunContext ctx = RunContext::make(opt);
        VerificationReport rep = verify_suite(suite, ctx);
        py::module json = py::module::import("json");
        return json.attr("loads")(report_to_json(rep).dump());
      },
      py::arg("suite") = "ranks", py::arg("include_heavy") = false, py::arg("exact_gap") = false,
      "run a verification suite and return the JSON report as a dict");
}
