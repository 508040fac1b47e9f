#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hg/verify.hpp"

namespace py = pybind11;
using namespace hg;

namespace {

// pybind11 holders want mutable element types; GroupPtr is a
// shared_ptr-to-const, so expose it through a small value wrapper.
struct PyGroup {
  GroupPtr ptr;
};

py::dict report_dict(const CensusReport& r) {
  py::dict d;
  d["g"] = r.g_label;
  d["n"] = r.n_label;
  d["e"] = r.e_value;
  d["raw_count"] = r.raw_count;
  d["hom_count"] = r.hom_count;
  d["aut_g"] = r.aut_g;
  d["aut_n"] = r.aut_n;
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["scenario"] = v.scenario;
  d["pass"] = v.pass;
  d["partial"] = v.partial;
  d["expected"] = v.expected;
  d["observed"] = v.observed;
  d["witness"] = v.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regular subgroups of holomorphs and Hopf-Galois structure counts";

  py::register_exception<Error>(m, "HgError");

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("order",
                             [](const PyGroup& g) { return g.ptr->order(); })
      .def_property_readonly("label",
                             [](const PyGroup& g) { return g.ptr->label(); })
      .def_property_readonly(
          "abelian", [](const PyGroup& g) { return g.ptr->is_abelian(); })
      .def("mul", [](const PyGroup& g, Elt x, Elt y) { return g.ptr->mul(x, y); })
      .def("inv", [](const PyGroup& g, Elt x) { return g.ptr->inv(x); })
      .def("element_order",
           [](const PyGroup& g, Elt x) { return g.ptr->elt_order(x); })
      .def("__repr__", [](const PyGroup& g) {
        return "<Group " + g.ptr->label() + " of order " +
               std::to_string(g.ptr->order()) + ">";
      });

  m.def(
      "build", [](const std::string& spec) { return PyGroup{build_group(spec)}; },
      py::arg("spec"),
      "Build a group from a constructor spec, e.g. 'SL2(7)' or "
      "'direct(alt(5),cyclic(2))'");
  m.def(
      "serialize", [](const PyGroup& g) { return serialize(g.ptr); },
      py::arg("group"));
  m.def(
      "parse_group",
      [](const std::string& text) {
        return PyGroup{parse_group_file_text(text, "<python>")};
      },
      py::arg("text"));

  m.def(
      "is_perfect",
      [](const PyGroup& g) { return derived_series(g.ptr).perfect; },
      py::arg("group"));
  m.def(
      "is_solvable",
      [](const PyGroup& g) { return derived_series(g.ptr).solvable; },
      py::arg("group"));
  m.def(
      "aut_order", [](const PyGroup& g) { return automorphism_count(g.ptr); },
      py::arg("group"));
  m.def(
      "hol_order", [](const PyGroup& g) { return build_hol(g.ptr)->order(); },
      py::arg("group"));

  m.def(
      "count_e",
      [](const PyGroup& g, const PyGroup& n, double budget, int jobs) {
        SearchBudget b{uint64_t(budget)};
        return report_dict(count_e(g.ptr, n.ptr, &b, jobs));
      },
      py::arg("g"), py::arg("n"),
      py::arg("budget") = double(SearchBudget::kDefaultLimit),
      py::arg("jobs") = 1);

  m.def(
      "classify_regulars",
      [](const PyGroup& n, double budget) {
        SearchBudget b{uint64_t(budget)};
        CensusTier tier = bundled_census(n.ptr->order());
        auto cls = classify_regulars(n.ptr, tier, &b);
        py::dict d;
        for (const auto& [label, cnt] : cls.counts) d[py::str(label)] = cnt;
        return d;
      },
      py::arg("n"), py::arg("budget") = double(SearchBudget::kDefaultLimit));

  m.def(
      "gp_direct_count",
      [](const PyGroup& g, const PyGroup& n) {
        SearchBudget b{};
        return gp_direct_count(g.ptr, n.ptr, &b);
      },
      py::arg("g"), py::arg("n"));

  m.def("schur_multiplier", &schur_lookup, py::arg("label"));

  m.def(
      "verify_336",
      [](double budget, int jobs) {
        SearchBudget b{uint64_t(budget)};
        py::list out;
        for (const auto& v : verify_336("", &b, jobs))
          out.append(verdict_dict(v));
        return out;
      },
      py::arg("budget") = double(SearchBudget::kDefaultLimit),
      py::arg("jobs") = 1);

  m.def(
      "cfsg_checks",
      [](const std::string& label) {
        if (label != "A5" && label != "PSL2(7)")
          fail(ErrorKind::UsageError, "label must be A5 or PSL2(7)");
        GroupPtr g = label == "A5" ? alt(5) : psl2(7);
        py::list out;
        for (const auto& v : cfsg_desk_checks(g, label))
          out.append(verdict_dict(v));
        return out;
      },
      py::arg("label"));

  m.attr("__version__") = "0.1.0";
}
