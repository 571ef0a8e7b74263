#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dsq/builders.hpp"
#include "dsq/coloring.hpp"
#include "dsq/hom.hpp"
#include "dsq/presentation.hpp"
#include "dsq/search.hpp"
#include "dsq/structure_io.hpp"
#include "dsq/version.hpp"

namespace py = pybind11;
using namespace dsq;

namespace {

std::vector<std::vector<int>> rows(const OperationTable& t) {
  std::vector<std::vector<int>> out;
  for (int x = 0; x < t.order(); ++x) {
    std::vector<int> row;
    for (int y = 0; y < t.order(); ++y)
      row.push_back(t.at(x, y));
    out.push_back(std::move(row));
  }
  return out;
}

py::dict report_to_dict(const AxiomReport& rep) {
  py::dict d;
  d["passed"] = rep.passed();
  d["families_checked"] = rep.families_checked;
  d["summary"] = rep.summary();
  py::list violations;
  for (const auto& v : rep.violations) {
    py::dict vd;
    vd["axiom"] = v.axiom;
    vd["detail"] = v.detail;
    vd["witness"] = v.witness;
    violations.append(vd);
  }
  d["violations"] = violations;
  return d;
}

CheckOptions make_opts(bool strict) {
  CheckOptions o;
  o.strict_223 = strict;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite disingquandle toolkit: axiom checking, search, and link coloring counts";
  m.attr("__version__") = kVersion;

  py::class_<OperationTable>(m, "OperationTable")
      .def(py::init([](const std::vector<std::vector<int>>& entries) {
             int n = static_cast<int>(entries.size());
             std::vector<int> flat;
             for (const auto& row : entries) {
               if (static_cast<int>(row.size()) != n)
                 throw StructureError("operation table must be square");
               flat.insert(flat.end(), row.begin(), row.end());
             }
             return OperationTable(n, std::move(flat));
           }),
           py::arg("entries"))
      .def_property_readonly("order", &OperationTable::order)
      .def("at", &OperationTable::at, py::arg("x"), py::arg("y"))
      .def("rows", [](const OperationTable& t) { return rows(t); })
      .def("__eq__", [](const OperationTable& a, const OperationTable& b) { return a == b; })
      .def("__repr__", [](const OperationTable& t) {
        std::ostringstream os;
        os << "OperationTable(order=" << t.order() << ")";
        return os.str();
      });

  py::class_<DisingquandleTable>(m, "Disingquandle")
      .def(py::init([](std::string name, const OperationTable& op1, const OperationTable& op2,
                       const OperationTable& r1, const OperationTable& r2) {
             return DisingquandleTable(std::move(name), op1, op2, r1, r2);
           }),
           py::arg("name"), py::arg("op1"), py::arg("op2"), py::arg("r1"), py::arg("r2"))
      .def_readonly("name", &DisingquandleTable::name)
      .def_property_readonly("order", &DisingquandleTable::order)
      .def_readonly("op1", &DisingquandleTable::op1)
      .def_readonly("op2", &DisingquandleTable::op2)
      .def_readonly("r1", &DisingquandleTable::r1)
      .def_readonly("r2", &DisingquandleTable::r2)
      .def("check", [](const DisingquandleTable& d, bool strict) { return report_to_dict(check_disingquandle(d, make_opts(strict))); },
           py::arg("strict") = false)
      .def("is_valid", [](const DisingquandleTable& d) { return disingquandle_valid(d); })
      .def("swapped", &DisingquandleTable::swapped)
      .def("to_text", [](const DisingquandleTable& d) { return serialize(d); })
      .def_static("from_text", [](const std::string& text) { return parse_disingquandle_text(text); })
      .def("__repr__", [](const DisingquandleTable& d) {
        std::ostringstream os;
        os << "Disingquandle(name='" << d.name << "', order=" << d.order() << ")";
        return os.str();
      });

  py::class_<GFamily>(m, "GFamily")
      .def_property_readonly("name", &GFamily::name)
      .def_property_readonly("group_order", [](const GFamily& f) { return f.group().order(); })
      .def_property_readonly("set_order", &GFamily::set_order)
      .def("op", &GFamily::op, py::arg("g"))
      .def("check", [](const GFamily& f, bool strict) {
             CheckOptions o;
             o.strict_gfam = strict;
             return report_to_dict(check_g_family(f, o));
           },
           py::arg("strict") = false)
      .def("induced_quandle", [](const GFamily& f) { return induced_quandle(f); })
      .def("to_text", [](const GFamily& f) { return serialize(f); });

  py::class_<Diagram>(m, "Diagram")
      .def_property_readonly("name", [](const Diagram& d) { return d.name; })
      .def_property_readonly("arcs", [](const Diagram& d) {
        std::vector<std::string> out;
        for (const auto& [aid, _] : d.arcs)
          out.push_back(aid);
        return out;
      })
      .def_property_readonly("components", [](const Diagram& d) {
        py::dict out;
        for (const auto& [cid, label] : d.components)
          out[py::str(cid)] = label;
        return out;
      })
      .def("validate", [](const Diagram& d) {
        std::vector<std::string> issues;
        for (const auto& i : validate_diagram(d).issues)
          issues.push_back(i.code + ": " + i.message);
        return issues;
      })
      .def("kink", [](const Diagram& d, const std::string& arc) { return apply_kink(d, arc); }, py::arg("arc"))
      .def("poke", [](const Diagram& d, const std::string& a, const std::string& b) { return apply_poke(d, a, b); },
           py::arg("arc_under"), py::arg("arc_over"))
      .def("swap_labels", [](const Diagram& d) { return swap_labels(d); })
      .def("to_text", [](const Diagram& d) { return serialize(d); })
      .def_static("from_text", &parse_diagram_text, py::arg("text"))
      .def("__repr__", [](const Diagram& d) {
        std::ostringstream os;
        os << "Diagram(name='" << d.name << "', arcs=" << d.arcs.size() << ")";
        return os.str();
      });

  // builders
  m.def("dihedral", &build_dihedral, py::arg("n"));
  m.def("core_cyclic", [](int n) { return build_core(Group::cyclic(n)); }, py::arg("n"));
  m.def("core_symmetric", [](int k) { return build_core(Group::symmetric(k)); }, py::arg("k"));
  m.def("z6", &build_z6_example);
  m.def("affine_m", &build_affine_m, py::arg("n"), py::arg("m"));
  m.def("affine_b", &build_affine_b, py::arg("n"), py::arg("b"));
  m.def("trivial", &build_trivial_disingquandle, py::arg("n"), py::arg("c"));
  m.def("prime_zeta", &build_prime_zeta, py::arg("p"));
  m.def("with_identity_pair", &with_identity_pair, py::arg("name"), py::arg("op"));
  m.def("cyclic_type_family", [](int n) { return build_cyclic_type_family(build_dihedral(n)); }, py::arg("n"));
  m.def("trivial_gfamily", [](int group_order, int set_order) {
          return build_trivial_gfamily(Group::cyclic(group_order), set_order);
        },
        py::arg("group_order"), py::arg("set_order"));

  // checkers
  m.def("check_involutive_quandle",
        [](const OperationTable& t) { return report_to_dict(check_involutive_quandle(t)); }, py::arg("table"));
  m.def("check_singquandle",
        [](const OperationTable& op, const OperationTable& r1, const OperationTable& r2, bool strict) {
          return report_to_dict(check_singquandle(op, r1, r2, make_opts(strict)));
        },
        py::arg("op"), py::arg("r1"), py::arg("r2"), py::arg("strict") = false);

  // hom and substructure operations
  m.def("check_homomorphism",
        [](const DisingquandleTable& x, const DisingquandleTable& y, const std::vector<int>& values) {
          return report_to_dict(check_homomorphism(x, y, values));
        },
        py::arg("domain"), py::arg("codomain"), py::arg("values"));
  m.def("enumerate_homs",
        [](const DisingquandleTable& x, const DisingquandleTable& y, int jobs) {
          std::vector<std::vector<int>> out;
          for (const auto& h : enumerate_homs(x, y, jobs))
            out.push_back(h.values);
          return out;
        },
        py::arg("domain"), py::arg("codomain"), py::arg("jobs") = 1);
  m.def("is_sub_disingquandle", &is_sub_disingquandle, py::arg("subset"), py::arg("structure"));

  // searches
  m.def("search_affine",
        [](int modulus, const std::string& family, int jobs) {
          return search_affine(modulus, affine_family_from_name(family), jobs);
        },
        py::arg("modulus"), py::arg("family"), py::arg("jobs") = 1);
  m.def("enumerate_disingquandles",
        [](int order, bool up_to_iso, int jobs) {
          EnumerateOptions opts;
          opts.up_to_iso = up_to_iso;
          opts.jobs = jobs;
          return enumerate_disingquandles(order, opts);
        },
        py::arg("order"), py::arg("up_to_iso") = false, py::arg("jobs") = 1);

  // coloring
  m.def("count",
        [](const Diagram& d, const DisingquandleTable& X, bool list_all, int jobs) {
          SolveOptions o;
          o.list_all = list_all;
          o.jobs = jobs;
          CountResult res = count_diagram(d, X, o);
          py::dict out;
          out["link"] = res.link_name;
          out["structure"] = res.structure_name;
          out["count"] = res.count;
          out["arcs"] = res.arcs;
          if (list_all)
            out["colorings"] = res.colorings;
          return out;
        },
        py::arg("diagram"), py::arg("structure"), py::arg("list_all") = false, py::arg("jobs") = 1);
  m.def("presentation",
        [](const Diagram& d, bool simplify) {
          Presentation p = fundamental_presentation(d, simplify);
          py::dict out;
          out["generators"] = p.generators;
          std::vector<std::string> rels;
          for (const auto& rel : p.relations)
            rels.push_back(term_to_string(rel.lhs) + " = " + term_to_string(rel.rhs));
          out["relations"] = rels;
          return out;
        },
        py::arg("diagram"), py::arg("simplify") = false);
  m.def("hom_count",
        [](const Diagram& d, const DisingquandleTable& X, bool simplify) {
          return hom_count_via_presentation(fundamental_presentation(d, simplify), X);
        },
        py::arg("diagram"), py::arg("structure"), py::arg("simplify") = false);

  // exception translations; later registrations are matched first
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<InvalidStructure>(m, "InvalidStructureError", PyExc_ValueError);
  py::register_exception<InvalidDiagram>(m, "InvalidDiagramError", PyExc_ValueError);
}
