#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boxorient/cycle_orient.hpp"
#include "boxorient/io.hpp"
#include "boxorient/oracle.hpp"
#include "boxorient/tree_orient.hpp"
#include "boxorient/verify.hpp"

namespace py = pybind11;

namespace {

using namespace boxorient;

py::object py_diameter(const DiameterReport& report) {
  if (!report.strongly_connected) return py::none();
  return py::int_(report.diameter);
}

py::dict histogram_dict(const OrientedProduct& oriented) {
  py::dict result;
  for (auto [tag, count] : oriented.rule_histogram()) {
    result[rule_tag_name(tag)] = count;
  }
  return result;
}

py::list arc_list(const OrientedProduct& oriented) {
  py::list arcs;
  for (int i = 0; i < oriented.product().edge_count(); ++i) {
    Arc arc = oriented.edge_arc(i);
    arcs.append(py::make_tuple(py::make_tuple(arc.from.x, arc.from.y),
                               py::make_tuple(arc.to.x, arc.to.y),
                               rule_tag_name(oriented.edge_rule(i))));
  }
  return arcs;
}

std::optional<int> opt_root(const py::object& root) {
  if (root.is_none()) return std::nullopt;
  return root.cast<int>();
}

}  // namespace

PYBIND11_MODULE(_boxorient, m) {
  m.doc() = "Strong orientations of strong products of graphs";

  py::register_exception<Error>(m, "Error");

  py::class_<UndirectedGraph>(m, "UndirectedGraph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &UndirectedGraph::vertex_count)
      .def_property_readonly("edge_count", &UndirectedGraph::edge_count)
      .def("edges", &UndirectedGraph::edges)
      .def("neighbors", &UndirectedGraph::neighbors, py::arg("v"));

  py::class_<DiameterReport>(m, "DiameterReport")
      .def_property_readonly("diameter", &py_diameter)
      .def_readonly("strongly_connected", &DiameterReport::strongly_connected)
      .def_readonly("bound", &DiameterReport::bound)
      .def_readonly("slack", &DiameterReport::slack)
      .def_property_readonly("bound_kind",
                             [](const DiameterReport& r) {
                               return bound_kind_name(r.bound_kind);
                             })
      .def_readonly("witness", &DiameterReport::witness);

  py::class_<OrientedProduct>(m, "OrientedProduct")
      .def_property_readonly("vertex_count",
                             [](const OrientedProduct& op) {
                               return op.product().vertex_count();
                             })
      .def_property_readonly("arc_count",
                             [](const OrientedProduct& op) {
                               return op.product().edge_count();
                             })
      .def("rule_histogram", &histogram_dict)
      .def("arcs", &arc_list)
      .def("dot", [](const OrientedProduct& op) { return export_dot(op); });

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("diam_min", &OracleResult::diam_min)
      .def_readonly("orientations_tested", &OracleResult::orientations_tested)
      .def_readonly("strong_count", &OracleResult::strong_count)
      .def_property_readonly("witness_orientation", [](const OracleResult& r) {
        return std::vector<bool>(r.witness_orientation);
      });

  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("leaves"));

  m.def(
      "eccentricity_profile",
      [](const UndirectedGraph& g) {
        EccentricityProfile p = eccentricity_profile(g);
        py::dict result;
        result["eccentricity"] = p.eccentricity;
        result["radius"] = p.radius;
        result["diameter"] = p.diameter;
        result["centers"] = p.centers;
        return result;
      },
      py::arg("graph"));

  m.def(
      "orient_trees",
      [](const UndirectedGraph& t1, const UndirectedGraph& t2,
         const py::object& root1, const py::object& root2) {
        PipelineResult result =
            run_orient_trees(t1, opt_root(root1), t2, opt_root(root2));
        return py::make_tuple(std::move(result.oriented), result.diameter,
                              result.report.dump(2));
      },
      py::arg("t1"), py::arg("t2"), py::arg("root1") = py::none(),
      py::arg("root2") = py::none());

  m.def(
      "orient_cycles",
      [](int m_len, int n_len) {
        PipelineResult result = run_orient_cycles(m_len, n_len);
        return py::make_tuple(std::move(result.oriented), result.diameter,
                              result.report.dump(2));
      },
      py::arg("m"), py::arg("n"));

  m.def(
      "orient_general",
      [](const UndirectedGraph& g, const UndirectedGraph& h) {
        auto [oriented, report] = general_orient(g, h);
        return py::make_tuple(std::move(oriented), report);
      },
      py::arg("g"), py::arg("h"));

  m.def(
      "check_local_lemmas",
      [](const OrientedProduct& oriented) {
        py::list result;
        for (const auto& violation : check_local_lemmas(oriented)) {
          py::list tuple;
          for (ProductVertex v : violation.tuple) {
            tuple.append(py::make_tuple(v.x, v.y));
          }
          result.append(py::make_tuple(lemma_id_name(violation.lemma), tuple,
                                       violation.measured));
        }
        return result;
      },
      py::arg("oriented"));

  m.def("structural_check", &structural_check, py::arg("oriented"));
  m.def("brute_force_diam_min", &brute_force_diam_min, py::arg("graph"),
        py::arg("max_edges") = 20);
  m.def("chvatal_thomassen_bound", &chvatal_thomassen_bound, py::arg("graph"));
  m.def(
      "product_distance_check",
      [](const UndirectedGraph& g, const UndirectedGraph& h) {
        return product_distance_check(g, h);
      },
      py::arg("g"), py::arg("h"));
}
