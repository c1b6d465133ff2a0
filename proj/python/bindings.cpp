#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "filterless/clique.hpp"
#include "filterless/coloring.hpp"
#include "filterless/decision.hpp"
#include "filterless/error.hpp"
#include "filterless/independence.hpp"
#include "filterless/io.hpp"
#include "filterless/oracle.hpp"

namespace py = pybind11;
using namespace filterless;

namespace {

Instance make_instance(int n, const std::vector<Edge>& edges,
                       const std::vector<std::pair<int, int>>& requests) {
  std::vector<Request> list;
  list.reserve(requests.size());
  for (auto [s, t] : requests) list.push_back({s, t});
  return Instance(Tree::build(n, edges), std::move(list));
}

std::vector<std::pair<int, int>> request_pairs(const Instance& inst) {
  std::vector<std::pair<int, int>> out;
  for (const Request& r : inst.requests()) out.emplace_back(r.source, r.target);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Interference graphs of requests on bidirected trees";

  py::register_exception<Error>(m, "FilterlessError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("n"), py::arg("edges"),
           py::arg("requests"))
      .def_property_readonly("num_vertices", &Instance::num_vertices)
      .def_property_readonly("num_requests", &Instance::num_requests)
      .def_property_readonly("edges",
                             [](const Instance& i) { return i.tree().edges(); })
      .def_property_readonly("requests", &request_pairs)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance n=" + std::to_string(i.num_vertices()) +
               " requests=" + std::to_string(i.num_requests()) + ">";
      });

  py::class_<Coloring>(m, "Coloring")
      .def_readonly("colour", &Coloring::colour)
      .def_readonly("num_colours", &Coloring::num_colours)
      .def_property_readonly("tags", [](const Coloring& c) {
        std::vector<std::string> out;
        for (ColourType t : c.tags) out.emplace_back(colour_type_name(t));
        return out;
      });

  m.def("parse_instance", [](const std::string& text) {
    return parse_instance(text);
  });
  m.def("serialize_instance", &serialize_instance);
  m.def(
      "generate",
      [](const std::string& kind, int m_, int n, int t, std::uint64_t seed) {
        return generate(kind, GenParams{m_, n, t}, seed);
      },
      py::arg("kind"), py::arg("m") = 1, py::arg("n") = 1, py::arg("t") = 1,
      py::arg("seed") = 1);

  m.def("digraph_arcs",
        [](const Instance& inst) { return build_digraph(inst).arcs(); });
  m.def("interferes", [](const Instance& inst, int i, int j) {
    return interferes_on(inst.tree(), inst.requests().at(i),
                         inst.requests().at(j));
  });
  m.def("reduce", [](const Instance& inst) {
    auto [reduced, mapping] = reduce_instance(inst);
    return py::make_tuple(reduced, mapping.forward);
  });

  m.def("max_independent_set",
        [](const Instance& inst) { return max_independent_set(inst).members; });
  m.def("max_clique",
        [](const Instance& inst) { return max_clique(inst).members; });
  m.def("color_2approx", &color_2approx, py::arg("inst"), py::arg("root") = 0);
  m.def("color_2omega", &color_2omega);
  m.def("greedy_mis_color", &greedy_mis_color);
  m.def("chi_bound_root", &chi_bound_root);
  m.def("decide", &decide, py::arg("inst"), py::arg("k"), py::arg("root") = 0);
  m.def("is_proper", [](const Instance& inst, const Coloring& c) {
    return is_proper(build_digraph(inst), c);
  });

  m.def("oracle_alpha", [](const Instance& i) { return oracle_alpha(i).size; });
  m.def("oracle_omega", [](const Instance& i) { return oracle_omega(i).size; });
  m.def("oracle_chi",
        [](const Instance& i) { return oracle_chi(i).num_colours; });
}
