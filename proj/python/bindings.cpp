#include "goeritz/diagram.hpp"
#include "goeritz/error.hpp"
#include "goeritz/medial.hpp"
#include "goeritz/mu.hpp"
#include "goeritz/signed_graph.hpp"
#include "goeritz/tau.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace goeritz;

namespace {

using Rows = std::vector<std::vector<SymmetricIntMatrix::Entry>>;
using EdgeList = std::vector<std::tuple<int, int, int>>;

SignedMultigraph make_graph(int vertices, const EdgeList& edges, std::optional<Rotation> rotation) {
  std::vector<SignedEdge> es;
  for (const auto& [u, v, s] : edges) es.push_back({u, v, s});
  return SignedMultigraph(vertices, std::move(es), std::move(rotation));
}

py::dict graph_dict(const SignedMultigraph& g) {
  EdgeList edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v, e.sign);
  py::dict out;
  out["vertices"] = g.vertex_count();
  out["edges"] = edges;
  out["rotation"] = g.rotation() ? py::cast(*g.rotation()) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Kauffman bracket, Jones polynomial and Goeritz matrix computations";

  static py::exception<Error> error(m, "GoeritzError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(std::string(to_string(e.kind())), e.what()).ptr());
    }
  });

  m.def("mu", [](const Rows& g) { return mu(SymmetricIntMatrix(g)).to_string(); }, py::arg("matrix"),
        "mu polynomial of a symmetric integer matrix, rendered as text.");
  m.def(
      "tau",
      [](int vertices, const EdgeList& edges) { return tau(make_graph(vertices, edges, std::nullopt)).to_string(); },
      py::arg("vertices"), py::arg("edges"), "tau polynomial of a signed multigraph.");
  m.def(
      "goeritz_from_graph",
      [](int vertices, const EdgeList& edges, int base) {
        return goeritz_from_graph(make_graph(vertices, edges, std::nullopt), base).rows();
      },
      py::arg("vertices"), py::arg("edges"), py::arg("base") = 0);
  m.def(
      "goeritz_from_pd",
      [](const PDCode& pd, int shading_index, std::optional<int> base) {
        const Diagram d = Diagram::from_pd(pd);
        const Shading s = shading(d, shading_index);
        return (base ? goeritz_from_diagram(d, s, *base) : goeritz_from_diagram(d, s)).matrix.rows();
      },
      py::arg("pd"), py::arg("shading") = 0, py::arg("base") = py::none());
  m.def("genus", [](const PDCode& pd) { return faces_and_genus(Diagram::from_pd(pd)).genus; }, py::arg("pd"));
  m.def("bracket", [](const PDCode& pd) { return bracket_state_sum(Diagram::from_pd(pd)).to_string(); },
        py::arg("pd"));
  m.def("jones", [](const PDCode& pd) { return jones(Diagram::from_pd(pd)).to_string(); }, py::arg("pd"));
  m.def(
      "nu",
      [](const PDCode& pd) {
        const Diagram d = Diagram::from_pd(pd);
        const auto [s0, s1] = checkerboard(d);
        return std::make_pair(nu(d, s0).to_string(), nu(d, s1).to_string());
      },
      py::arg("pd"), "nu polynomials of shadings 0 and 1.");
  m.def(
      "determinant_set",
      [](const PDCode& pd) {
        const DeterminantSet ds = determinant_set(Diagram::from_pd(pd));
        py::dict out;
        out["det_g"] = py::int_(py::str(ds.det_g.str()));
        out["det_g_prime"] = py::int_(py::str(ds.det_g_prime.str()));
        out["nu_abs"] = py::int_(py::str(ds.nu_abs.str()));
        out["nu_abs_prime"] = py::int_(py::str(ds.nu_abs_prime.str()));
        out["pairing"] = ds.pairing_holds();
        return out;
      },
      py::arg("pd"));
  m.def("realize", [](const Rows& g) { return graph_dict(graph_from_matrix(SymmetricIntMatrix(g))); },
        py::arg("matrix"), "Signed graph whose Goeritz matrix at vertex 0 is the input.");
  m.def(
      "medial",
      [](int vertices, const EdgeList& edges, const Rotation& rotation) {
        return medial(make_graph(vertices, edges, rotation)).diagram.pd();
      },
      py::arg("vertices"), py::arg("edges"), py::arg("rotation"), "PD code of the medial diagram.");
}
