#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hspec/bounds.hpp"
#include "hspec/clique.hpp"
#include "hspec/comb.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/lagrange.hpp"
#include "hspec/spectral.hpp"
#include "hspec/tensor.hpp"

namespace py = pybind11;
using namespace hspec;

namespace {

py::object big_to_py(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

}  // namespace

PYBIND11_MODULE(hspec, m) {
  m.doc() = "Spectral, clique and Lagrangian analysis of general hypergraphs";

  py::register_exception<Error>(m, "HspecError", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph::vertex_count)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def_property_readonly("rank", &Hypergraph::rank)
      .def("edge_types", [](const Hypergraph& h) { return edge_types(h); })
      .def("vertex_profile",
           [](const Hypergraph& h, int v) {
             return vertex_profile(h, v).type_counts;
           },
           py::arg("vertex"))
      .def("connected_components",
           [](const Hypergraph& h) { return connected_components(h); })
      .def("is_connected", [](const Hypergraph& h) { return is_connected(h); })
      .def("is_complete",
           [](const Hypergraph& h) { return is_complete_r_graph(h); })
      .def("to_text", &to_text)
      .def("to_json", &to_json_string)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__len__", &Hypergraph::edge_count)
      .def("__repr__", [](const Hypergraph& h) {
        std::ostringstream os;
        os << "Hypergraph(n=" << h.vertex_count() << ", edges="
           << h.edge_count() << ", rank=" << h.rank() << ")";
        return os.str();
      });

  m.def("parse", &parse_hypergraph, py::arg("content"),
        "Parse a hypergraph from text or JSON content");
  m.def("load", &load_hypergraph, py::arg("path"));
  m.def("complete_r_graph", &complete_r_graph, py::arg("n"), py::arg("types"));
  m.def("random_r_graph", &random_r_graph, py::arg("n"), py::arg("types"),
        py::arg("p"), py::arg("seed"));

  m.def("alpha", [](int s, int m_) { return big_to_py(alpha(s, m_)); },
        py::arg("s"), py::arg("m"),
        "Number of surjections from an m-set onto an s-set");
  m.def("binom", [](long long a, long long b) { return big_to_py(binom(a, b)); },
        py::arg("a"), py::arg("b"));

  py::class_<SpectralResult>(m, "SpectralResult")
      .def_readonly("rho", &SpectralResult::rho)
      .def_readonly("eigenvector", &SpectralResult::eigenvector)
      .def_readonly("residual", &SpectralResult::residual)
      .def_readonly("iterations", &SpectralResult::iterations)
      .def_readonly("lambda_lo", &SpectralResult::lambda_lo)
      .def_readonly("lambda_hi", &SpectralResult::lambda_hi)
      .def_readonly("positive_support", &SpectralResult::positive_support)
      .def_readonly("component_rho", &SpectralResult::component_rho)
      .def("__repr__", [](const SpectralResult& r) {
        std::ostringstream os;
        os << "SpectralResult(rho=" << r.rho << ")";
        return os.str();
      });

  m.def("spectral_radius",
        [](const Hypergraph& h, double tol, long max_iter, double shift) {
          PowerIterationConfig cfg;
          cfg.tolerance = tol;
          cfg.max_iterations = max_iter;
          cfg.shift = shift;
          return spectral_radius(h, cfg);
        },
        py::arg("h"), py::arg("tol") = 1e-10, py::arg("max_iter") = 100000,
        py::arg("shift") = 1.0);
  m.def("eigen_residual",
        [](const Hypergraph& h, const std::vector<double>& x, double lam) {
          return eigen_residual(h, x, lam);
        },
        py::arg("h"), py::arg("x"), py::arg("lam"));

  py::class_<CliqueResult>(m, "CliqueResult")
      .def_readonly("omega", &CliqueResult::omega)
      .def_readonly("witness", &CliqueResult::witness)
      .def_readonly("nodes_explored", &CliqueResult::nodes_explored)
      .def("__repr__", [](const CliqueResult& r) {
        std::ostringstream os;
        os << "CliqueResult(omega=" << r.omega << ")";
        return os.str();
      });

  m.def("clique_number", &clique_number, py::arg("h"));
  m.def("is_clique",
        [](const Hypergraph& h, const std::vector<int>& s) {
          return is_clique(h, s);
        },
        py::arg("h"), py::arg("vertices"));
  m.def("find_nonadjacent_twins", &find_nonadjacent_twins, py::arg("h"));
  m.def("ms_hypothesis_holds", &ms_hypothesis_holds, py::arg("h"));

  py::class_<LagrangianResult>(m, "LagrangianResult")
      .def_readonly("value", &LagrangianResult::value)
      .def_property_readonly("maximizer",
                             [](const LagrangianResult& r) {
                               return r.maximizer.weights();
                             })
      .def_readonly("starts_used", &LagrangianResult::starts_used)
      .def_readonly("kkt_residual", &LagrangianResult::kkt_residual)
      .def("__repr__", [](const LagrangianResult& r) {
        std::ostringstream os;
        os << "LagrangianResult(value=" << r.value << ")";
        return os.str();
      });

  m.def("evaluate_L",
        [](const Hypergraph& h, const std::vector<double>& x) {
          return lagrangian_polynomial(h, x);
        },
        py::arg("h"), py::arg("x"),
        "The homogeneous polynomial at an arbitrary point");
  m.def("gradient_L",
        [](const Hypergraph& h, const std::vector<double>& x) {
          return gradient_L(h, x);
        },
        py::arg("h"), py::arg("x"));
  m.def("maximize_L", &maximize_L, py::arg("h"), py::arg("starts") = 32,
        py::arg("seed") = 0, py::arg("tol") = 1e-10);
  m.def("predicted_L", &predicted_L, py::arg("omega"), py::arg("m"));
  m.def("project_to_simplex",
        [](const std::vector<double>& v) {
          return project_to_simplex(v).weights();
        },
        py::arg("v"));

  m.def("analyze_json",
        [](const Hypergraph& h, double tol, long max_iter, double shift,
           int starts, std::uint64_t seed) {
          AnalysisConfig cfg;
          cfg.power.tolerance = tol;
          cfg.power.max_iterations = max_iter;
          cfg.power.shift = shift;
          cfg.starts = starts;
          cfg.seed = seed;
          cfg.lagrange_tol = tol;
          return analysis_to_json(analyze_hypergraph(h, cfg));
        },
        py::arg("h"), py::arg("tol") = 1e-10, py::arg("max_iter") = 100000,
        py::arg("shift") = 1.0, py::arg("starts") = 32, py::arg("seed") = 0,
        "Full analysis (clique, spectral, Lagrangian, bound report) as JSON");

  m.attr("__version__") = "0.1.0";
}
