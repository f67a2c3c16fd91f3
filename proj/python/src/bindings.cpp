#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coverdepth/decomposition.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/graph_ideals.hpp"
#include "coverdepth/graph_io.hpp"
#include "coverdepth/harness.hpp"
#include "coverdepth/homology.hpp"
#include "coverdepth/monomial.hpp"
#include "coverdepth/sdepth.hpp"
#include "coverdepth/serialize.hpp"

namespace py = pybind11;
using namespace coverdepth;

namespace {

ModuleKind kind_of(const std::string& s) {
  if (s == "ideal") return ModuleKind::Ideal;
  if (s == "quotient") return ModuleKind::Quotient;
  throw InputError("module must be 'ideal' or 'quotient'");
}

std::vector<int> members(VertexSet s) { return set_members(s); }

std::vector<std::vector<long long>> exponent_rows(const MonomialIdeal& a) {
  std::vector<std::vector<long long>> out;
  for (const auto& g : a.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

MonomialIdeal ideal_from_rows(std::size_t n, const std::vector<std::vector<long long>>& rows) {
  std::vector<Monomial> gens;
  for (const auto& r : rows) gens.push_back(Monomial::from_exponents(r));
  return minimalize(n, std::move(gens));
}

}  // namespace

PYBIND11_MODULE(_coverdepth, m) {
  m.doc() = "Cover ideals of graphs: ordered matchings, Betti numbers and Stanley depth";
  m.attr("__version__") = kToolVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ArithmeticError>(m, "ArithmeticError", PyExc_OverflowError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init(&Graph::from_edges), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("add_edge", &Graph::add_edge)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, int v) { return members(g.neighbors(v)); })
      .def("canonical", &Graph::canonical_string)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph " + g.canonical_string() + ">"; });

  m.def("parse_graph", &parse_graph, py::arg("text"), "Edge list, compact `n=..;edges=..` or graph6 text.");
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite_graph", &complete_bipartite_graph);
  m.def("enumerate_graphs", [](int n, bool bipartite, bool connected, int min_edges) {
        EnumerationFilter f{bipartite, connected, min_edges};
        return all_graphs(n, f);
      }, py::arg("n"), py::arg("bipartite") = false, py::arg("connected") = false, py::arg("min_edges") = 0);

  m.def("ordered_matching_number", &ordered_matching_number);
  m.def("max_ordered_matching", [](const Graph& g) {
    const auto r = max_ordered_matching(g);
    return py::make_tuple(r.value, r.witness.pairs);
  }, "Value and a witness list of (a, b) pairs.");
  m.def("matching_number", &matching_number);
  m.def("min_maximal_matching", &min_maximal_matching);
  m.def("is_bipartite", &is_bipartite);
  m.def("minimal_vertex_covers", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (VertexSet c : minimal_vertex_covers(g)) out.push_back(members(c));
    return out;
  });

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init(&ideal_from_rows), py::arg("n"), py::arg("generators"))
      .def_static("parse", [](const std::string& text, std::size_t n) { return parse_ideal(text, n); })
      .def_property_readonly("n", &MonomialIdeal::num_vars)
      .def_property_readonly("generators", &exponent_rows)
      .def("contains", [](const MonomialIdeal& a, const std::vector<long long>& e) {
        return a.contains(Monomial::from_exponents(e));
      })
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return equals(a, b); })
      .def("__str__", [](const MonomialIdeal& a) { return to_string(a); })
      .def("__repr__", [](const MonomialIdeal& a) { return "<MonomialIdeal " + to_string(a) + ">"; });

  m.def("edge_ideal", &edge_ideal);
  m.def("cover_ideal", &cover_ideal_checked);
  m.def("symbolic_power_cover", &symbolic_power_cover);
  m.def("power", &power);
  m.def("intersect", &intersect);
  m.def("alexander_dual", &alexander_dual);
  m.def("colon", [](const MonomialIdeal& a, const std::vector<long long>& e) {
    return colon(a, Monomial::from_exponents(e));
  });

  // Structured results cross the boundary as JSON text; the Python package
  // decodes them into dicts.
  m.def("_betti_json", [](const MonomialIdeal& a, bool prime, std::uint64_t max_box) {
    BettiOptions o;
    o.field = prime ? Field::Prime : Field::Rational;
    o.max_box = max_box;
    const BettiTable t = betti_table(a, o);
    json out = to_json(t);
    out["invariants"] = to_json(invariants_from_table(t));
    return out.dump();
  });
  m.def("hochster_reg_edge_ideal", [](const Graph& g) { return hochster_reg_edge_ideal(g); });
  m.def("_sdepth_json", [](const MonomialIdeal& a, const std::string& module, std::uint64_t budget) {
    const ModuleKind kind = kind_of(module);
    const CharacteristicPoset poset(a, kind);
    return to_json(sdepth_exact(a, kind, budget), poset).dump();
  });
  m.def("_decompose_json", [](const Graph& g, int k, const std::string& module) {
    const ModuleKind kind = kind_of(module);
    const StanleyDecomposition d = k == 1 ? construct_cover(g, kind) : construct_cover_power(g, k, kind);
    json out = to_json(d);
    const DecompositionCheck c = verify_decomposition(d);
    out["verified"] = c.ok;
    if (!c.ok) out["violation"] = c.message;
    return out.dump();
  });
  m.def("_verify_decomposition_json", [](const std::string& text) {
    const DecompositionCheck c = verify_decomposition(decomposition_from_json(json::parse(text)));
    return json{{"ok", c.ok}, {"message", c.message}}.dump();
  });
  m.def("_invariants_json", [](const Graph& g) { return graph_invariants(g).dump(); });
  m.def("suite_ids", &suite_ids);
  m.def("_run_suite_json", [](const std::string& suite, int n_max, int k_max, std::uint64_t budget,
                              std::uint64_t seed, bool bipartite_only) {
    SuiteScope s;
    s.n_max = n_max;
    s.k_max = k_max;
    s.budget = budget;
    s.seed = seed;
    s.bipartite_only = bipartite_only;
    const VerificationReport r = run_suite(suite, s);
    json out = r.to_json();
    out["exit_code"] = r.exit_code(false);
    return out.dump();
  });
}
