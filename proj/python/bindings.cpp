#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covlab/canonical.hpp"
#include "covlab/catalog.hpp"
#include "covlab/constructions.hpp"
#include "covlab/cover.hpp"
#include "covlab/descent.hpp"
#include "covlab/error.hpp"
#include "covlab/io.hpp"
#include "covlab/search.hpp"
#include "covlab/verification.hpp"

namespace py = pybind11;
using namespace covlab;

namespace {

std::vector<std::vector<int>> edge_lists(const Hypergraph& h) { return h.edge_lists(); }

std::vector<int> to_list(const VertexSet& s) { return s.to_vector(); }

VertexSet from_list(const Hypergraph& h, const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= h.num_vertices()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    s.set(v);
  }
  return s;
}

py::dict report_dict(const SearchReport& r) {
  py::dict d;
  d["spec"] = r.spec.describe();
  d["class_count"] = r.class_count;
  d["extremal_count"] = r.extremal_count;
  d["representatives"] = r.representatives;
  d["extremal"] = r.extremal;
  d["nodes"] = r.nodes;
  d["seconds"] = r.wall_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(covlab, m) {
  m.doc() = "Covering numbers and isomorph-free search for intersecting hypergraphs";

  static py::exception<Error> error(m, "CovlabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object code = py::str(std::string(to_string(e.code())));
      PyErr_SetObject(error.ptr(), py::make_tuple(py::str(e.what()), code).ptr());
    }
  });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, const std::vector<std::vector<int>>&>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph::num_vertices)
      .def_property_readonly("m", &Hypergraph::num_edges)
      .def("edges", &edge_lists)
      .def("degrees", &Hypergraph::degrees)
      .def("dual", &Hypergraph::dual)
      .def("relabeled", [](const Hypergraph& h, const std::vector<int>& perm) { return h.relabeled(perm); })
      .def("without_edge", &Hypergraph::without_edge)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph n=" + std::to_string(h.num_vertices()) + " m=" + std::to_string(h.num_edges()) + ">";
      });

  py::class_<TauResult>(m, "TauResult")
      .def_readonly("tau", &TauResult::tau)
      .def_property_readonly("witness", [](const TauResult& r) { return to_list(r.witness.vertices); })
      .def_readonly("exhaustive", &TauResult::exhaustive);

  m.def("covering_number", &covering_number, py::arg("h"), py::call_guard<py::gil_scoped_release>());
  m.def("covering_number_oracle", &covering_number_oracle, py::arg("h"));
  m.def(
      "find_cover",
      [](const Hypergraph& h, int k) -> std::optional<std::vector<int>> {
        const auto cover = find_cover(h, k);
        if (!cover) return std::nullopt;
        return to_list(cover->vertices);
      },
      py::arg("h"), py::arg("k"));
  m.def(
      "is_cover", [](const Hypergraph& h, const std::vector<int>& s) { return is_cover(h, from_list(h, s)); },
      py::arg("h"), py::arg("vertices"));
  m.def("max_degree_cap", &max_degree_cap, py::arg("e"), py::arg("r"), py::arg("target"), py::arg("two_intersecting"));

  m.def(
      "canonical_form",
      [](const Hypergraph& h) {
        const CanonicalForm f = canonical_form(h);
        return py::bytes(reinterpret_cast<const char*>(f.words.data()), f.words.size() * sizeof(std::uint64_t));
      },
      py::arg("h"));
  m.def("canonical_representative", &canonical_representative, py::arg("h"));
  m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
  m.def(
      "dedup", [](const std::vector<Hypergraph>& hs) { return dedup(hs); }, py::arg("hypergraphs"));
  m.def(
      "automorphism_generators", [](const Hypergraph& h) { return canonical_labeling(h).generators; }, py::arg("h"));

  m.def("projective_plane", [](int q) { return projective_plane(q).incidence; }, py::arg("q"));
  m.def("complete_subsets", &complete_subsets, py::arg("n"), py::arg("r"));
  m.def("cross_grid", &cross_grid, py::arg("rows"), py::arg("cols"));
  m.def("kummer", &kummer);
  m.def("paley_biplane", &paley_biplane);
  m.def("tetrahedron", &tetrahedron);
  m.def("fano_plane", &fano_plane);
  m.def("fano_complement", &fano_complement);
  m.def("oval_lines", &oval_lines, py::arg("q"));
  m.def("ag23_dual", &ag23_dual);

  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name) { return catalog(name).hypergraph; }, py::arg("name"));

  m.def("parse_incidence", [](const std::string& text) { return parse_incidence(text); }, py::arg("text"));
  m.def("serialize_incidence", &serialize_incidence, py::arg("h"));
  m.def(
      "parse_blocks",
      [](const std::string& text) {
        BlockList b = parse_blocks(text);
        return py::make_tuple(b.hypergraph, b.original_label);
      },
      py::arg("text"));
  m.def("serialize_blocks", &serialize_blocks, py::arg("h"));

  m.def(
      "generate",
      [](int r, int t, int n, int edges, int min_degree, int max_degree, std::optional<int> target_tau, bool keep,
         int threads) {
        SearchSpec spec;
        spec.r = r;
        spec.t = t;
        spec.n = n;
        spec.m = edges;
        spec.min_degree = min_degree;
        spec.max_degree = max_degree;
        spec.target_tau = target_tau;
        SearchOptions options;
        options.keep_representatives = keep;
        options.threads = threads;
        SearchReport report;
        {
          py::gil_scoped_release release;
          report = generate(spec, options);
        }
        return report_dict(report);
      },
      py::arg("r"), py::arg("t"), py::arg("n"), py::arg("m"), py::arg("min_degree") = 1, py::arg("max_degree") = 0,
      py::arg("target_tau") = py::none(), py::arg("keep_representatives") = true, py::arg("threads") = 0);

  m.def(
      "descend",
      [](int q, int min_edges, bool extremal_frontier, int threads) {
        DescentOptions options;
        options.min_edges = min_edges;
        options.extremal_frontier = extremal_frontier;
        options.threads = threads;
        DescentResult result;
        {
          py::gil_scoped_release release;
          result = descend(q, options);
        }
        py::list levels;
        for (const auto& level : result.levels) {
          py::dict d;
          d["edges"] = level.edge_count;
          d["classes"] = level.class_count;
          d["extremal_count"] = level.extremal_count;
          d["extremal"] = level.extremal;
          levels.append(d);
        }
        py::dict out;
        out["levels"] = levels;
        out["m"] = result.m;
        out["complete"] = result.complete;
        return out;
      },
      py::arg("q"), py::arg("min_edges") = 1, py::arg("extremal_frontier") = false, py::arg("threads") = 0);

  m.def(
      "run_criterion",
      [](int id, bool long_mode, const std::string& biplanes) {
        VerifyOptions options;
        options.long_mode = long_mode;
        options.biplane_dir = biplanes;
        CriterionResult r;
        {
          py::gil_scoped_release release;
          r = run_criterion(id, options);
        }
        return py::make_tuple(to_string(r.outcome), r.title, r.detail);
      },
      py::arg("id"), py::arg("long_mode") = false, py::arg("biplanes") = "");
}
