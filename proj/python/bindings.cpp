#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "viswork/dnc.hpp"
#include "viswork/oracle.hpp"
#include "viswork/runner.hpp"
#include "viswork/testgen.hpp"

namespace py = pybind11;
using namespace viswork;

namespace {

py::dict event_dict(const VisEvent& e) {
  py::dict d;
  switch (e.kind) {
    case VisEvent::Kind::P0:
      d["kind"] = "P0";
      break;
    case VisEvent::Kind::VERT:
      d["kind"] = "V";
      d["vertex"] = e.vertex;
      break;
    case VisEvent::Kind::SHADOW:
      d["kind"] = "S";
      d["reflex"] = e.vertex;
      d["edge"] = e.edge;
      break;
  }
  d["x"] = e.point.x.str();
  d["y"] = e.point.y.str();
  return d;
}

py::list event_pylist(const EventList& events) {
  py::list out;
  for (const VisEvent& e : events) out.append(event_dict(e));
  return out;
}

py::dict run_dict(const RunResult& res) {
  py::dict d;
  d["events"] = event_pylist(res.events);
  py::dict m;
  m["access_count"] = res.report.access_count;
  m["ws_peak"] = res.report.ws_peak;
  m["depth_peak"] = res.report.depth_peak;
  m["r_out"] = res.report.r_out;
  m["retries"] = res.report.retries;
  m["passes"] = res.report.passes;
  m["digest"] = res.report.digest;
  d["metrics"] = m;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "visibility polygons in simple polygons under tight workspace budgets";

  py::class_<PolygonHandle>(m, "Polygon")
      .def_property_readonly("n", &PolygonHandle::n)
      .def("vertex",
           [](const PolygonHandle& h, std::size_t i) {
             if (i >= h.n()) throw py::index_error();
             return std::make_pair(h.pt(i).x.str(), h.pt(i).y.str());
           })
      .def_property_readonly("viewpoint",
                             [](const PolygonHandle& h) {
                               return std::make_pair(h.viewpoint().x.str(),
                                                     h.viewpoint().y.str());
                             })
      .def("__repr__", [](const PolygonHandle& h) {
        return "<viswork.Polygon n=" + std::to_string(h.n()) + ">";
      });

  m.def(
      "load_text",
      [](const std::string& text, std::optional<bool> strict) {
        LoadOptions opts;
        opts.strict = strict;
        return load_text(text, opts);
      },
      py::arg("text"), py::arg("strict") = py::none(),
      "parse an instance (n, vertex lines, q line) and validate it");

  m.def(
      "vis_polygon",
      [](const PolygonHandle& h) {
        RunConfig cfg;
        return run_dict(run_algo(h, cfg));
      },
      py::arg("polygon"),
      "single-pass scan; returns {'events': [...], 'metrics': {...}}");

  m.def(
      "vis_dnc",
      [](const PolygonHandle& h, std::size_t s, const std::string& variant,
         std::uint64_t seed, bool validate) {
        RunConfig cfg;
        cfg.algo = variant == "rand" ? AlgoKind::DNC_RAND : AlgoKind::DNC_DET;
        cfg.s = s;
        cfg.seed = seed;
        cfg.validate = validate;
        return run_dict(run_algo(h, cfg));
      },
      py::arg("polygon"), py::arg("s") = 1, py::arg("variant") = "det",
      py::arg("seed") = 0, py::arg("validate") = false,
      "divide-and-conquer with workspace exponent s");

  m.def(
      "oracle_vis",
      [](const PolygonHandle& h) { return event_pylist(oracle_vis(h)); },
      py::arg("polygon"), "quadratic reference answer");

  m.def("depth_cap", &depth_cap, py::arg("s"), py::arg("r"),
        "recursion depth bound for workspace exponent s and r reflex vertices");

  m.def(
      "generate_text",
      [](const std::string& spec) {
        Generated g = generate(GenSpec::parse(spec));
        std::string out = std::to_string(g.vertices.size()) + "\n";
        for (const Point& p : g.vertices)
          out += p.x.str() + " " + p.y.str() + "\n";
        out += "q " + g.q.x.str() + " " + g.q.y.str() + "\n";
        return std::make_pair(out, g.handle.has_value());
      },
      py::arg("spec"),
      "render a generator spec like 'comb:m=8,seed=3' to instance text; "
      "returns (text, loadable)");

  m.def("reflex_count", &reflex_count, py::arg("polygon"),
        "reflex vertices of the polygon itself");
}
