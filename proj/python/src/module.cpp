// Copyright 2026 The Tritile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tritile/cli.hpp"
#include "tritile/extract.hpp"
#include "tritile/generators.hpp"
#include "tritile/stretch.hpp"
#include "tritile/svg.hpp"

namespace py = pybind11;
using namespace tritile;

namespace {

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

py::object to_py(const Rational& q) { return fraction_type()(py::str(to_string(q))); }

// Accepts int, Fraction or a decimal/fraction string.
Rational from_py(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  const py::object f = fraction_type()(h);
  return parse_rational(py::str(f).cast<std::string>());
}

Point point_from(const py::handle& h) {
  const py::sequence s = h.cast<py::sequence>();
  if (s.size() != 2) throw py::value_error("a point has two coordinates");
  return {from_py(s[0]), from_py(s[1])};
}

py::tuple point_to(const Point& p) { return py::make_tuple(to_py(p.x), to_py(p.y)); }

Triangle triangle_from(const py::handle& h) {
  const py::sequence s = h.cast<py::sequence>();
  if (s.size() != 3) throw py::value_error("a triangle has three corners");
  return Triangle(point_from(s[0]), point_from(s[1]), point_from(s[2]));
}

py::dict record_to_dict(const AuditRecord& r) {
  py::dict d;
  for (const AuditLine& l : r.lines()) {
    d[py::str(l.name)] = py::make_tuple(l.value, l.status ? py::object(py::str(to_string(*l.status))) : py::none());
  }
  return d;
}

py::dict full_audit(const TilingPatch& p, bool unit_perimeter) {
  const IncidenceGraph g = build_incidence(p);
  const auto s = decompose_stretches(g);
  AuditRecord r;
  r.append(graph_audit(g), "graph.");
  r.append(vertex_audit(g), "vertex.");
  r.append(no_shared_side_conditions(g, s).to_record(), "conditions.");
  r.append(accounting_audit(g, s), "accounting.");
  WOptions w;
  w.unit_perimeter = unit_perimeter;
  r.append(w_audit(g, s, label_sides(g, s), w).record, "w.");
  return record_to_dict(r);
}

}  // namespace

PYBIND11_MODULE(_tritile, m) {
  m.doc() = "Exact triangle tilings: validation, stretch analysis and audits";

  py::register_exception<InvalidPatch>(m, "InvalidPatch", PyExc_ValueError);
  py::register_exception<GeneratorError>(m, "GeneratorError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<ExtractionError>(m, "ExtractionError", PyExc_ValueError);

  py::class_<TilingPatch>(m, "Patch")
      .def(py::init([](const py::iterable& tiles) {
             TilingPatch p;
             for (const py::handle& t : tiles) p.tiles.push_back(triangle_from(t));
             return p;
           }),
           py::arg("tiles"))
      .def_static("parse", [](const std::string& text) { return parse_tiling(text); }, py::arg("text"))
      .def("to_text", &serialize_tiling)
      .def("__len__", [](const TilingPatch& p) { return p.tiles.size(); })
      .def("__eq__", [](const TilingPatch& a, const TilingPatch& b) { return a == b; })
      .def_property_readonly("tiles",
                             [](const TilingPatch& p) {
                               py::list out;
                               for (const Triangle& t : p.tiles) out.append(py::make_tuple(point_to(t[0]), point_to(t[1]), point_to(t[2])));
                               return out;
                             })
      .def_property_readonly("region",
                             [](const TilingPatch& p) -> py::object {
                               if (!p.region) return py::none();
                               py::list out;
                               for (const Point& v : *p.region) out.append(point_to(v));
                               return out;
                             })
      .def_property_readonly("metadata", [](const TilingPatch& p) { return p.metadata; })
      .def("area", [](const TilingPatch& p) { return to_py(total_area(p)); });

  m.def(
      "validate",
      [](const TilingPatch& p) {
        const ValidationReport r = validate_patch(p);
        return py::make_tuple(r.ok, r.to_text());
      },
      py::arg("patch"), "Returns (ok, report text).");

  m.def("audit", &full_audit, py::arg("patch"), py::arg("unit_perimeter") = false,
        "Graph, vertex, condition, accounting and W checks as {name: (value, status)}.");

  m.def(
      "shared_sides",
      [](const TilingPatch& p) {
        std::vector<std::pair<TileId, TileId>> out;
        for (const SharedSide& s : shared_side_pairs(build_incidence(p))) out.emplace_back(s.a, s.b);
        return out;
      },
      py::arg("patch"));

  m.def(
      "stretches",
      [](const TilingPatch& p) {
        const IncidenceGraph g = build_incidence(p);
        py::list out;
        for (const Stretch& s : decompose_stretches(g)) {
          py::dict d;
          d["class"] = to_string(s.cls);
          d["size"] = s.size;
          d["from"] = point_to(g.arr.vertices[s.from]);
          d["to"] = point_to(g.arr.vertices[s.to]);
          out.append(d);
        }
        return out;
      },
      py::arg("patch"));

  m.def(
      "epsilon2",
      [](const TilingPatch& p) {
        const LengthExpr e = epsilon2(p);
        return py::make_tuple(e.to_string(), e.to_double());
      },
      py::arg("patch"), "Returns (exact expression, float).");

  m.def(
      "compare_root_sums",
      [](const std::vector<std::pair<py::object, py::object>>& lhs,
         const std::vector<std::pair<py::object, py::object>>& rhs) {
        auto build = [](const auto& terms) {
          LengthExpr e;
          for (const auto& [c, r] : terms) e += LengthExpr::sqrt_of(from_py(r)) * from_py(c);
          return e;
        };
        switch (compare(build(lhs), build(rhs))) {
          case Ordering::kLess: return -1;
          case Ordering::kEqual: return 0;
          case Ordering::kGreater: return 1;
        }
        return 0;
      },
      py::arg("lhs"), py::arg("rhs"), "Sign of sum c*sqrt(r) over lhs minus rhs, decided exactly.");

  m.def(
      "recursive_split",
      [](const py::object& t, int depth, const py::object& base) {
        RecursiveSplitSpec s;
        s.t = from_py(t);
        s.depth = depth;
        if (!base.is_none()) s.base = triangle_from(base);
        return gen_recursive_split(s);
      },
      py::arg("t") = 2, py::arg("depth") = 1, py::arg("base") = py::none());

  m.def(
      "two_scale",
      [](const py::object& b, const py::object& h, int mx, int ny) {
        return gen_two_scale_periodic({from_py(b), from_py(h), mx, ny});
      },
      py::arg("b") = 1, py::arg("h") = 1, py::arg("m") = 1, py::arg("n") = 1);

  m.def(
      "convex_triangulation",
      [](const py::iterable& vertices, const std::string& strategy, std::uint64_t seed) {
        std::vector<Point> v;
        for (const py::handle& h : vertices) v.push_back(point_from(h));
        if (strategy != "fan" && strategy != "random") throw py::value_error("strategy is 'fan' or 'random'");
        return gen_convex_triangulation(v, strategy == "fan" ? SplitStrategy::kFan : SplitStrategy::kRandomSplit, seed);
      },
      py::arg("vertices"), py::arg("strategy") = "fan", py::arg("seed") = 0);

  m.def(
      "circle_polygon",
      [](int k, std::uint64_t seed) {
        py::list out;
        for (const Point& p : rational_circle_polygon(k, seed)) out.append(point_to(p));
        return out;
      },
      py::arg("k"), py::arg("seed") = 0);

  m.def(
      "reflected_pair",
      [](const py::object& tri, const std::string& kind) {
        PairKind k;
        if (kind == "line") {
          k = PairKind::kLine;
        } else if (kind == "midpoint") {
          k = PairKind::kMidpoint;
        } else if (kind == "bisector") {
          k = PairKind::kBisector;
        } else {
          throw py::value_error("kind is 'line', 'midpoint' or 'bisector'");
        }
        return gen_reflected_pair(triangle_from(tri), k);
      },
      py::arg("triangle"), py::arg("kind") = "midpoint");

  m.def("refine", &refine_random, py::arg("patch"), py::arg("steps"), py::arg("seed") = 0);

  m.def(
      "render_svg",
      [](const TilingPatch& p, int width, bool overlay, bool labels) {
        return render_svg(p, {width, overlay, labels});
      },
      py::arg("patch"), py::arg("width") = 800, py::arg("stretch_overlay") = false, py::arg("labels") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
