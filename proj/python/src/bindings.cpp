#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypertile/analysis.hpp"
#include "hypertile/construction.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/geometry.hpp"
#include "hypertile/isomorphism.hpp"
#include "hypertile/json_io.hpp"
#include "hypertile/render.hpp"
#include "hypertile/transform.hpp"
#include "hypertile/verify.hpp"

namespace py = pybind11;
using namespace hypertile;

namespace {

py::dict check_dict(const VertexType& k) {
  py::dict d;
  d["vertex_type"] = k.to_string();
  d["entries"] = k.canonical_form();
  d["degree"] = k.degree();
  d["angle_sum"] = angle_sum(k).to_string();
  d["hyperbolic"] = is_hyperbolic(k);
  const auto a = condition_a(k);
  const auto b = condition_b(k);
  d["condition_a"] = !a.has_value();
  d["condition_a_witness"] = a ? py::object(py::str(a->to_string())) : py::object(py::none());
  d["condition_b"] = !b.has_value();
  d["condition_b_witness"] = b ? py::object(py::str(b->to_string())) : py::object(py::none());
  d["pair_deterministic"] = pair_deterministic(k);
  const ExistenceVerdict v = existence_verdict(k);
  d["verdict"] = to_string(v.status);
  d["reasons"] = v.reasons;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semi-regular hyperbolic tilings: criteria, construction, geometry";

  // Base first: translators registered later take precedence.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<RefusalError>(m, "RefusalError", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<VertexType>(m, "VertexType")
      .def(py::init([](const std::vector<int>& e) { return VertexType(e); }))
      .def_static("parse", [](const std::string& s) { return VertexType::parse(s); })
      .def_property_readonly("entries", &VertexType::entries)
      .def_property_readonly("canonical_form", &VertexType::canonical_form)
      .def_property_readonly("degree", &VertexType::degree)
      .def("__eq__", [](const VertexType& a, const VertexType& b) { return a == b; })
      .def("__str__", &VertexType::to_string)
      .def("__repr__", [](const VertexType& k) { return "VertexType(" + k.to_string() + ")"; });

  auto as_type = [](const py::object& o) {
    if (py::isinstance<VertexType>(o)) return o.cast<VertexType>();
    if (py::isinstance<py::str>(o)) return VertexType::parse(o.cast<std::string>());
    return VertexType(o.cast<std::vector<int>>());
  };

  m.def("check", [=](const py::object& k) { return check_dict(as_type(k)); },
        "Criteria report for a vertex-type given as text, list or VertexType.");
  m.def("appears", [=](const py::object& k, const std::vector<int>& w) { return appears(as_type(k), w); });
  m.def("continuations", [=](const py::object& k, const std::vector<int>& w) {
    return continuations(as_type(k), w);
  });
  m.def("classify_degree3", [=](const py::object& k) {
    const auto c = classify_degree3(as_type(k));
    return py::make_tuple(c.exists, to_string(c.label), c.reason);
  });
  m.def("side_length", [=](const py::object& k) { return side_length(as_type(k)).side_length; });
  m.def("interior_angle", &interior_angle, py::arg("k"), py::arg("l"));

  py::class_<Tiling>(m, "Tiling")
      .def_property_readonly("num_vertices", &Tiling::num_vertices)
      .def_property_readonly("num_edges", &Tiling::num_edges)
      .def_property_readonly("num_faces", &Tiling::num_faces)
      .def_readonly("layer_count", &Tiling::layer_count)
      .def_property_readonly("kind", [](const Tiling& t) { return to_string(t.kind); })
      .def_property_readonly("vertex_type", [](const Tiling& t) -> py::object {
        if (!t.vertex_type) return py::none();
        return py::str(t.vertex_type->to_string());
      })
      .def("face_sizes", [](const Tiling& t) {
        std::vector<int> out;
        for (const auto& f : t.faces) out.push_back(f.size);
        return out;
      })
      .def("interior_vertices", [](const Tiling& t) {
        std::vector<int> out;
        for (int v = 0; v < t.num_vertices(); ++v) {
          if (t.vertices[v].interior) out.push_back(v);
        }
        return out;
      })
      .def("vertex_face_sizes", &Tiling::vertex_face_sizes);

  m.def(
      "build",
      [=](const py::object& k, int layers, const std::string& policy, bool force) {
        BuildResult r = build(as_type(k), layers, BuildPolicy::parse(policy), force);
        py::dict d;
        d["tiling"] = std::move(r.tiling);
        d["complete"] = r.complete;
        d["failure"] = r.failure;
        d["offending_word"] = r.offending_word;
        d["choices"] = r.choices;
        return d;
      },
      py::arg("k"), py::arg("layers"), py::arg("policy") = "lex", py::arg("force") = false);

  m.def("verify", [](const Tiling& t) {
    const VerifyReport rep = verify(t);
    py::dict d;
    d["passed"] = rep.passed();
    py::dict checks;
    for (const auto& c : rep.checks) checks[py::str(c.name)] = py::make_tuple(c.passed, c.witnesses);
    d["checks"] = checks;
    d["layer_vertex_counts"] = rep.layer_vertex_counts;
    return d;
  });

  m.def("dual", [](const Tiling& t) { return dual(t); });
  m.def("truncate", [](const Tiling& t) { return hypertile::truncate(t); });
  m.def("is_isomorphic", &is_isomorphic);
  m.def("canonical_code", [](const Tiling& t) { return canonical_code(t); });
  m.def("count_straight_chains", &count_straight_chains, py::arg("t"), py::arg("end_size"),
        py::arg("mid_size"), py::arg("count"));
  m.def("layer_stats", [](const Tiling& t) {
    py::list out;
    for (const auto& s : layer_stats(t)) {
      py::dict d;
      d["layer"] = s.layer;
      d["vertices"] = s.vertices;
      d["edges"] = s.edges;
      d["faces"] = s.faces;
      d["boundary_vertices"] = s.boundary_vertices;
      d["growth"] = s.growth;
      out.append(d);
    }
    return out;
  });

  m.def("coordinates", [](const Tiling& t) {
    if (!t.vertex_type) throw PreconditionError("patch has no vertex-type to realize");
    return realize(t, side_length(*t.vertex_type)).coords;
  });
  m.def("geometric_errors", [](const Tiling& t) {
    if (!t.vertex_type) throw PreconditionError("patch has no vertex-type to realize");
    const GeometryReport g = geometric_checks(t, realize(t, side_length(*t.vertex_type)));
    py::dict d;
    d["edge"] = g.max_edge_error;
    d["angle"] = g.max_angle_error;
    d["misfit"] = g.max_misfit;
    d["passed"] = g.passed();
    return d;
  });

  m.def("to_json", [](const Tiling& t, bool with_coords) {
    if (with_coords && t.vertex_type) {
      const Realization r = realize(t, side_length(*t.vertex_type));
      return to_json(t, &r);
    }
    return to_json(t);
  }, py::arg("t"), py::arg("with_coords") = true);
  m.def("from_json", [](const std::string& s) { return from_json(s).tiling; });

  m.def(
      "to_svg",
      [](const Tiling& t, const std::string& color_by, bool disk, bool chords) {
        if (!t.vertex_type) throw PreconditionError("patch has no vertex-type to realize");
        RenderOptions o;
        o.color_by = color_by == "layer" ? ColorBy::Layer : ColorBy::FaceSize;
        o.draw_disk_boundary = disk;
        o.edge_mode = chords ? EdgeMode::Chord : EdgeMode::Geodesic;
        return to_svg(t, realize(t, side_length(*t.vertex_type)), o);
      },
      py::arg("t"), py::arg("color_by") = "size", py::arg("disk") = true, py::arg("chords") = false);
}
