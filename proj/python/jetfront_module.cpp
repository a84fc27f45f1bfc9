// Python bindings for the front-diagram calculus.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetfront/classify.hpp"
#include "jetfront/front.hpp"
#include "jetfront/front_io.hpp"
#include "jetfront/moves.hpp"
#include "jetfront/render.hpp"
#include "jetfront/slopes.hpp"
#include "jetfront/translate.hpp"

namespace py = pybind11;
using namespace jetfront;

namespace {

std::optional<HeightOrder> height_order_from(const py::object& o) {
  if (o.is_none()) return std::nullopt;
  std::string s = py::cast<std::string>(o);
  if (s == "first-below") return HeightOrder::FirstBelow;
  if (s == "first-above") return HeightOrder::FirstAbove;
  throw std::invalid_argument("height order must be 'first-below' or 'first-above'");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Isotopic: return "isotopic";
    case Verdict::NotIsotopic: return "not-isotopic";
    case Verdict::ExceptionalPair: return "exceptional-pair";
    case Verdict::UnknownCase4Rot: return "unknown-case4-rot";
  }
  return "?";
}

py::dict class_result_to_dict(const ClassResult& r) {
  py::dict d;
  d["verdict"] = verdict_name(r.verdict);
  if (r.normal_form)
    d["normal_form"] = py::make_tuple(r.normal_form->k0, r.normal_form->l0, r.normal_form->k1,
                                      r.normal_form->l1);
  if (r.height_order)
    d["height_order"] =
        *r.height_order == HeightOrder::FirstBelow ? "first-below" : "first-above";
  if (!r.detail.empty()) d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_jetfront, m) {
  m.doc() = "Front-diagram calculus for Legendrian links in the 1-jet space of the circle";

  py::enum_<EventKind>(m, "EventKind")
      .value("Crossing", EventKind::Crossing)
      .value("LeftCusp", EventKind::LeftCusp)
      .value("RightCusp", EventKind::RightCusp);

  py::class_<Event>(m, "Event")
      .def(py::init<EventKind, int>())
      .def_readwrite("kind", &Event::kind)
      .def_readwrite("position", &Event::position)
      .def("__repr__", [](const Event& e) {
        const char* k = e.kind == EventKind::Crossing ? "X" : e.kind == EventKind::LeftCusp ? "L" : "R";
        return std::string(k) + "@" + std::to_string(e.position);
      });

  py::class_<FrontDiagram>(m, "FrontDiagram")
      .def(py::init<>())
      .def_readwrite("base_strands", &FrontDiagram::base_strands)
      .def_readwrite("events", &FrontDiagram::events)
      .def_readwrite("orientations", &FrontDiagram::orientations)
      .def_readwrite("order", &FrontDiagram::order)
      .def("__eq__", [](const FrontDiagram& a, const FrontDiagram& b) { return a == b; })
      .def("__repr__", [](const FrontDiagram& d) { return serialize_front(d); });

  py::class_<ComponentInvariants>(m, "ComponentInvariants")
      .def_readonly("tb", &ComponentInvariants::tb)
      .def_readonly("rot", &ComponentInvariants::rot)
      .def_readonly("winding", &ComponentInvariants::winding)
      .def("__iter__", [](const ComponentInvariants& v) {
        return py::iter(py::make_tuple(v.tb, v.rot, v.winding));
      })
      .def("__repr__", [](const ComponentInvariants& v) {
        return "(tb=" + std::to_string(v.tb) + ", rot=" + std::to_string(v.rot) +
               ", winding=" + std::to_string(v.winding) + ")";
      });

  // diagrams and invariants
  m.def("lambda_front", &lambda_front, py::arg("n"));
  m.def("meridian_eye_front", &meridian_eye_front);
  m.def("torus_braid_front", &torus_braid_front, py::arg("p"), py::arg("q"));
  m.def("cable_link_front", &cable_link_front, py::arg("p"), py::arg("q"));
  m.def("parse_front", &parse_front, py::arg("text"));
  m.def("serialize_front", &serialize_front, py::arg("diagram"));
  m.def("validate", [](const FrontDiagram& d) {
    ValidationReport r = validate(d);
    py::list out;
    for (const auto& v : r.violations) out.append(py::make_tuple(v.event_index, v.rule));
    return out;
  });
  m.def("component_count", &component_count);
  m.def("invariants", &invariants, py::arg("diagram"), py::arg("component"));
  m.def("crossing_sign", &crossing_sign, py::arg("diagram"), py::arg("event_index"));
  m.def("inter_component_crossing_sum", &inter_component_crossing_sum);
  m.def("render_svg", [](const FrontDiagram& d) { return render_svg(d); });

  // moves and search
  m.def("stabilize", &stabilize, py::arg("diagram"), py::arg("component"), py::arg("sign"));
  m.def("destabilize",
        [](const FrontDiagram& d, int component, int sign, int window) -> py::object {
          auto r = destabilize(d, component, sign, window);
          if (!r) return py::none();
          return py::cast(*r);
        },
        py::arg("diagram"), py::arg("component"), py::arg("sign"), py::arg("window") = 8);
  m.def("canonical_key", &canonical_key);
  m.def("move_count", [](const FrontDiagram& d) { return applicable_moves(d).size(); });
  m.def("search_isotopy",
        [](const FrontDiagram& a, const FrontDiagram& b, int depth, long states) {
          SearchResult r = search_isotopy(a, b, {depth, states});
          py::dict out;
          out["verdict"] = r.verdict == SearchVerdict::Found ? "found"
                           : r.verdict == SearchVerdict::NotIsotopic
                               ? "not-isotopic"
                               : "not-found-within-budget";
          out["states"] = r.states;
          out["path_length"] = r.path.size();
          if (!r.reason.empty()) out["reason"] = r.reason;
          return out;
        },
        py::arg("d1"), py::arg("d2"), py::arg("depth") = 14, py::arg("states") = 2'000'000L);

  // slope calculus
  m.def("kanda_twist", &kanda_twist);
  m.def("twist_on_torus", [](int tb, int p, int q) { return twist_on_torus(tb, {p, q}); });
  m.def("admissible_slopes", [](int m, int r_bound) {
    py::list out;
    for (const auto& s : admissible_slopes(m, r_bound)) out.append(py::make_tuple(s.r, s.s));
    return out;
  });
  m.def("min_intersection", [](int p, int q, int m) { return min_intersection({p, q}, m); });
  m.def("tb_max_oracle", [](int p, int q, int m) { return tb_max_oracle({p, q}, m); });

  // classification
  m.def("helix_normal_form", &helix_normal_form, py::arg("tb"), py::arg("rot"));
  m.def("classify_helix",
        [](int tb0, int rot0, int tb1, int rot1, const py::object& ho) {
          return class_result_to_dict(
              classify_helix({tb0, rot0}, {tb1, rot1}, height_order_from(ho)));
        },
        py::arg("tb0"), py::arg("rot0"), py::arg("tb1"), py::arg("rot1"),
        py::arg("height_order") = py::none());
  m.def("tb_max", &tb_max, py::arg("p"), py::arg("q"), py::arg("m"));
  m.def("rot_at_tb_max", [](int p, int q, int m) -> py::object {
    auto r = rot_at_tb_max(p, q, m);
    if (!r) return py::none();
    return py::int_(*r);
  });
  m.def("check_realizable",
        [](int p, int q, int m, int rot0, int tb1, int rot1) {
          auto r = check_realizable({p, q, m, rot0, tb1, rot1, std::nullopt});
          const char* s = r.status == Realizability::Realizable      ? "realizable"
                          : r.status == Realizability::NotRealizable ? "not-realizable"
                                                                     : "unknown";
          return py::make_tuple(s, r.reason);
        });
  m.def("classify_cable",
        [](int p, int q, int m_a, int rot0_a, int tb1_a, int rot1_a, int m_b, int rot0_b,
           int tb1_b, int rot1_b, const py::object& ho_a, const py::object& ho_b) {
          CableDescriptor a{p, q, m_a, rot0_a, tb1_a, rot1_a, height_order_from(ho_a)};
          CableDescriptor b{p, q, m_b, rot0_b, tb1_b, rot1_b, height_order_from(ho_b)};
          return class_result_to_dict(classify_cable(a, b));
        },
        py::arg("p"), py::arg("q"), py::arg("m_a"), py::arg("rot0_a"), py::arg("tb1_a"),
        py::arg("rot1_a"), py::arg("m_b"), py::arg("rot0_b"), py::arg("tb1_b"),
        py::arg("rot1_b"), py::arg("height_order_a") = py::none(),
        py::arg("height_order_b") = py::none());
  m.def("enumerate_mountain_range", [](int p, int q, int m, int tb_floor) {
    py::list out;
    for (const auto& [tb, rot] : enumerate_mountain_range(p, q, m, tb_floor))
      out.append(py::make_tuple(tb, rot));
    return out;
  });

  // dictionary into S^3
  m.def("cable_type_to_s3", [](int p, int q) {
    auto t = cable_type_to_s3(p, q);
    return py::make_tuple(t.p_prime, t.q_prime);
  });
  m.def("tb_to_s3", &tb_to_s3, py::arg("tb_jet"), py::arg("q"));
  m.def("m_to_s3", &m_to_s3, py::arg("m"));
  m.def("reverse_orientation", [](int p, int q, int tb, int rot) {
    auto r = reverse_orientation({p, q, tb, rot});
    return py::make_tuple(r.p, r.q, r.tb, r.rot);
  });
  m.def("cor_noimage_gap", &cor_noimage_gap, py::arg("p"), py::arg("q"));
  m.def("s3_positive_torus_tb_max", &s3_positive_torus_tb_max);
}
