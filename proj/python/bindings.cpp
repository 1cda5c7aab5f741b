#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>

#include "karteszi/analyze.hpp"
#include "karteszi/combin.hpp"
#include "karteszi/config.hpp"
#include "karteszi/document.hpp"
#include "karteszi/error.hpp"
#include "karteszi/render.hpp"

namespace py = pybind11;
using namespace karteszi;

namespace {

std::string params_repr(const config::KParams& p) {
  return "KParams(n=" + std::to_string(p.n) + ", l=" + std::to_string(p.l) + ", m=" + std::to_string(p.m) + ")";
}

geom::TolerancePolicy tolerance(double eps_inc, double sep_factor) {
  geom::TolerancePolicy tol{eps_inc, sep_factor};
  tol.validate();
  return tol;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Karteszi configurations K(n; l, m) from regular polygon diagonals";

  static py::exception<Error> error(m, "KartesziError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::enum_<config::Verdict>(m, "Verdict")
      .value("CLEAN", config::Verdict::Clean)
      .value("EXTRA_INCIDENCES", config::Verdict::ExtraIncidences)
      .value("AMBIGUOUS", config::Verdict::Ambiguous);

  py::class_<config::KParams>(m, "KParams")
      .def(py::init([](int n, int l, int mm) { return config::validate_params(n, l, mm); }), py::arg("n"),
           py::arg("l"), py::arg("m"))
      .def_readonly("n", &config::KParams::n)
      .def_readonly("l", &config::KParams::l)
      .def_readonly("m", &config::KParams::m)
      .def("__eq__", [](const config::KParams& a, const config::KParams& b) { return a == b; })
      .def("__repr__", &params_repr);

  py::class_<config::KConfig>(m, "KConfig")
      .def_readonly("params", &config::KConfig::params)
      .def_property_readonly("n", &config::KConfig::n)
      .def_property_readonly("points",
                             [](const config::KConfig& c) {
                               py::list out;
                               for (const auto& p : c.points) {
                                 out.append(py::make_tuple(p.id, std::string(config::orbit_tag(p.orbit)), p.index,
                                                           p.pos.x, p.pos.y));
                               }
                               return out;
                             })
      .def_property_readonly("lines",
                             [](const config::KConfig& c) {
                               py::list out;
                               for (const auto& l : c.lines) {
                                 out.append(py::make_tuple(l.id, std::string(config::orbit_tag(l.orbit)), l.index,
                                                           l.line.a(), l.line.b(), l.line.c()));
                               }
                               return out;
                             })
      .def_readonly("incidence", &config::KConfig::incidence)
      .def_property_readonly("verdict", [](const config::KConfig& c) { return c.flags.verdict; })
      .def_property_readonly("extras", [](const config::KConfig& c) { return c.flags.extras; })
      .def_property_readonly("min_margin", [](const config::KConfig& c) { return c.flags.min_margin; })
      .def("line_degrees", &config::KConfig::line_degrees)
      .def("point_degrees", &config::KConfig::point_degrees)
      .def("__repr__", [](const config::KConfig& c) {
        return "<KConfig " + params_repr(c.params) + " " + std::string(config::verdict_name(c.flags.verdict)) + ">";
      });

  m.def(
      "build",
      [](int n, int l, int mm, double eps_inc, double sep_factor) {
        return config::build(config::validate_params(n, l, mm), tolerance(eps_inc, sep_factor));
      },
      py::arg("n"), py::arg("l"), py::arg("m"), py::arg("eps_inc") = 1e-9, py::arg("sep_factor") = 100.0);

  m.def("celestial_symbol", [](int n, int l, int mm) {
    return config::celestial_symbol(config::validate_params(n, l, mm)).text();
  });

  m.def("is_exceptional", [](int n, int l, int mm) -> py::object {
    const auto tag = analyze::is_exceptional(config::validate_params(n, l, mm));
    if (!tag) return py::none();
    return py::str(tag->text());
  });

  m.def("astral_obstruction", [](int n, int l, int mm) {
    return analyze::astral_obstruction(config::validate_params(n, l, mm));
  });

  m.def("concurrent_triples", [](int n) {
    py::list out;
    for (const auto& t : analyze::concurrent_triples(n)) out.append(py::make_tuple(t.r, t.l1, t.l2));
    return out;
  });

  m.def(
      "cross_validate",
      [](int n_max, unsigned threads) {
        const auto r = analyze::cross_validate(n_max, {}, threads);
        py::dict out;
        out["cases"] = r.cases;
        py::list ex;
        for (const auto& c : r.exceptional) ex.append(py::make_tuple(c.params.n, c.params.l, c.params.m));
        out["exceptional"] = ex;
        out["disagreements"] = r.disagreements.size();
        out["ambiguous"] = r.ambiguous.size();
        out["min_clean_margin"] = r.min_clean_margin;
        return out;
      },
      py::arg("n_max"), py::arg("threads") = 1);

  m.def("pr_equation", [](std::array<std::pair<std::int64_t, std::int64_t>, 6> arcs) {
    auto f = [&](int i) { return geom::Fraction(arcs[i].first, arcs[i].second); };
    const auto ev = analyze::pr_equation({f(0), f(1), f(2), f(3), f(4), f(5)});
    return py::make_tuple(ev.lhs, ev.rhs, ev.equal);
  }, "Arcs (U, V, W, X, Y, Z) as (numerator, denominator) pairs.");

  py::class_<combin::IncidenceStructure>(m, "IncidenceStructure")
      .def(py::init(&combin::IncidenceStructure::make), py::arg("num_points"), py::arg("num_lines"),
           py::arg("flags"))
      .def_readonly("num_points", &combin::IncidenceStructure::num_points)
      .def_readonly("num_lines", &combin::IncidenceStructure::num_lines)
      .def_readonly("flags", &combin::IncidenceStructure::flags)
      .def("__eq__", [](const combin::IncidenceStructure& a, const combin::IncidenceStructure& b) { return a == b; });

  m.def("incidence", &combin::from_geometry, py::arg("config"));
  m.def("is_configuration", &combin::is_configuration, py::arg("structure"), py::arg("k"));
  m.def("is_connected", [](const combin::IncidenceStructure& s) { return combin::connected(combin::levi(s)); });
  m.def("certificate", [](const combin::IncidenceStructure& s) {
    const auto c = combin::canonical_form(s).certificate;
    return py::bytes(reinterpret_cast<const char*>(c.data()), c.size());
  });
  m.def("are_isomorphic", [](const combin::IncidenceStructure& a, const combin::IncidenceStructure& b) -> py::object {
    const auto iso = combin::are_isomorphic(a, b);
    if (!iso) return py::none();
    return py::make_tuple(iso->point_map, iso->line_map);
  });

  m.def("write_document", &io::write_document, py::arg("config"), py::arg("path"));
  m.def("read_document", &io::read_document, py::arg("path"));
  m.def("to_json", [](const config::KConfig& c) { return io::serialize(io::to_document(c)); });
  m.def("read_incidence", &io::read_incidence, py::arg("path"));
  m.def(
      "render_svg",
      [](const config::KConfig& c, const std::string& style) { return io::render_svg(c, io::load_style(style)); },
      py::arg("config"), py::arg("style") = "default");
}
