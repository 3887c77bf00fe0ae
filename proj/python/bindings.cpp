#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "laytrop/congruence.hpp"
#include "laytrop/errors.hpp"
#include "laytrop/kapranov.hpp"
#include "laytrop/parse.hpp"
#include "laytrop/polyfun.hpp"
#include "laytrop/tropicalization.hpp"

namespace py = pybind11;
using namespace laytrop;

namespace {

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(q));
}

py::object layer_object(const SortingLayer& l) {
  if (l.is_infinite()) return py::str("inf");
  return py::int_(l.count());
}

Flavors flavors_of(const std::string& L) { return {parse_lflavor(L), GFlavor::RationalMax}; }

LayeredScalar to_scalar(const py::handle& obj, Flavors f) {
  if (py::isinstance<LayeredScalar>(obj)) return obj.cast<LayeredScalar>();
  return parse_scalar(py::str(obj).cast<std::string>(), f);
}

Point to_point(const py::sequence& seq, Flavors f) {
  Point p;
  for (const auto& item : seq) p.push_back(to_scalar(item, f));
  return p;
}

py::list point_values(const Point& p) {
  py::list out;
  for (const auto& c : p) out.append(fraction(c.rational()));
  return out;
}

LayeredPolynomial make_polynomial(const std::string& text, const std::string& L, bool laurent,
                                  std::optional<std::size_t> nvars) {
  return parse_polynomial(text, {flavors_of(L), laurent, nvars});
}

}  // namespace

PYBIND11_MODULE(_laytrop, m) {
  m.doc() = "Exact layered tropical algebra";

  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  static py::exception<ParseError> parse_exc(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_exc.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  py::class_<LayeredScalar>(m, "Scalar")
      .def(py::init([](const std::string& text, const std::string& L) { return parse_scalar(text, flavors_of(L)); }),
           py::arg("text"), py::arg("L") = "nat")
      .def_property_readonly("layer", [](const LayeredScalar& x) { return layer_object(x.layer()); })
      .def_property_readonly("value", [](const LayeredScalar& x) { return fraction(x.rational()); })
      .def_property_readonly("tangible", &LayeredScalar::is_tangible)
      .def("__add__", [](const LayeredScalar& x, const LayeredScalar& y) { return add(x, y); })
      .def("__mul__", [](const LayeredScalar& x, const LayeredScalar& y) { return mul(x, y); })
      .def("__pow__", [](const LayeredScalar& x, std::uint64_t n) { return pow(x, n); })
      .def("__eq__", [](const LayeredScalar& x, const LayeredScalar& y) { return x == y; })
      .def("__str__", &LayeredScalar::to_string)
      .def("__repr__", [](const LayeredScalar& x) { return "Scalar('" + x.to_string() + "')"; });

  m.def("surpasses", &surpasses, py::arg("x"), py::arg("y"));
  m.def("nu_equivalent", &nu_equivalent, py::arg("x"), py::arg("y"));
  m.def("localize", &localize, py::arg("a"), py::arg("u"));

  py::class_<LayeredPolynomial>(m, "Polynomial")
      .def(py::init(&make_polynomial), py::arg("text"), py::arg("L") = "nat", py::arg("laurent") = false,
           py::arg("nvars") = py::none())
      .def_property_readonly("nvars", &LayeredPolynomial::nvars)
      .def("__len__", &LayeredPolynomial::size)
      .def("__add__", [](const LayeredPolynomial& f, const LayeredPolynomial& g) { return poly_add(f, g); })
      .def("__mul__", [](const LayeredPolynomial& f, const LayeredPolynomial& g) { return poly_mul(f, g); })
      .def("__eq__", [](const LayeredPolynomial& f, const LayeredPolynomial& g) { return f == g; })
      .def("__str__", &LayeredPolynomial::to_string)
      .def("__repr__", [](const LayeredPolynomial& f) { return "Polynomial('" + f.to_string() + "')"; })
      .def("__call__",
           [](const LayeredPolynomial& f, const py::sequence& point) { return eval(f, to_point(point, f.flavors())); })
      .def("coefficient",
           [](const LayeredPolynomial& f, const Exponent& e) { return f.coefficient(e); })
      .def("dominant_part",
           [](const LayeredPolynomial& f, const py::sequence& point) {
             return dominant_part(f, to_point(point, f.flavors()));
           })
      .def("is_corner_root",
           [](const LayeredPolynomial& f, const py::sequence& point) {
             return is_corner_root(f, to_point(point, f.flavors()));
           })
      .def("is_cluster_root",
           [](const LayeredPolynomial& f, const py::sequence& point) {
             return is_cluster_root(f, to_point(point, f.flavors()));
           })
      .def("corner_roots",
           [](const LayeredPolynomial& f) {
             py::list out;
             for (const auto& r : univariate_corner_roots(f)) out.append(py::make_tuple(fraction(r.root), r.multiplicity));
             return out;
           })
      .def("essential",
           [](const LayeredPolynomial& f) {
             auto ess = essential_monomials(f);
             return py::make_tuple(ess.indices, ess.exact);
           });

  m.def(
      "layering",
      [](const std::vector<LayeredPolynomial>& fs, const py::sequence& point) {
        if (fs.empty()) throw DomainError("layering of an empty set");
        return layer_object(layering_map_set(fs, to_point(point, fs.front().flavors())));
      },
      py::arg("polynomials"), py::arg("point"));

  m.def(
      "corner_locus",
      [](const std::vector<LayeredPolynomial>& fs, const std::string& lower, const std::string& upper,
         const std::string& step, bool combined, unsigned threads) {
        if (fs.empty()) throw DomainError("locus of an empty set");
        auto grid = GridSpec::uniform(fs.front().nvars(), parse_rational(lower), parse_rational(upper),
                                      parse_rational(step), fs.front().flavors());
        auto pts = combined ? combined_locus(fs, grid, {threads}) : corner_locus(fs, grid, {threads});
        py::list out;
        for (const auto& p : pts) out.append(point_values(p));
        return out;
      },
      py::arg("polynomials"), py::arg("lower"), py::arg("upper"), py::arg("step") = "1", py::arg("combined") = false,
      py::arg("threads") = 1);

  m.def(
      "functionally_equal",
      [](const LayeredPolynomial& f, const LayeredPolynomial& g, const std::string& lower, const std::string& upper,
         const std::string& step) {
        auto grid = GridSpec::uniform(f.nvars(), parse_rational(lower), parse_rational(upper), parse_rational(step),
                                      f.flavors());
        auto v = functionally_equal(f, g, grid);
        return py::make_tuple(v.equal, v.exact);
      },
      py::arg("f"), py::arg("g"), py::arg("lower") = "-8", py::arg("upper") = "8", py::arg("step") = "1");

  m.def("val", [](const std::string& text) { return fraction(val(parse_puiseux(text))); }, py::arg("series"));
  m.def("leading", [](const std::string& text) { return fraction(leading(parse_puiseux(text))); }, py::arg("series"));

  m.def(
      "trop",
      [](const std::string& text, const std::string& L, const std::string& var) {
        return trop_poly(TropicalizationContext{parse_lflavor(L)}, parse_puiseux_polynomial(text, var));
      },
      py::arg("polynomial"), py::arg("L") = "nat", py::arg("var") = "L");

  m.def(
      "explode",
      [](const std::string& text, const std::string& var) {
        py::dict out;
        for (const auto& [d, x] : explode_poly(parse_puiseux_polynomial(text, var)))
          out[py::int_(d)] = py::make_tuple(fraction(x.sort), fraction(x.value));
        return out;
      },
      py::arg("polynomial"), py::arg("var") = "L");

  m.def(
      "root_valuations",
      [](const std::string& text, const std::string& var) {
        py::list out;
        for (const auto& v : root_valuations(parse_puiseux_polynomial(text, var))) out.append(fraction(v));
        return out;
      },
      py::arg("polynomial"), py::arg("var") = "L");

  m.def(
      "kapranov",
      [](std::size_t degree, std::size_t trials, std::uint64_t seed) {
        auto batch = kapranov_batch(degree, trials, seed);
        py::list failures;
        for (const auto& f : batch.failures) {
          py::dict d;
          d["poly"] = f.poly;
          d["roots"] = f.roots;
          d["corner_roots"] = f.corner_roots;
          d["valuations"] = f.valuations;
          failures.append(d);
        }
        py::dict out;
        out["pass"] = batch.pass;
        out["trials"] = batch.trials;
        out["failures"] = failures;
        return out;
      },
      py::arg("degree") = 3, py::arg("trials") = 100, py::arg("seed") = 0);

  m.def(
      "zariski",
      [](const std::vector<py::sequence>& points, const std::vector<std::pair<std::string, std::string>>& pairs,
         const std::string& L, std::uint64_t seed) {
        Flavors f = flavors_of(L);
        std::vector<Point> pts;
        for (const auto& p : points) pts.push_back(to_point(p, f));
        FinitePointSet search(std::move(pts));
        if (search.empty()) throw DomainError("no points");
        std::size_t n = search.points().front().size();
        CongruenceGenerators gens;
        for (const auto& [a, b] : pairs)
          gens.emplace_back(parse_polynomial(a, {f, false, n}), parse_polynomial(b, {f, false, n}));
        auto rep = zariski_roundtrip(gens, search, seed);
        py::list variety;
        for (const auto& p : rep.variety.points.points()) variety.append(point_values(p));
        py::dict out;
        out["pass"] = rep.pass();
        out["variety"] = variety;
        out["probe_pairs"] = rep.probe_pairs;
        out["roundtrip"] = rep.roundtrip;
        out["antitone_generators"] = rep.antitone_generators;
        out["antitone_points"] = rep.antitone_points;
        out["union_law"] = rep.union_law;
        return out;
      },
      py::arg("points"), py::arg("pairs"), py::arg("L") = "nat", py::arg("seed") = 0);
}
