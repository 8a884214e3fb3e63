#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "qpbc/errors.hpp"
#include "qpbc/families.hpp"
#include "qpbc/format.hpp"
#include "qpbc/identities.hpp"
#include "qpbc/jackson.hpp"
#include "qpbc/series.hpp"
#include "qpbc/stirling.hpp"

namespace py = pybind11;
using namespace qpbc;

namespace {

py::object fraction(const Scalar& s) { return py::module_::import("fractions").attr("Fraction")(toString(s)); }

py::int_ pyInt(const Integer& i) { return py::int_(py::module_::import("builtins").attr("int")(i.get_str())); }

Scalar toScalar(const py::handle& value) {
  if (py::isinstance<py::float_>(value)) throw py::type_error("pass an int, a Fraction or a string such as '1/3'");
  return parseScalar(py::str(value).cast<std::string>());
}

Family familyFrom(const std::string& name) {
  auto f = parseFamily(name);
  if (!f) throw py::value_error("unknown family '" + name + "'");
  return *f;
}

Var varFrom(const std::string& name) {
  if (name == "rho") return Var::rho;
  if (name == "z") return Var::z;
  if (name == "y") return Var::y;
  throw py::value_error("unknown variable '" + name + "'");
}

py::list toPyInts(const ZPoly& p) {
  py::list out;
  for (const Integer& c : p.coeffs()) out.append(pyInt(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_qpbc, m) {
  m.doc() = "Exact q-poly-Bernoulli and q-poly-Cauchy polynomials with a parameter";

  py::register_exception<DenominatorVanishes>(m, "DenominatorVanishes", PyExc_ZeroDivisionError);
  py::register_exception<NonconvergedTruncation>(m, "NonconvergedTruncation", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ParamPoly>(m, "ParamPoly")
      .def(py::init([](const std::string& text) { return parseParamPoly(text); }), py::arg("text"))
      .def("__str__", [](const ParamPoly& p) { return toCanonicalString(p); })
      .def("__repr__", [](const ParamPoly& p) { return "ParamPoly('" + toCanonicalString(p) + "')"; })
      .def("__eq__", [](const ParamPoly& a, const ParamPoly& b) { return a == b; })
      .def("__add__", [](const ParamPoly& a, const ParamPoly& b) { return a + b; })
      .def("__sub__", [](const ParamPoly& a, const ParamPoly& b) { return a - b; })
      .def("__mul__", [](const ParamPoly& a, const ParamPoly& b) { return a * b; })
      .def("__neg__", [](const ParamPoly& a) { return -a; })
      .def("is_zero", &ParamPoly::isZero)
      .def("degree", [](const ParamPoly& p, const std::string& v) { return p.degree(varFrom(v)); }, py::arg("var"))
      .def("latex", [](const ParamPoly& p) { return toLatex(p); })
      .def("at_q1", &ParamPoly::atQ1)
      .def("substitute",
           [](const ParamPoly& p, const std::string& v, const py::handle& value) {
             return p.substitute(varFrom(v), toScalar(value));
           },
           py::arg("var"), py::arg("value"))
      .def("as_fraction",
           [](const ParamPoly& p) -> py::object {
             if (auto s = p.asScalar()) return fraction(*s);
             return py::none();
           })
      .def("evaluate",
           [](const ParamPoly& p, double q, double rho, double z, double y) { return evalNumeric(p, {q, rho, z, y}); },
           py::arg("q"), py::arg("rho"), py::arg("z"), py::arg("y") = 0.0);

  m.def("poly_bernoulli", &polyBernoulli, py::arg("n"), py::arg("k"));
  m.def("poly_cauchy1", &polyCauchy1, py::arg("n"), py::arg("k"));
  m.def("poly_cauchy2", &polyCauchy2, py::arg("n"), py::arg("k"));
  m.def(
      "family_value", [](const std::string& family, unsigned n, int k) { return familyValue({familyFrom(family), n, k}); },
      py::arg("family"), py::arg("n"), py::arg("k"));
  m.def(
      "classical_number",
      [](const std::string& family, unsigned n, int k) { return fraction(classicalNumber({familyFrom(family), n, k})); },
      py::arg("family"), py::arg("n"), py::arg("k"));
  m.def(
      "generating_function",
      [](const std::string& family, int k, unsigned order) {
        TruncSeries s(order);
        switch (familyFrom(family)) {
          case Family::polyBernoulli: s = gfPolyBernoulli(k, order); break;
          case Family::polyCauchy1: s = gfPolyCauchy1(k, order); break;
          case Family::polyCauchy2: s = gfPolyCauchy2(k, order); break;
        }
        std::vector<ParamPoly> out;
        for (unsigned n = 0; n <= order; ++n) out.push_back(s.egfCoefficient(n));
        return out;
      },
      py::arg("family"), py::arg("k"), py::arg("order"),
      "n! [t^n] of the generating function for n = 0..order.");

  m.def("stirling1", [](unsigned n, unsigned m) { return pyInt(stirling1(n, m)); }, py::arg("n"), py::arg("m"));
  m.def("stirling2", [](unsigned n, unsigned m) { return pyInt(stirling2(n, m)); }, py::arg("n"), py::arg("m"));
  m.def(
      "weighted_stirling",
      [](int kind, unsigned n, unsigned m) {
        if (kind != 1 && kind != 2) throw py::value_error("kind is 1 or 2");
        return toPyInts(weightedStirling(kind == 1 ? StirlingKind::first : StirlingKind::second, n, m).polyInX);
      },
      py::arg("kind"), py::arg("n"), py::arg("m"), "Coefficients of S_kind(n, m, x), lowest power of x first.");

  m.def(
      "jackson_integral",
      [](const std::function<double(double)>& f, double q, unsigned truncation) {
        const JacksonResult r = jacksonIntegral1D(f, {q, truncation, 1e-9});
        return py::make_tuple(r.value, r.tailBound);
      },
      py::arg("f"), py::arg("q"), py::arg("truncation") = 200, "(value, tail bound) of the integral over [0, 1].");
  m.def(
      "oracle_family",
      [](const std::string& family, unsigned n, int k, double rho, double z, double q, unsigned truncation,
         double tolerance) { return oracleFamily(familyFrom(family), n, k, rho, z, {q, truncation, tolerance}); },
      py::arg("family"), py::arg("n"), py::arg("k"), py::arg("rho"), py::arg("z"), py::arg("q") = 0.5,
      py::arg("truncation") = 200, py::arg("tolerance") = 1e-9);

  m.def(
      "identity_sweep",
      [](unsigned nmax, unsigned theorem7Nmax, std::vector<int> ks) {
        py::list out;
        for (const IdentityReport& r : runIdentitySweep({nmax, theorem7Nmax, std::move(ks)})) {
          py::dict d;
          d["id"] = std::string(identityName(r.id));
          d["n"] = r.n;
          d["k"] = r.k ? py::object(py::int_(*r.k)) : py::object(py::none());
          d["verified"] = r.verified;
          d["witness"] = r.witness;
          out.append(d);
        }
        return out;
      },
      py::arg("nmax") = 10, py::arg("theorem7_nmax") = 8, py::arg("ks") = std::vector<int>{-2, -1, 0, 1, 2, 3});

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::runCli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
