// Python bindings for the main operations: polynomial computations by both
// methods, enumeration counts and JSON exports.

#include "gzl/json_io.hpp"
#include "gzl/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gzl;

namespace {

Permutation perm_arg(const py::object& spec, int n) {
  if (py::isinstance<py::str>(spec)) return parse_permutation(spec.cast<std::string>(), n);
  return Permutation(spec.cast<std::vector<int>>());
}

py::object poly_json(const BetaPolynomial& p) {
  py::module_ js = py::module_::import("json");
  return js.attr("loads")(poly_to_json(p).dump());
}

} // namespace

PYBIND11_MODULE(pygzl, m) {
  m.doc() = "exact Lascoux, key, Grothendieck and Schur polynomials via "
            "Gelfand-Zetlin polytope subdivisions";

  py::class_<BetaPolynomial>(m, "BetaPolynomial")
      .def("__str__", &BetaPolynomial::str)
      .def("__repr__", [](const BetaPolynomial& p) { return "<BetaPolynomial " + p.str() + ">"; })
      .def("__eq__", [](const BetaPolynomial& p, const BetaPolynomial& q) { return p == q; })
      .def("__add__", [](const BetaPolynomial& p, const BetaPolynomial& q) { return p + q; })
      .def("__mul__", [](const BetaPolynomial& p, const BetaPolynomial& q) { return p * q; })
      .def_property_readonly("n", &BetaPolynomial::vars)
      .def("term_count", &BetaPolynomial::term_count)
      .def("specialize_beta", [](const BetaPolynomial& p, long b) { return specialize_beta(p, Int(b)); })
      .def("to_json", &poly_json);

  m.def("x_power", &BetaPolynomial::x_power, py::arg("exps"));
  m.def("lascoux", [](const py::object& w, const Partition& lambda, const std::string& method) {
          Permutation p = perm_arg(w, static_cast<int>(lambda.size()));
          return method == "cells" ? lascoux_via_cells(p, lambda) : lascoux_w_lambda(p, lambda);
        },
        py::arg("w"), py::arg("lam"), py::arg("method") = "operator");
  m.def("lascoux_composition",
        [](const std::vector<int>& alpha) { return lascoux_of_composition(alpha); }, py::arg("alpha"));
  m.def("key_polynomial", [](const py::object& w, const Partition& lambda) {
          return key_polynomial(perm_arg(w, static_cast<int>(lambda.size())), lambda);
        },
        py::arg("w"), py::arg("lam"));
  m.def("grothendieck", [](const Partition& lambda, const std::string& method) {
          if (method == "cells") return grothendieck_via_patterns(lambda);
          return apply_word(BetaPolynomial::x_power(lambda),
                            w0_word_coxeter(static_cast<int>(lambda.size())));
        },
        py::arg("lam"), py::arg("method") = "operator");
  m.def("schur", [](const Partition& lambda) {
          return character_of_points(lambda, enumerate_gz_patterns(lambda));
        },
        py::arg("lam"));
  m.def("weyl_dimension", [](const Partition& lambda) { return to_int(weyl_dimension(lambda)); },
        py::arg("lam"));
  m.def("count_gz_patterns",
        [](const Partition& lambda) { return enumerate_gz_patterns(lambda).size(); }, py::arg("lam"));
  m.def("count_enhanced", [](const Partition& lambda, bool efficient_only) {
          return efficient_only ? enumerate_efficient(lambda).size() : enumerate_all(lambda).size();
        },
        py::arg("lam"), py::arg("efficient_only") = false);
  m.def("count_reduced_faces", [](int n) { return enumerate_reduced_faces(n).size(); }, py::arg("n"));
  m.def("euler_characteristic",
        [](const Partition& lambda) { return to_int(euler_characteristic(lambda)); }, py::arg("lam"));
  m.def("locate", [](const Partition& lambda, const std::string& point) {
          EnhancedPattern p = point_to_pattern(lambda, parse_point(point));
          py::module_ js = py::module_::import("json");
          return js.attr("loads")(enhanced_to_json(p).dump());
        },
        py::arg("lam"), py::arg("point"));
  m.def("verify", [](const std::string& suite, int max_n, int max_part) {
          VerifyOptions opt = VerifyOptions::bounds(max_n, max_part);
          py::list out;
          for (const VerifyReport& r : run_suites(suite, opt)) {
            py::dict d;
            d["suite"] = r.suite;
            d["cases"] = r.cases;
            d["failures"] = r.failures;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("suite"), py::arg("max_n") = 3, py::arg("max_part") = 3);
}
