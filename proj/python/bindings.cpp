#include "dgakit/cli.hpp"
#include "dgakit/cochain.hpp"
#include "dgakit/errors.hpp"
#include "dgakit/minimal.hpp"
#include "dgakit/obstruction.hpp"
#include "dgakit/presentation.hpp"
#include "dgakit/recurrence.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace dgakit;

namespace {

FreeCDGA algebra_from_text(const std::string& text, const std::string& name) {
  Workspace ws = build_workspace(parse_presentation(text));
  if (name.empty()) {
    if (ws.algebras.size() != 1) fail("SemanticError", "name the algebra: the text declares several");
    return ws.algebras.begin()->second;
  }
  return ws.algebra(name);
}

std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vector rationals(const std::vector<std::string>& v) {
  Vector out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_dgakit, m) {
  m.doc() = "Exact computations with free graded-commutative DGAs, homotopies and cochains";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("canned_model_names", &canned_model_names);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "run a CLI subcommand and return (exit_code, stdout, stderr)");

  py::class_<FreeCDGA>(m, "Algebra")
      .def_static("canned", &canned_model, py::arg("name"))
      .def_static("parse", &algebra_from_text, py::arg("text"), py::arg("name") = "")
      .def_property_readonly("generators",
                             [](const FreeCDGA& A) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& g : A.generators()) out.emplace_back(g.name, g.degree);
                               return out;
                             })
      .def("differential",
           [](const FreeCDGA& A, const std::string& name) {
             auto i = A.index_of(name);
             if (!i) fail("UnknownGenerator", name);
             return A.format(A.d_of(*i));
           })
      .def("is_minimal", &FreeCDGA::is_minimal)
      .def("cohomology_dim", [](const FreeCDGA& A, int k) { return A.cohomology_dim(k); })
      .def("presentation",
           [](const FreeCDGA& A, const std::string& name) {
             return print_declaration(describe_algebra(name, A));
           },
           py::arg("name") = "M")
      .def("minimal_model",
           [](const FreeCDGA& A, int degree) { return minimal_model_of(A, degree).model; }, py::arg("degree"))
      .def("positive_weights",
           [](const FreeCDGA& A) -> std::optional<std::vector<long>> {
             auto g = detect_positive_weights(A);
             if (!g) return std::nullopt;
             return g->weights;
           })
      .def("__len__", &FreeCDGA::size);

  m.def(
      "periods",
      [](const FreeCDGA& M, int degree, const std::vector<long>& weights) {
        PullbackTarget P = pullback_target(M, degree, weights);
        PeriodsResult res = homotopy_periods(P.phi, P.ledger, degree);
        std::vector<py::dict> out;
        for (const auto& I : res.integrands) {
          ReductionResult red = reduce_weight(res.run.target, I.integrand, res.run.ledger);
          py::dict d;
          d["generator"] = I.generator;
          d["integrand"] = res.run.target.format(I.integrand);
          d["weight"] = I.weight ? py::object(py::str(to_string(*I.weight))) : py::object(py::none());
          d["reduced"] = res.run.target.format(red.reduced);
          d["reduced_weight"] = red.weight ? py::object(py::str(to_string(*red.weight))) : py::object(py::none());
          out.push_back(d);
        }
        return out;
      },
      py::arg("algebra"), py::arg("degree"), py::arg("weights") = std::vector<long>{});

  m.def(
      "distortion_exponent",
      [](const FreeCDGA& M, int degree, const std::vector<std::string>& alpha) {
        return to_string(predict_distortion_exponent(M, degree, rationals(alpha)));
      },
      py::arg("algebra"), py::arg("degree"), py::arg("functional"));

  m.def(
      "iso_constant",
      [](const std::string& complex_text, int k, const std::string& side, std::size_t cap) {
        if (side != "forms" && side != "chains") fail("InvalidArgument", "side must be forms or chains");
        auto r = iso_constant(parse_complex(complex_text), k, side == "forms" ? IsoSide::Forms : IsoSide::Chains, cap);
        py::dict d;
        d["constant"] = to_string(r.constant);
        d["extremal"] = strings(r.extremal);
        d["optimizer"] = strings(r.optimizer);
        return d;
      },
      py::arg("complex"), py::arg("k"), py::arg("side") = "forms", py::arg("cap") = 12);

  m.def(
      "duality",
      [](const std::string& complex_text, int k, std::size_t cap) {
        auto r = duality_check(parse_complex(complex_text), k, cap);
        return py::make_tuple(to_string(r.forms.constant), to_string(r.chains.constant), r.equal);
      },
      py::arg("complex"), py::arg("k"), py::arg("cap") = 12);

  m.def(
      "recurrence",
      [](double kappa) {
        RecurrenceOptions o;
        o.kappa = kappa;
        auto r = weird_recurrence(o);
        py::dict d;
        d["kappa"] = r.kappa;
        d["crossing"] = format_scientific(r.crossing);
        d["ratio_nonincreasing"] = r.ratio_nonincreasing;
        d["max_ratio"] = r.max_ratio;
        return d;
      },
      py::arg("kappa") = 0.0);
}
