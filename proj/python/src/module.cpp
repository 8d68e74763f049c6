#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latf4/completion.hpp"
#include "latf4/io.hpp"
#include "latf4/oracle.hpp"
#include "latf4/presentation.hpp"

namespace py = pybind11;
using namespace latf4;

namespace {

  std::string text(Polynomial const& f, Presentation const& p) {
    return format_polynomial(f, p.alphabet());
  }

  std::string text(Word const& w, Presentation const& p) {
    return format_word(w, p.alphabet());
  }

  py::list rule_list(Presentation const& p) {
    py::list out;
    for (auto const& [key, image] : p.op().rules()) {
      out.append(py::make_tuple(text(key, p), text(image, p)));
    }
    return out;
  }

  py::list branching_list(Presentation const& p) {
    py::list out;
    for (auto const& b : critical_branchings(p)) {
      py::dict d;
      d["source"]       = text(b.source, p);
      d["left"]         = py::make_tuple(b.left.prefix, b.left.suffix);
      d["right"]        = py::make_tuple(b.right.prefix, b.right.suffix);
      d["s_polynomial"] = text(s_polynomial(p, b), p);
      out.append(d);
    }
    return out;
  }

  py::dict run_oracle(Presentation const& p, std::size_t max_degree,
                      std::size_t max_iterations) {
    auto const lattice = complete(p, {max_iterations, max_degree});
    auto const naive   = oracle::buchberger(
        oracle::RuleSet(p.order(), groebner_rules(p)), max_degree,
        max_iterations);
    py::dict out;
    out["lattice_status"] = to_string(lattice.status);
    out["oracle_complete"] = naive.complete;
    py::list lattice_only, oracle_only;
    std::string verdict = "inconclusive";
    if (lattice.status == CompletionStatus::converged && naive.complete) {
      auto const cmp = oracle::compare_leading_ideals(
          oracle::RuleSet(p.order(), groebner_rules(lattice.completed)),
          naive.basis, max_degree);
      verdict = cmp.agree ? "agree" : "disagree";
      for (auto const& w : cmp.only_first) {
        lattice_only.append(text(w, p));
      }
      for (auto const& w : cmp.only_second) {
        oracle_only.append(text(w, p));
      }
    }
    out["verdict"]      = verdict;
    out["lattice_only"] = lattice_only;
    out["oracle_only"]  = oracle_only;
    return out;
  }

}  // namespace

PYBIND11_MODULE(_latf4, m) {
  m.doc() = "Noncommutative Groebner bases by lattice completion";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  // ParseError derives from Error on the C++ side; on the Python side it is
  // a ValueError carrying line and column attributes.
  static py::handle parse_error
      = py::exception<ParseError>(m, "ParseError", PyExc_ValueError)
            .release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (ParseError const& e) {
      auto exc = py::reinterpret_borrow<py::object>(parse_error)(e.what());
      exc.attr("line")   = e.line();
      exc.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), exc.ptr());
    }
  });

  py::class_<Presentation>(m, "Presentation")
      .def_property_readonly("alphabet",
                             [](Presentation const& p) {
                               return p.alphabet().symbols();
                             })
      .def("rules", &rule_list, "List of (key, image) pairs in key order.")
      .def("branchings", &branching_list,
           "Critical branchings with their S-polynomials.")
      .def(
          "normal_form",
          [](Presentation const& p, std::string const& f) {
            return text(normal_form(p, parse_polynomial(f, p.alphabet())), p);
          },
          py::arg("polynomial"))
      .def("is_confluent", &is_confluent_presentation)
      .def("serialize", &serialize_presentation)
      .def("__eq__", [](Presentation const& a, Presentation const& b) {
        return a == b;
      })
      .def("__repr__", [](Presentation const& p) {
        return "<Presentation with " + std::to_string(p.op().size())
               + " rules>";
      });

  py::class_<CompletionResult>(m, "CompletionResult")
      .def_readonly("presentation", &CompletionResult::completed)
      .def_property_readonly(
          "status",
          [](CompletionResult const& r) { return to_string(r.status); })
      .def_property_readonly(
          "iterations",
          [](CompletionResult const& r) { return r.steps.size(); })
      .def("trace", &format_trace);

  m.def("parse", &parse_presentation, py::arg("text"),
        "Parse a presentation from its text form.");
  m.def(
      "complete",
      [](Presentation const& p, std::size_t max_iterations,
         std::size_t max_rule_degree) {
        py::gil_scoped_release release;
        return complete(p, {max_iterations, max_rule_degree});
      },
      py::arg("presentation"), py::arg("max_iterations") = 64,
      py::arg("max_rule_degree") = 12);
  m.def("oracle", &run_oracle, py::arg("presentation"),
        py::arg("max_degree") = 6, py::arg("max_iterations") = 64,
        "Compare the completion with a naive Buchberger run.");
}
