// Python bindings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "geoconv/classes.hpp"
#include "geoconv/combinators.hpp"
#include "geoconv/harness.hpp"
#include "geoconv/pipeline.hpp"
#include "geoconv/substitution.hpp"
#include "geoconv/translation.hpp"

namespace py = pybind11;
using namespace geoconv;

namespace {

Formula to_formula(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_formula(o.cast<std::string>());
  return o.cast<Formula>();
}

py::dict size_dict(const SizeReport& s) {
  py::dict d;
  d["inferences"] = s.inference_count;
  d["symbols"] = s.symbol_count;
  d["height"] = s.height;
  return d;
}

}  // namespace

PYBIND11_MODULE(geoconv, m) {
  m.doc() = "Sequent-calculus kernel and classical-to-intuitionistic proof transformation for geometric theories";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::enum_<Mode>(m, "Mode")
      .value("classical", Mode::Classical)
      .value("intuitionistic", Mode::Intuitionistic)
      .value("minimal", Mode::Minimal);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& s) { return parse_formula(s); }), py::arg("text"))
      .def("__str__", &print_formula)
      .def("__repr__", [](const Formula& f) { return "Formula('" + print_formula(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return f.hash(); })
      .def_property_readonly("symbol_count", &Formula::symbol_count);

  py::class_<ClassMembership>(m, "ClassMembership")
      .def_readonly("positive", &ClassMembership::positive)
      .def_readonly("geometric_implication", &ClassMembership::geometric_implication)
      .def_readonly("Q", &ClassMembership::inQ)
      .def_readonly("R", &ClassMembership::inR)
      .def_readonly("J", &ClassMembership::inJ)
      .def("__repr__", [](const ClassMembership& c) {
        return py::str("ClassMembership(positive={}, geometric_implication={}, Q={}, R={}, J={})")
            .format(c.positive, c.geometric_implication, c.inQ, c.inR, c.inJ)
            .cast<std::string>();
      });

  py::class_<Theory>(m, "Theory")
      .def(py::init([](const std::string& s) { return parse_theory(s); }), py::arg("text"))
      .def_readonly("name", &Theory::name)
      .def_readonly("axioms", &Theory::axioms)
      .def("__str__", &print_theory);

  py::class_<Derivation>(m, "Derivation")
      .def(py::init([](const std::string& s) { return parse_derivation(s); }), py::arg("text"))
      .def("__str__", &print_derivation)
      .def_property_readonly("antecedent", [](const Derivation& d) { return d.conclusion().ante; })
      .def_property_readonly("succedent", [](const Derivation& d) { return d.conclusion().succ; })
      .def_property_readonly("rule", [](const Derivation& d) { return std::string(rule_name(d.rule())); })
      .def_property_readonly("premises", &Derivation::premises)
      .def_property_readonly("size", [](const Derivation& d) { return size_dict(d.size()); });

  m.def("parse_formula", [](const std::string& s) { return parse_formula(s); });
  m.def("classify", [](const py::object& f) { return classify(to_formula(f)); });
  m.def("e_translate", [](const py::object& f) { return e_translate(to_formula(f)); });

  m.def(
      "check",
      [](const Derivation& d, Mode mode, const std::optional<Theory>& t) {
        CheckReport r = t ? check(d, mode, *t) : check(d, mode);
        py::list out;
        for (const auto& v : r.violations)
          out.append(py::make_tuple(v.path, std::string(rule_name(v.rule)), v.message));
        return out;
      },
      py::arg("derivation"), py::arg("mode") = Mode::Classical, py::arg("theory") = py::none(),
      "List of (path, rule, message) violations; empty when the derivation checks.");

  m.def("lemma", [](int id, const std::vector<py::object>& args) {
    std::vector<Formula> fs;
    for (const auto& a : args) fs.push_back(to_formula(a));
    return lemma(id, fs);
  });
  m.def("lemma_statement", [](int id, const std::vector<py::object>& args) {
    std::vector<Formula> fs;
    for (const auto& a : args) fs.push_back(to_formula(a));
    return lemma_statement(id, fs);
  });
  m.def("lemma_mode", &lemma_mode);
  m.def("embed_q", [](const py::object& f) { return embed_Q(to_formula(f)); });
  m.def("embed_r", [](const py::object& f) { return embed_R(to_formula(f)); });
  m.def("embed_j", [](const py::object& f) { return embed_J(to_formula(f)); });

  m.def("translate_derivation", &translate_derivation);
  m.def(
      "subst_placeholder",
      [](const Derivation& d, const py::object& psi) { return subst_placeholder_deriv(d, to_formula(psi)); },
      py::arg("derivation"), py::arg("psi"));

  m.def(
      "transform",
      [](const Derivation& d, const Theory& t) {
        if (d.conclusion().succ.size() != 1 || !d.conclusion().ante.empty())
          throw PreconditionError("transform: root must be => goal");
        PipelineTrace tr = barr_transform(d, t, d.conclusion().succ[0]);
        py::list steps;
        for (const auto& s : tr.steps)
          steps.append(py::make_tuple(s.name, std::string(mode_name(s.mode)), s.derivation, size_dict(s.size)));
        return steps;
      },
      py::arg("proof"), py::arg("theory"),
      "Runs the pipeline; returns (name, mode, derivation, sizes) for input, step1..step5, output.");

  m.def("builtin_theories", [] {
    py::dict out;
    for (const auto& e : builtin_theories()) out[py::str(e.name)] = e.theory;
    return out;
  });
  m.def("builtin_samples", [] {
    py::list out;
    for (const auto& s : builtin_samples()) out.append(py::make_tuple(s.name, s.theory, s.goal, s.proof));
    return out;
  });
  m.def("gen_family", [](const std::string& name, std::size_t n) {
    FamilyInstance f = gen_family(name, n);
    return py::make_tuple(f.theory, f.goal, f.proof);
  });
  m.def(
      "bench",
      [](const std::string& family, std::size_t n_min, std::size_t n_max, const std::filesystem::path& out) {
        BenchResult r = run_bench(BenchConfig{family, n_min, n_max, out});
        py::dict d;
        d["slope"] = r.fit.slope;
        d["max_ratio"] = r.fit.max_ratio;
        d["max_ratio_growth"] = r.fit.max_ratio_growth;
        d["rows"] = r.rows.size();
        return d;
      },
      py::arg("family"), py::arg("n_min"), py::arg("n_max"), py::arg("output_dir"));
}
