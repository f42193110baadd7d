#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mincsp/classifier.hpp"
#include "mincsp/generators.hpp"
#include "mincsp/io.hpp"
#include "mincsp/reductions.hpp"
#include "mincsp/solvers.hpp"

namespace py = pybind11;
using namespace mincsp;

namespace {

std::string outcome_status(const SolveOutcome& out) { return to_string(out.status); }

py::object target_instance(const ReductionArtifact& art) {
  if (const auto* d = std::get_if<DcspInstance>(&art.target)) return py::cast(*d);
  if (const auto* e = std::get_if<EvenOddSetInstance>(&art.target))
    return py::cast(*e);
  return py::cast(std::get<NcInstance>(art.target));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "minimum-deletion CSP classification, solvers and reductions";

  py::class_<Relation>(m, "Relation")
      .def(py::init<int, const std::vector<std::string>&, std::string>(),
           py::arg("arity"), py::arg("tuples"), py::arg("name") = "")
      .def_property_readonly("arity", &Relation::arity)
      .def_property_readonly("name", &Relation::name)
      .def("members", &Relation::members)
      .def("contains", &Relation::contains);

  py::class_<Language>(m, "Language")
      .def(py::init<std::vector<Relation>>())
      .def_property_readonly("relations", &Language::relations);

  py::class_<PropertyVector>(m, "PropertyVector")
      .def_readonly("zero_valid", &PropertyVector::zero_valid)
      .def_readonly("one_valid", &PropertyVector::one_valid)
      .def_readonly("horn", &PropertyVector::horn)
      .def_readonly("dual_horn", &PropertyVector::dual_horn)
      .def_readonly("bijunctive", &PropertyVector::bijunctive)
      .def_readonly("affine", &PropertyVector::affine)
      .def_readonly("self_dual", &PropertyVector::self_dual)
      .def_readonly("irredundant", &PropertyVector::irredundant)
      .def_readonly("ihs_plus_width", &PropertyVector::ihs_plus_width)
      .def_readonly("ihs_minus_width", &PropertyVector::ihs_minus_width);

  py::class_<TrichotomyClass>(m, "TrichotomyClass")
      .def_property_readonly(
          "name", [](const TrichotomyClass& c) { return to_string(c.dcsp_class); })
      .def_readonly("properties", &TrichotomyClass::properties)
      .def_readonly("narrative", &TrichotomyClass::narrative)
      .def_readonly("ihs_width", &TrichotomyClass::ihs_width);

  py::class_<ConstraintInstance>(m, "Constraint")
      .def(py::init([](std::string relation, std::vector<int> scope,
                       bool undeletable) {
             return ConstraintInstance{std::move(relation), std::move(scope),
                                       undeletable};
           }),
           py::arg("relation"), py::arg("scope"), py::arg("undeletable") = false)
      .def_readonly("relation", &ConstraintInstance::relation)
      .def_readonly("scope", &ConstraintInstance::scope)
      .def_readonly("undeletable", &ConstraintInstance::undeletable);

  py::class_<DcspInstance>(m, "DcspInstance")
      .def(py::init<>())
      .def_readwrite("language", &DcspInstance::language)
      .def_readwrite("variables", &DcspInstance::variables)
      .def_readwrite("constraints", &DcspInstance::constraints)
      .def("validate", &DcspInstance::validate);

  py::class_<ParitySet>(m, "ParitySet")
      .def_property_readonly(
          "elements", [](const ParitySet& s) { return s.elements; })
      .def_property_readonly("odd", [](const ParitySet& s) {
        return s.target == ParityTarget::Odd;
      });

  py::class_<EvenOddSetInstance>(m, "EvenOddSetInstance")
      .def(py::init<>())
      .def_readwrite("universe", &EvenOddSetInstance::universe)
      .def_property_readonly(
          "sets", [](const EvenOddSetInstance& e) { return e.sets; })
      .def("add_set",
           [](EvenOddSetInstance& e, std::vector<int> elements, bool odd) {
             ParitySet s;
             std::sort(elements.begin(), elements.end());
             s.elements = std::move(elements);
             s.target = odd ? ParityTarget::Odd : ParityTarget::Even;
             e.sets.push_back(std::move(s));
           },
           py::arg("elements"), py::arg("odd") = true);

  py::class_<NcInstance>(m, "NcInstance")
      .def_property_readonly("rows",
                             [](const NcInstance& i) { return i.a.rows(); })
      .def_property_readonly("cols",
                             [](const NcInstance& i) { return i.a.cols(); });

  py::class_<SolveOutcome>(m, "SolveOutcome")
      .def_property_readonly("status", &outcome_status)
      .def_readonly("cost", &SolveOutcome::cost)
      .def_readonly("deleted", &SolveOutcome::deleted)
      .def_property_readonly(
          "witness",
          [](const SolveOutcome& o) {
            return std::vector<int>(o.witness.begin(), o.witness.end());
          })
      .def_readonly("elements", &SolveOutcome::elements)
      .def_readonly("ratio", &SolveOutcome::ratio)
      .def_readonly("notes", &SolveOutcome::notes);

  py::class_<ReductionArtifact>(m, "ReductionArtifact")
      .def_readonly("name", &ReductionArtifact::name)
      .def_readonly("alpha", &ReductionArtifact::alpha)
      .def_property_readonly("target", &target_instance);

  // parsing and serialization
  m.def("parse_language", &parse_language);
  m.def("parse_dcsp", &parse_dcsp);
  m.def("parse_oddset", &parse_oddset);
  m.def("parse_nc", &parse_nc);
  m.def("serialize_language",
        [](const Language& x) { return serialize(x); });
  m.def("serialize_dcsp", [](const DcspInstance& x) { return serialize(x); });
  m.def("serialize_oddset",
        [](const EvenOddSetInstance& x) { return serialize(x); });
  m.def("serialize_nc", [](const NcInstance& x) { return serialize(x); });

  // classification and solving
  m.def("property_vector", &property_vector);
  m.def("classify", &classify);
  m.def("brute_force_dcsp", &brute_force_dcsp);
  m.def("solve_bijunctive", &solve_bijunctive);
  m.def("approx_ihsb",
        [](const DcspInstance& inst, int width, bool plus) {
          return approx_ihsb(inst, width,
                             plus ? Polarity::Plus : Polarity::Minus);
        },
        py::arg("instance"), py::arg("width"), py::arg("plus") = true);
  m.def("solve_oddset",
        [](const EvenOddSetInstance& inst, int budget) {
          return solve_oddset_exact(inst, budget);
        });
  m.def("solve_nc", [](const NcInstance& inst) { return solve_nc_exact(inst); });
  m.def("solve_auto", &solve_auto);

  // reductions
  m.def("eliminate_undeletable", &eliminate_undeletable);
  m.def("nc_to_oddset", &nc_to_oddset);
  m.def("evenodd_to_odd", &evenodd_to_odd);
  m.def("oddset_to_dcsp_b2", &oddset_to_dcsp_b2, py::arg("instance"),
        py::arg("eliminate") = true);
  m.def("dcsp_b2_to_b3", &dcsp_b2_to_b3);
  m.def("dcsp_b3_to_nc", &dcsp_b3_to_nc);
  m.def("dualize", &dualize);
  m.def("oddset_self_improve", &oddset_self_improve);

  // generators
  m.def("random_dcsp", &random_dcsp, py::arg("language"), py::arg("num_vars"),
        py::arg("num_constraints"), py::arg("seed"),
        py::arg("num_undeletable") = 0);
  m.def("random_oddset", &random_oddset, py::arg("universe"),
        py::arg("num_sets"), py::arg("max_set_size"), py::arg("seed"),
        py::arg("allow_even") = false);
  m.def("random_nc", &random_nc, py::arg("rows"), py::arg("cols"),
        py::arg("seed"));

  // built-in relations
  m.def("rel_one", &rel_one);
  m.def("rel_zero", &rel_zero);
  m.def("rel_implies", &rel_implies);
  m.def("rel_xor", &rel_xor);
  m.def("rel_or", &rel_or);
  m.def("rel_nand", &rel_nand);
  m.def("rel_even", &rel_even);
  m.def("rel_odd", &rel_odd);
  m.def("rel_nae", &rel_nae);

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<InfeasibleSourceError>(m, "InfeasibleSourceError");
}
