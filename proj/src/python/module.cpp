#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwo/cli.hpp"
#include "gwo/document.hpp"
#include "gwo/error.hpp"
#include "gwo/internal.hpp"
#include "gwo/oracle.hpp"
#include "gwo/xmod.hpp"

namespace py = pybind11;
using namespace gwo;

namespace {

// identities cross the boundary as plain strings
std::vector<std::string> identity_texts(const OpAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& id : a.extra_identities) out.push_back(id.text);
  return out;
}

void set_identities(OpAlgebra& a, const std::vector<std::string>& texts) {
  a.extra_identities.clear();
  for (const auto& t : texts) a.extra_identities.push_back(parse_identity(t));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groups with operations, internal groupoids, coverings "
            "and crossed modules";

  py::register_exception<Error>(m, "GwoError");

  py::class_<CheckFailure>(m, "CheckFailure")
      .def(py::init<>())
      .def_readwrite("check", &CheckFailure::check)
      .def_readwrite("op", &CheckFailure::op)
      .def_readwrite("tuple", &CheckFailure::tuple)
      .def_readwrite("lhs", &CheckFailure::lhs)
      .def_readwrite("rhs", &CheckFailure::rhs)
      .def_readwrite("note", &CheckFailure::note)
      .def("__repr__", [](const CheckFailure& f) {
        return "<CheckFailure " + f.check + ">";
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def("ok", &ValidationReport::ok)
      .def("checks_run", &ValidationReport::checks_run)
      .def("failures", &ValidationReport::failures)
      .def("summary", &ValidationReport::summary)
      .def("__bool__", &ValidationReport::ok)
      .def("__repr__", [](const ValidationReport& r) {
        return "<ValidationReport " + r.summary() + ">";
      });

  py::class_<OpAlgebra>(m, "OpAlgebra")
      .def(py::init<>())
      .def_readwrite("size", &OpAlgebra::size)
      .def_readwrite("zero", &OpAlgebra::zero)
      .def_readwrite("add", &OpAlgebra::add)
      .def_readwrite("neg", &OpAlgebra::neg)
      .def_readwrite("binary_ops", &OpAlgebra::binary_ops)
      .def_readwrite("opposites", &OpAlgebra::opposites)
      .def_readwrite("unary_ops", &OpAlgebra::unary_ops)
      .def_property("identities", &identity_texts, &set_identities)
      .def("plus", &OpAlgebra::plus)
      .def("minus", &OpAlgebra::minus)
      .def("star", &OpAlgebra::star)
      .def("un", &OpAlgebra::un)
      .def(py::self == py::self)
      .def("__repr__", [](const OpAlgebra& a) {
        return "<OpAlgebra of size " + std::to_string(a.size) + ">";
      });

  py::class_<AlgebraHom>(m, "AlgebraHom")
      .def(py::init<>())
      .def(py::init([](OpAlgebra source, OpAlgebra target,
                       std::vector<int> map) {
             return AlgebraHom{std::move(source), std::move(target),
                               std::move(map)};
           }),
           py::arg("source"), py::arg("target"), py::arg("map"))
      .def_readwrite("source", &AlgebraHom::source)
      .def_readwrite("target", &AlgebraHom::target)
      .def_readwrite("map", &AlgebraHom::map);

  py::class_<DerivedAction>(m, "DerivedAction")
      .def(py::init<>())
      .def(py::init([](OpAlgebra actor, OpAlgebra acted, std::vector<int> dot,
                       std::map<std::string, std::vector<int>> stars) {
             return DerivedAction{std::move(actor), std::move(acted),
                                  std::move(dot), std::move(stars)};
           }),
           py::arg("actor"), py::arg("acted"), py::arg("dot"),
           py::arg("stars") = std::map<std::string, std::vector<int>>{})
      .def_readwrite("actor", &DerivedAction::actor)
      .def_readwrite("acted", &DerivedAction::acted)
      .def_readwrite("dot", &DerivedAction::dot)
      .def_readwrite("stars", &DerivedAction::stars);

  py::class_<FinGroupoid>(m, "FinGroupoid")
      .def(py::init<>())
      .def_readwrite("num_objects", &FinGroupoid::num_objects)
      .def_readwrite("num_arrows", &FinGroupoid::num_arrows)
      .def_readwrite("src", &FinGroupoid::src)
      .def_readwrite("tgt", &FinGroupoid::tgt)
      .def_readwrite("id_of", &FinGroupoid::id_of)
      .def_readwrite("comp", &FinGroupoid::comp)
      .def("compose",
           [](const FinGroupoid& g, int a, int b) -> py::object {
             auto c = g.compose(a, b);
             if (!c) return py::none();
             return py::int_(*c);
           })
      .def("inverse", &FinGroupoid::inverse)
      .def(py::self == py::self);

  py::class_<GpdMorphism>(m, "GpdMorphism")
      .def(py::init<>())
      .def_readwrite("source", &GpdMorphism::source)
      .def_readwrite("target", &GpdMorphism::target)
      .def_readwrite("arrow_map", &GpdMorphism::arrow_map)
      .def_readwrite("object_map", &GpdMorphism::object_map)
      .def(py::self == py::self);

  py::class_<GpdAction>(m, "GpdAction")
      .def(py::init<>())
      .def_readwrite("gpd", &GpdAction::gpd)
      .def_readwrite("set_size", &GpdAction::set_size)
      .def_readwrite("theta", &GpdAction::theta)
      .def_readwrite("phi", &GpdAction::phi);

  py::class_<CosetCover>(m, "CosetCover")
      .def_readonly("action", &CosetCover::action)
      .def_readonly("cover", &CosetCover::cover)
      .def_readonly("projection", &CosetCover::projection)
      .def_readonly("base", &CosetCover::base)
      .def_readonly("cosets", &CosetCover::cosets);

  py::class_<InternalGroupoid>(m, "InternalGroupoid")
      .def(py::init<>())
      .def_readwrite("gpd", &InternalGroupoid::gpd)
      .def_readwrite("arrow_alg", &InternalGroupoid::arrow_alg)
      .def_readwrite("object_alg", &InternalGroupoid::object_alg)
      .def(py::self == py::self);

  py::class_<InternalMorphism>(m, "InternalMorphism")
      .def(py::init<>())
      .def_readwrite("source", &InternalMorphism::source)
      .def_readwrite("target", &InternalMorphism::target)
      .def_readwrite("arrow_map", &InternalMorphism::arrow_map)
      .def_readwrite("object_map", &InternalMorphism::object_map)
      .def("underlying", &InternalMorphism::underlying)
      .def(py::self == py::self);

  py::class_<InternalAction>(m, "InternalAction")
      .def(py::init<>())
      .def_readwrite("gpd", &InternalAction::gpd)
      .def_readwrite("set_alg", &InternalAction::set_alg)
      .def_readwrite("theta", &InternalAction::theta)
      .def_readwrite("phi", &InternalAction::phi)
      .def("underlying", &InternalAction::underlying)
      .def(py::self == py::self);

  py::class_<CrossedModule>(m, "CrossedModule")
      .def(py::init<>())
      .def_readwrite("a", &CrossedModule::a)
      .def_readwrite("b", &CrossedModule::b)
      .def_readwrite("alpha", &CrossedModule::alpha)
      .def_readwrite("action", &CrossedModule::action)
      .def(py::self == py::self);

  py::class_<XModMorphism>(m, "XModMorphism")
      .def(py::init<>())
      .def_readwrite("source", &XModMorphism::source)
      .def_readwrite("target", &XModMorphism::target)
      .def_readwrite("f1", &XModMorphism::f1)
      .def_readwrite("f2", &XModMorphism::f2);

  py::class_<oracle::IsoWitness>(m, "IsoWitness")
      .def_readonly("found", &oracle::IsoWitness::found)
      .def_readonly("maps", &oracle::IsoWitness::maps)
      .def_readonly("nodes", &oracle::IsoWitness::nodes)
      .def("__bool__",
           [](const oracle::IsoWitness& w) { return w.found; });

  // algebra operations
  m.def("validate_algebra", &validate_algebra);
  m.def("is_homomorphism", &is_homomorphism);
  m.def("kernel", &kernel);
  m.def("is_subobject", &is_subobject);
  m.def("is_ideal", &is_ideal);
  m.def("semidirect_product", &semidirect_product);
  m.def("is_derived_action", &is_derived_action);
  m.def("check_identity",
        [](const OpAlgebra& a, const std::string& text) {
          return check_identity(a, parse_identity(text));
        });
  m.def("cyclic_algebra", &cyclic_algebra);
  m.def("klein_four", &klein_four);
  m.def("sym3", &sym3);
  m.def("ring_zmod", &ring_zmod);
  m.def("ring_zero", &ring_zero);
  m.def("trivial_like", &trivial_like);
  m.def("subalgebra",
        [](const OpAlgebra& parent, const std::vector<int>& members) {
          return subalgebra(parent, members);
        });

  // groupoid operations
  m.def("validate_groupoid", &validate_groupoid);
  m.def("validate_morphism", &validate_morphism);
  m.def("star", &star);
  m.def("object_group", &object_group);
  m.def("is_transitive", &is_transitive);
  m.def("is_covering", &is_covering);
  m.def("is_universal_cover", &is_universal_cover);
  m.def("characteristic_group", &characteristic_group);
  m.def("lift_morphism", &lift_morphism);
  m.def("cover_between_covers", &cover_between_covers);
  m.def("validate_action", &validate_action);
  m.def("action_groupoid", &action_groupoid);
  m.def("coset_cover", &coset_cover);
  m.def("one_object_groupoid", &one_object_groupoid);
  m.def("discrete_groupoid", &discrete_groupoid);

  // internal operations
  m.def("validate_internal", &validate_internal);
  m.def("validate_internal_morphism", &validate_internal_morphism);
  m.def("ker_d0_component", &ker_d0_component);
  m.def("zero_component", [](const InternalGroupoid& g) {
    return zero_component(g);
  });
  m.def("validate_internal_action", &validate_internal_action);
  m.def("lifted_coset_algebra",
        [](const InternalGroupoid& g, const std::vector<int>& c) {
          return lifted_coset_algebra(g, c);
        });
  m.def("internal_action_groupoid", &internal_action_groupoid);
  m.def("lift_internal_structure", &lift_internal_structure);
  m.def("is_internal_covering", &is_internal_covering);
  m.def("star_zero_restriction_is_iso", &star_zero_restriction_is_iso);
  m.def("covering_to_action", &covering_to_action);
  m.def("action_to_covering", &action_to_covering);
  m.def("check_act_cov_equivalence", &check_act_cov_equivalence);
  m.def("one_object_internal", &one_object_internal);
  m.def("discrete_internal", &discrete_internal);
  m.def("canonical_self_action", &canonical_self_action);
  m.def("subobjects_of_object_group", &subobjects_of_object_group);

  // crossed modules
  m.def("validate_xmod", &validate_xmod);
  m.def("is_xmod_morphism", &is_xmod_morphism);
  m.def("is_xmod_cover", &is_xmod_cover);
  m.def("internal_to_xmod", &internal_to_xmod);
  m.def("xmod_to_internal", &xmod_to_internal);
  m.def("cover_correspondence", &cover_correspondence);

  // oracle searches
  m.def("find_algebra_iso", &oracle::find_algebra_iso);
  m.def("find_groupoid_iso", &oracle::find_groupoid_iso);
  m.def("find_internal_iso", &oracle::find_internal_iso);
  m.def("find_xmod_iso", &oracle::find_xmod_iso);
  m.def("find_action_iso", &oracle::find_action_iso);
  m.def("find_cover_iso_over", &oracle::find_cover_iso_over);
  m.def("brute_check_covering", &oracle::brute_check_covering);

  // documents and the command surface
  py::class_<StructureDocument>(m, "StructureDocument")
      .def(py::init<>())
      .def_readwrite("version", &StructureDocument::version)
      .def_readwrite("name", &StructureDocument::name)
      .def_readwrite("comment", &StructureDocument::comment)
      .def_readwrite("base", &StructureDocument::base)
      .def_property(
          "payload",
          [](const StructureDocument& d) -> py::object {
            return std::visit(
                [](const auto& v) -> py::object { return py::cast(v); },
                d.payload);
          },
          [](StructureDocument& d, const py::object& v) {
            if (py::isinstance<OpAlgebra>(v))
              d.payload = v.cast<OpAlgebra>();
            else if (py::isinstance<FinGroupoid>(v))
              d.payload = v.cast<FinGroupoid>();
            else if (py::isinstance<InternalGroupoid>(v))
              d.payload = v.cast<InternalGroupoid>();
            else if (py::isinstance<CrossedModule>(v))
              d.payload = v.cast<CrossedModule>();
            else if (py::isinstance<GpdAction>(v))
              d.payload = v.cast<GpdAction>();
            else if (py::isinstance<InternalAction>(v))
              d.payload = v.cast<InternalAction>();
            else if (py::isinstance<GpdMorphism>(v))
              d.payload = v.cast<GpdMorphism>();
            else if (py::isinstance<InternalMorphism>(v))
              d.payload = v.cast<InternalMorphism>();
            else if (py::isinstance<XModMorphism>(v))
              d.payload = v.cast<XModMorphism>();
            else
              throw Error(ErrorCode::SchemaError,
                          "unsupported payload type");
          })
      .def("kind", &StructureDocument::kind);
  m.def("parse_document", &parse_document);
  m.def("serialize_document", &serialize_document);
  m.def("load_document", &load_document);
  m.def("save_document", &save_document);
  m.def("validate_document", &validate_document);
  m.def("reverify_counterexample", &reverify_counterexample);

  py::class_<ReportEntry>(m, "ReportEntry")
      .def_readonly("name", &ReportEntry::name)
      .def_readonly("status", &ReportEntry::status)
      .def_readonly("detail", &ReportEntry::detail)
      .def_readonly("counterexamples", &ReportEntry::counterexamples);
  py::class_<CliReport>(m, "CliReport")
      .def_readonly("command", &CliReport::command)
      .def_readonly("entries", &CliReport::entries)
      .def_readonly("elapsed_ms", &CliReport::elapsed_ms)
      .def_readonly("exit_code", &CliReport::exit_code)
      .def_readonly("error", &CliReport::error)
      .def("to_text", &CliReport::to_text)
      .def("to_json", &CliReport::to_json);
  m.def("run_command", &run_command);
}
