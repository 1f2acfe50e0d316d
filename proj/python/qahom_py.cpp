// JSON-in, JSON-out bindings; the Python package wraps them in dicts.

#include <pybind11/pybind11.h>

#include "qahom/error.hpp"
#include "qahom/io.hpp"
#include "qahom/verify/suites.hpp"

namespace py = pybind11;
using namespace qahom;
using io::Json;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw io::InputError(std::string("not valid JSON: ") + e.what());
  }
}

std::string cohomology(const std::string& text) {
  const Complex x = io::complex_from_json(parse(text), "complex");
  Json h = Json::object();
  for (const auto& [n, obj] : reduced_cohomology(x)) h[std::to_string(n)] = io::to_json(obj);
  return Json{{"cohomology", h}, {"acyclic", is_acyclic(x)}}.dump();
}

std::string classify_map(const std::string& text) {
  const MorphismClassification c = classify(io::chain_map_from_json(parse(text), "map"));
  return Json{{"mono", c.degreewise_mono},
              {"epi", c.degreewise_epi},
              {"strict_mono", c.degreewise_strict_mono},
              {"strict_epi", c.degreewise_strict_epi},
              {"weak_equivalence", c.reduced_qiso},
              {"injective_cofibration", c.injective_cofibration()},
              {"projective_fibration", c.projective_fibration()}}
      .dump();
}

std::string check_lift(const std::string& text) {
  const LiftingSquare sq = io::square_from_json(parse(text), "square");
  validate(sq);
  const auto h = solve_lift(sq);
  return Json{{"lift", h ? io::to_json(*h) : Json(nullptr)}}.dump();
}

std::string pbw(const std::string& text, std::size_t bound) {
  const DGLie g = io::lie_from_json(parse(text), "lie");
  require_lie_axioms(g);
  const PbwReport r = pbw_check(g, bound);
  return Json{{"passed", r.passed}, {"sym_dims", r.sym_dims}, {"gr_dims", r.gr_dims},
              {"normal_form_dims", r.normal_form_dims}, {"witness", r.witness}}
      .dump();
}

std::string lie_check(const std::string& text) {
  const AxiomReport r = check_lie_axioms(io::lie_from_json(parse(text), "lie"));
  return Json{{"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}, {"violations", r.violations}}.dump();
}

std::string crit(const std::string& text, std::size_t bound) {
  const CritReport r = critical_locus(io::polynomial_from_json(parse(text), "polynomial"), bound);
  Json h = Json::object();
  for (const auto& [n, d] : r.cohomology) h[std::to_string(n)] = d;
  return Json{{"cohomology", h}, {"h0_by_cutoff", r.h0_by_cutoff}, {"stabilized", r.stabilized}}.dump();
}

std::string koszul(const std::string& text, std::size_t bound) {
  const io::KoszulInput in = io::koszul_from_json(parse(text), "koszul");
  const KoszulReport r = verify_augmentation_qiso(fancy_koszul(in.p, bound));
  Json strands = Json::array();
  for (const KoszulStrandReport& s : r.strands) {
    Json h = Json::object();
    for (const auto& [n, d] : s.cohomology) h[std::to_string(n)] = d;
    strands.push_back(Json{{"total", s.total}, {"cohomology", h}});
  }
  Json out{{"passed", r.passed}, {"augmentation_ok", r.augmentation_ok}, {"strands", strands}};
  if (in.m) {
    const BaseChangeReport b = base_change_check(in.p, *in.m, bound);
    out["base_change"] = Json{{"passed", b.passed}, {"compared", b.compared}};
  }
  return out.dump();
}

std::string run_suite(int id, std::uint64_t seed, const std::string& fixtures_dir) {
  if (id < 1 || id > verify::suite_count) throw std::invalid_argument("no such criterion");
  const verify::SuiteResult r = verify::run_suite(id, seed, fixtures_dir);
  return Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"instances", r.instances},
              {"witness", r.witness}, {"notes", r.notes}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "qahom core";
  static py::exception<InvariantError> verification_error(m, "VerificationError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvariantError& e) {
      verification_error(e.what());
    }
  });
  m.def("cohomology", &cohomology);
  m.def("classify_map", &classify_map);
  m.def("check_lift", &check_lift);
  m.def("pbw", &pbw, py::arg("lie"), py::arg("bound") = 6);
  m.def("lie_check", &lie_check);
  m.def("crit", &crit, py::arg("polynomial"), py::arg("bound") = 6);
  m.def("koszul", &koszul, py::arg("p"), py::arg("bound") = 6);
  m.def("run_suite", &run_suite, py::arg("criterion"), py::arg("seed") = 1, py::arg("fixtures_dir") = "");
}
