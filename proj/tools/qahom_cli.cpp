// qahom: command line front end.
//   exit 0 success, 1 verification failure (witness printed), 2 input error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "qahom/error.hpp"
#include "qahom/io.hpp"
#include "qahom/verify/suites.hpp"

#ifndef QAHOM_FIXTURES_DIR
#define QAHOM_FIXTURES_DIR "fixtures"
#endif

using namespace qahom;
using io::Json;
using io::to_json;

namespace {

struct Options {
  std::size_t degree_bound = 6;
  std::size_t weight_bound = 4;
  std::size_t pbw_bound = 6;
  std::uint64_t seed = 1;
  std::string format = "human";
  std::string input;
  std::string poly;
  std::string fixtures = QAHOM_FIXTURES_DIR;
};

// What a command produces: the structured report plus its human rendering.
struct Outcome {
  int status = 0;
  Json result = Json::object();
  std::vector<std::string> lines;
  std::string witness;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::InputError("cannot read input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_text(const std::string& bytes, const std::string& path) {
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw io::InputError("input file '" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dims_text(const std::map<int, std::size_t>& dims) {
  std::string s;
  for (const auto& [n, d] : dims) s += (s.empty() ? "" : ", ") + ("H^" + std::to_string(n) + " = " + std::to_string(d));
  return s.empty() ? "all zero" : s;
}

Json dims_json(const std::map<int, std::size_t>& dims) {
  Json j = Json::object();
  for (const auto& [n, d] : dims) j[std::to_string(n)] = d;
  return j;
}

Outcome cmd_cohomology(const Json& in) {
  const Complex x = io::complex_from_json(in, "complex");
  Outcome out;
  Json h = Json::object();
  bool acyclic = true;
  for (const auto& [n, obj] : reduced_cohomology(x)) {
    h[std::to_string(n)] = to_json(obj);
    acyclic = acyclic && obj.dim() == 0;
    out.lines.push_back("H^" + std::to_string(n) + " = " + (obj.dim() == 0 ? "0" : describe(obj)));
  }
  out.result["cohomology"] = h;
  out.result["acyclic"] = acyclic;
  out.lines.push_back("acyclic: " + yes_no(acyclic));
  return out;
}

Outcome cmd_classify(const Json& in) {
  const ChainMap f = io::chain_map_from_json(in, "map");
  const MorphismClassification c = classify(f);
  Outcome out;
  out.result = Json{{"degreewise_mono", c.degreewise_mono},
                    {"degreewise_epi", c.degreewise_epi},
                    {"degreewise_strict_mono", c.degreewise_strict_mono},
                    {"degreewise_strict_epi", c.degreewise_strict_epi},
                    {"reduced_qiso", c.reduced_qiso},
                    {"injective_cofibration", c.injective_cofibration()},
                    {"injective_trivial_cofibration", c.injective_trivial_cofibration()},
                    {"projective_fibration", c.projective_fibration()},
                    {"projective_trivial_fibration", c.projective_trivial_fibration()},
                    {"weak_equivalence", c.weak_equivalence()}};
  out.lines.push_back("mono: " + yes_no(c.degreewise_mono) + ", strict mono: " + yes_no(c.degreewise_strict_mono) +
                      ", fibration: " + yes_no(c.projective_fibration()) +
                      ", weak equivalence: " + yes_no(c.weak_equivalence()));
  out.lines.push_back("epi: " + yes_no(c.degreewise_epi) + ", strict epi: " + yes_no(c.degreewise_strict_epi));
  out.lines.push_back("injective cofibration: " + yes_no(c.injective_cofibration()) +
                      ", trivial: " + yes_no(c.injective_trivial_cofibration()));
  out.lines.push_back("projective fibration: " + yes_no(c.projective_fibration()) +
                      ", trivial: " + yes_no(c.projective_trivial_fibration()));
  return out;
}

Outcome cmd_check_lift(const Json& in) {
  const LiftingSquare sq = io::square_from_json(in, "square");
  validate(sq);
  Outcome out;
  const auto h = solve_lift(sq);
  out.result["lift_exists"] = h.has_value();
  if (h) {
    Json comps = Json::object();
    for (const auto& [n, m] : h->components()) comps[std::to_string(n)] = to_json(m);
    out.result["lift"] = comps;
    out.lines.push_back("lift: found");
    for (const auto& [n, m] : h->components())
      out.lines.push_back("  h^" + std::to_string(n) + " = " + to_json(m).dump());
  } else {
    out.status = 1;
    out.witness = "the affine system for h (chain map, h o left = top, right o h = bottom, filtration) is inconsistent";
    out.lines.push_back("lift: none");
  }
  return out;
}

Outcome cmd_factor(const Json& in) {
  const FiltMorphism f = io::morphism_from_json(in, "morphism");
  const FactoredMorphism a = factor(f);
  const ImageFactorization b = factor_through_image(f);
  Outcome out;
  const bool ok = compose(a.mono, a.strict_epi) == f && compose(b.strict_mono, b.epi) == f;
  out.result = Json{{"strict", is_strict(f)},
                    {"mono", f.is_mono()},
                    {"epi", f.is_epi()},
                    {"coimage", Json{{"strict_epi", to_json(a.strict_epi)}, {"mono", to_json(a.mono)}}},
                    {"image", Json{{"epi", to_json(b.epi)}, {"strict_mono", to_json(b.strict_mono)}}},
                    {"recomposes", ok}};
  out.lines.push_back("mono: " + yes_no(f.is_mono()) + ", epi: " + yes_no(f.is_epi()) + ", strict: " + yes_no(is_strict(f)));
  out.lines.push_back("coimage " + describe(a.strict_epi.target()) + ": strict epi " + to_json(a.strict_epi.matrix()).dump() +
                      ", then mono " + to_json(a.mono.matrix()).dump());
  out.lines.push_back("image " + describe(b.epi.target()) + ": epi " + to_json(b.epi.matrix()).dump() +
                      ", then strict mono " + to_json(b.strict_mono.matrix()).dump());
  if (!ok) {
    out.status = 1;
    out.witness = "factorization does not recompose to f";
  }
  return out;
}

Outcome cmd_resolve_ce(const Json& in, const Options& o) {
  const DGLie g = io::lie_from_json(in, "lie");
  const CEResolution res = ce_resolution(g, o.weight_bound);
  const CEReport rep = verify_ce_acyclicity(res, o.weight_bound);
  Outcome out;
  Json pieces = Json::array();
  for (const CEPieceReport& p : rep.pieces) {
    pieces.push_back(Json{{"index", p.index},
                          {"cohomology", dims_json(p.cohomology)},
                          {"expected", p.expected},
                          {"augmentation_ok", p.augmentation_ok}});
    out.lines.push_back((res.weighted ? "weight " : "length <= ") + std::to_string(p.index) + ": " +
                        dims_text(p.cohomology) + (p.expected ? "" : "  (unexpected)"));
  }
  out.result = Json{{"weighted", res.weighted}, {"pieces", pieces}, {"passed", rep.passed}};
  out.lines.push_back(std::string("CE resolution: ") + (rep.passed ? "pass" : "FAIL"));
  if (!rep.passed) {
    out.status = 1;
    out.witness = rep.witness;
  }
  return out;
}

Outcome cmd_resolve_koszul(const Json& in, const Options& o) {
  const io::KoszulInput k = io::koszul_from_json(in, "koszul");
  const KoszulData data = fancy_koszul(k.p, o.degree_bound);
  const KoszulReport rep = verify_augmentation_qiso(data);
  Outcome out;
  Json strands = Json::array();
  for (const KoszulStrandReport& s : rep.strands) {
    strands.push_back(Json{{"total", s.total}, {"cohomology", dims_json(s.cohomology)}, {"expected", s.expected}});
    out.lines.push_back("total degree " + std::to_string(s.total) + ": " + dims_text(s.cohomology) +
                        (s.expected ? "" : "  (unexpected)"));
  }
  out.result = Json{{"P", to_json(k.p)}, {"strands", strands}, {"augmentation_ok", rep.augmentation_ok},
                    {"passed", rep.passed}};
  out.lines.push_back(std::string("augmentation quasi-isomorphism: ") + (rep.passed ? "pass" : "FAIL"));
  if (!rep.passed) {
    out.status = 1;
    out.witness = rep.witness;
  }
  if (k.m) {
    const Complex km = specialized_koszul(k.p, *k.m);
    std::map<int, std::size_t> dims;
    for (const auto& [n, obj] : reduced_cohomology(km)) dims[n] = obj.dim();
    const BaseChangeReport bc = base_change_check(k.p, *k.m, o.degree_bound);
    out.result["specialized"] = Json{{"complex", to_json(km)}, {"cohomology", dims_json(dims)}};
    out.result["base_change"] = Json{{"passed", bc.passed}, {"compared", bc.compared}};
    out.lines.push_back("K(R,P;m): " + dims_text(dims));
    out.lines.push_back("base change: " + std::string(bc.passed ? "pass" : "FAIL") + " (" +
                        std::to_string(bc.compared) + " columns compared)");
    if (!bc.passed) {
      out.status = 1;
      if (out.witness.empty()) out.witness = bc.witness;
    }
  }
  return out;
}

Outcome cmd_pbw(const Json& in, const Options& o) {
  const DGLie g = io::lie_from_json(in, "lie");
  require_lie_axioms(g);
  const PbwReport rep = pbw_check(g, o.pbw_bound);
  Outcome out;
  out.result = Json{{"sym", rep.sym_dims}, {"gr", rep.gr_dims}, {"normal_forms", rep.normal_form_dims},
                    {"passed", rep.passed}};
  for (std::size_t n = 0; n < rep.gr_dims.size(); ++n)
    out.lines.push_back("n = " + std::to_string(n) + ": dim gr U = " + std::to_string(rep.gr_dims[n]) +
                        ", dim Sym = " + std::to_string(rep.sym_dims[n]));
  out.lines.push_back(std::string("PBW: ") + (rep.passed ? "pass" : "FAIL"));
  if (!rep.passed) {
    out.status = 1;
    out.witness = rep.witness;
  }
  return out;
}

Outcome cmd_lie_check(const Json& in) {
  const DGLie g = io::lie_from_json(in, "lie");
  const AxiomReport rep = check_lie_axioms(g);
  Outcome out;
  out.result = Json{{"passed", rep.passed}, {"checks", rep.checks}, {"failures", rep.failures},
                    {"violations", rep.violations}};
  out.lines.push_back("axioms: " + std::string(rep.passed ? "pass" : "FAIL") + " (" + std::to_string(rep.checks) +
                      " checks, " + std::to_string(rep.failures) + " failures)");
  for (const auto& v : rep.violations) out.lines.push_back("  " + v);
  if (!rep.passed) {
    out.status = 1;
    out.witness = rep.violations.empty() ? "" : rep.violations.front();
    return out;
  }
  const DGLie c = cone_lie(g);
  const AxiomReport crep = check_lie_axioms(c);
  const bool acyclic = is_acyclic(underlying_complex(c));
  out.result["cone"] = Json{{"axioms", crep.passed}, {"acyclic", acyclic}};
  out.lines.push_back("cone: axioms " + std::string(crep.passed ? "pass" : "FAIL") + ", underlying complex acyclic: " +
                      yes_no(acyclic));
  if (!crep.passed || !acyclic) {
    out.status = 1;
    out.witness = crep.violations.empty() ? "cone has nonzero cohomology" : crep.violations.front();
  }
  return out;
}

Outcome cmd_derived_quotient(const Json& in, const Options& o) {
  const io::DerivedQuotientInput d = io::derived_quotient_from_json(in, "input", o.degree_bound);
  const DerivedQuotient q = derived_quotient(d.lie, d.algebra, d.action);
  Outcome out;
  Json pieces = Json::array();
  for (const DerivedQuotientPiece& p : q.pieces) {
    Json basis = Json::object();
    for (const auto& [n, labels] : p.basis) basis[std::to_string(n)] = labels;
    pieces.push_back(Json{{"weight", p.weight}, {"cohomology", dims_json(p.cohomology)}, {"basis", basis}});
    out.lines.push_back("weight " + std::to_string(p.weight) + ": " + dims_text(p.cohomology));
  }
  out.result["pieces"] = pieces;
  return out;
}

Outcome cmd_crit(const Json* in, const Options& o) {
  const Polynomial f = in ? io::polynomial_from_json(*in, "polynomial") : [&] {
    try {
      return parse_polynomial(o.poly);
    } catch (const std::invalid_argument& e) {
      throw io::InputError(std::string("field '--poly': ") + e.what());
    }
  }();
  const CritReport rep = critical_locus(f, o.degree_bound);
  Outcome out;
  out.result = Json{{"polynomial", to_string(f)},
                    {"bound", rep.bound},
                    {"cohomology", dims_json(rep.cohomology)},
                    {"h0_by_cutoff", rep.h0_by_cutoff},
                    {"stabilized", rep.stabilized}};
  std::string line = "dim H0 = " + std::to_string(rep.cohomology.at(0)) + (rep.stabilized ? " (stabilized)" : " (not stabilized)");
  for (const auto& [n, d] : rep.cohomology)
    if (n < 0) line += ", H" + std::to_string(n) + " = " + std::to_string(d);
  out.lines.push_back("f = " + to_string(f));
  out.lines.push_back(line);
  return out;
}

Outcome cmd_selftest(const Options& o) {
  Outcome out;
  Json suites = Json::array();
  bool all = true;
  for (const auto& r : verify::run_all(o.seed, o.fixtures)) {
    all = all && r.passed;
    suites.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"instances", r.instances},
                          {"witness", r.witness}, {"notes", r.notes}});
    out.lines.push_back(std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + " (" +
                        std::to_string(r.instances) + " instances)");
    for (const auto& n : r.notes) out.lines.push_back("     " + n);
    if (!r.passed) {
      out.lines.push_back("     witness: " + r.witness);
      if (out.witness.empty()) out.witness = r.name + ": " + r.witness;
    }
  }
  out.result = Json{{"seed", o.seed}, {"suites", suites}, {"passed", all}};
  if (!all) out.status = 1;
  return out;
}

void emit(const std::string& command, const Options& o, const std::string& digest, const Outcome& out,
          const std::string& error) {
  const char* status = !error.empty() ? "input-error" : out.status == 0 ? "ok" : "failed";
  if (o.format == "machine") {
    Json report{{"command", command}};
    if (!o.input.empty()) report["input"] = o.input;
    if (!digest.empty()) report["input_sha256"] = digest;
    report["options"] = Json{{"degree_bound", o.degree_bound}, {"weight_bound", o.weight_bound},
                             {"pbw_bound", o.pbw_bound}, {"seed", o.seed}};
    report["status"] = status;
    if (!error.empty()) report["error"] = error;
    else report["result"] = out.result;
    if (!out.witness.empty()) report["witness"] = out.witness;
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << "qahom " << command;
  if (!o.input.empty()) std::cout << " " << o.input;
  std::cout << "\n";
  if (!digest.empty()) std::cout << "input sha256: " << digest << "\n";
  if (!error.empty()) {
    std::cout << "status: error\n";
    return;
  }
  for (const auto& l : out.lines) std::cout << l << "\n";
  if (!out.witness.empty()) std::cout << "witness: " << out.witness << "\n";
  std::cout << "status: " << status << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact homological algebra over filtered vector spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  auto positive = CLI::PositiveNumber;
  app.add_option("--degree-bound", o.degree_bound, "polynomial / total degree bound")->check(positive);
  app.add_option("--weight-bound", o.weight_bound, "auxiliary weight bound")->check(positive);
  app.add_option("--pbw-bound", o.pbw_bound, "PBW length bound")->check(positive);
  app.add_option("--seed", o.seed, "seed for selftest");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "machine"}));

  const std::vector<std::pair<std::string, std::string>> file_commands = {
      {"cohomology", "reduced cohomology of a complex"},
      {"classify-map", "model-structure classes of a chain map"},
      {"check-lift", "solve a lifting square"},
      {"factor", "canonical factorizations of a filtered morphism"},
      {"resolve-ce", "Chevalley-Eilenberg resolution and its acyclicity"},
      {"resolve-koszul", "Koszul complex, augmentation and base change"},
      {"pbw", "PBW dimension check"},
      {"lie-check", "dg-Lie axioms and the cone"},
      {"derived-quotient", "derived quotient A/g"},
  };
  for (const auto& [name, help] : file_commands) app.add_subcommand(name, help)->add_option("input", o.input, "input file")->required();
  auto* crit = app.add_subcommand("crit", "derived critical locus of a polynomial");
  crit->add_option("input", o.input, "input file");
  crit->add_option("--poly", o.poly, "polynomial given inline");
  auto* self = app.add_subcommand("selftest", "run every property suite");
  self->add_option("--fixtures", o.fixtures, "fixtures directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::string digest;
  Outcome out;
  std::string error;
  try {
    if (command == "selftest") {
      out = cmd_selftest(o);
    } else if (command == "crit" && o.input.empty()) {
      if (o.poly.empty()) throw io::InputError("crit needs an input file or --poly");
      digest = sha256_hex(o.poly);
      out = cmd_crit(nullptr, o);
    } else {
      const std::string bytes = read_bytes(o.input);
      digest = sha256_hex(bytes);
      const Json in = parse_text(bytes, o.input);
      if (command == "cohomology") out = cmd_cohomology(in);
      else if (command == "classify-map") out = cmd_classify(in);
      else if (command == "check-lift") out = cmd_check_lift(in);
      else if (command == "factor") out = cmd_factor(in);
      else if (command == "resolve-ce") out = cmd_resolve_ce(in, o);
      else if (command == "resolve-koszul") out = cmd_resolve_koszul(in, o);
      else if (command == "pbw") out = cmd_pbw(in, o);
      else if (command == "lie-check") out = cmd_lie_check(in);
      else if (command == "derived-quotient") out = cmd_derived_quotient(in, o);
      else if (command == "crit") out = cmd_crit(&in, o);
    }
  } catch (const io::InputError& e) {
    error = e.what();
  } catch (const InvariantError& e) {
    out = Outcome{};
    out.status = 1;
    out.witness = e.what();
    out.lines.push_back("verification failed");
  } catch (const std::invalid_argument& e) {
    error = e.what();
  } catch (const std::exception& e) {
    error = std::string("internal error: ") + e.what();
  }
  emit(command, o, digest, out, error);
  if (!error.empty()) {
    std::cerr << "error: " << error << "\n";
    return 2;
  }
  return out.status;
}
