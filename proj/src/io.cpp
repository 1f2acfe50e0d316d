#include "qahom/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qahom/error.hpp"

namespace qahom::io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

std::string sub(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string sub(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(sub(field, key), "missing");
  return *it;
}

long long integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const std::string& field) {
  const long long v = integer(j, field);
  if (v < -1'000'000 || v > 1'000'000) bad(field, "integer out of range");
  return static_cast<int>(v);
}

std::size_t count(const Json& j, const std::string& field) {
  const long long v = integer(j, field);
  if (v < 0 || v > 1'000'000) bad(field, "expected a nonnegative count");
  return static_cast<std::size_t>(v);
}

const Json& array(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& field) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) out.push_back(small_int(j[i], sub(field, i)));
  return out;
}

int degree_key(const std::string& key, const std::string& field) {
  int v = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, v);
  if (ec != std::errc() || ptr != end || key.empty()) bad(sub(field, key), "degree keys must be integers");
  return v;
}

std::map<int, Matrix> matrix_map(const Json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object keyed by degree");
  std::map<int, Matrix> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int n = degree_key(it.key(), field);
    if (out.contains(n)) bad(sub(field, it.key()), "duplicate degree");
    out.emplace(n, matrix_from_json(it.value(), sub(field, it.key())));
  }
  return out;
}

Json matrix_map_json(const std::map<int, Matrix>& m) {
  Json out = Json::object();
  for (const auto& [n, mat] : m)
    if (!mat.is_zero()) out[std::to_string(n)] = to_json(mat);
  return out;
}

template <typename F>
auto guarded(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvariantError&) {
    throw;
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    bad(field, e.what());
  }
}

}  // namespace

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("input file '" + path + "' is not valid JSON: " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) bad(field, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(field, e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Matrix matrix_from_json(const Json& j, const std::string& field) {
  array(j, field);
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    array(j[i], sub(field, i));
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) bad(sub(field, i), "rows have different lengths");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k], sub(sub(field, i), k));
  return m;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

FiltObject object_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object");
  std::vector<int> weights;
  if (j.contains("weights")) weights = int_list(j["weights"], sub(field, "weights"));
  if (j.contains("dim")) {
    const std::size_t dim = count(j["dim"], sub(field, "dim"));
    if (!j.contains("weights")) weights.assign(dim, 0);
    if (weights.size() != dim) bad(sub(field, "weights"), "length differs from dim");
  } else if (!j.contains("weights")) {
    bad(sub(field, "dim"), "missing");
  }
  return FiltObject(std::move(weights));
}

Json to_json(const FiltObject& v) { return Json{{"dim", v.dim()}, {"weights", v.weights()}}; }

FiltMorphism morphism_from_json(const Json& j, const std::string& field) {
  FiltObject src = object_from_json(require(j, "source", field), sub(field, "source"));
  FiltObject tgt = object_from_json(require(j, "target", field), sub(field, "target"));
  Matrix m = matrix_from_json(require(j, "matrix", field), sub(field, "matrix"));
  if (m.rows() == 0 && tgt.dim() == 0) m = Matrix(0, src.dim());
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    bad(sub(field, "matrix"), "expected " + std::to_string(tgt.dim()) + " x " + std::to_string(src.dim()));
  return FiltMorphism(std::move(src), std::move(tgt), std::move(m));
}

Json to_json(const FiltMorphism& f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"matrix", to_json(f.matrix())}};
}

Complex complex_from_json(const Json& j, const std::string& field) {
  const Json& objs = require(j, "objects", field);
  if (!objs.is_object()) bad(sub(field, "objects"), "expected an object keyed by degree");
  std::map<int, FiltObject> objects;
  for (auto it = objs.begin(); it != objs.end(); ++it)
    objects.emplace(degree_key(it.key(), sub(field, "objects")),
                    object_from_json(it.value(), sub(sub(field, "objects"), it.key())));
  std::map<int, Matrix> diffs;
  if (j.contains("differentials")) diffs = matrix_map(j["differentials"], sub(field, "differentials"));
  return guarded(field, [&] { return Complex(std::move(objects), std::move(diffs)); });
}

Json to_json(const Complex& c) {
  Json objs = Json::object();
  for (int n : c.support()) objs[std::to_string(n)] = to_json(c.object(n));
  return Json{{"objects", objs}, {"differentials", matrix_map_json(c.differentials())}};
}

ChainMap chain_map_from_json(const Json& j, const std::string& field) {
  Complex src = complex_from_json(require(j, "source", field), sub(field, "source"));
  Complex tgt = complex_from_json(require(j, "target", field), sub(field, "target"));
  std::map<int, Matrix> comps;
  if (j.contains("components")) comps = matrix_map(j["components"], sub(field, "components"));
  return guarded(field, [&] { return ChainMap(std::move(src), std::move(tgt), std::move(comps)); });
}

Json to_json(const ChainMap& f) {
  return Json{{"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"components", matrix_map_json(f.components())}};
}

LiftingSquare square_from_json(const Json& j, const std::string& field) {
  const Complex a = complex_from_json(require(j, "A", field), sub(field, "A"));
  const Complex b = complex_from_json(require(j, "B", field), sub(field, "B"));
  const Complex x = complex_from_json(require(j, "X", field), sub(field, "X"));
  const Complex y = complex_from_json(require(j, "Y", field), sub(field, "Y"));
  auto map = [&](const char* key, const Complex& s, const Complex& t) {
    const std::string f = sub(field, key);
    auto comps = matrix_map(require(j, key, field), f);
    return guarded(f, [&] { return ChainMap(s, t, std::move(comps)); });
  };
  return {map("left", a, b), map("right", x, y), map("top", a, x), map("bottom", b, y)};
}

Json to_json(const LiftingSquare& sq) {
  return Json{{"A", to_json(sq.left.source())},   {"B", to_json(sq.left.target())},
              {"X", to_json(sq.right.source())},  {"Y", to_json(sq.right.target())},
              {"left", matrix_map_json(sq.left.components())},
              {"right", matrix_map_json(sq.right.components())},
              {"top", matrix_map_json(sq.top.components())},
              {"bottom", matrix_map_json(sq.bottom.components())}};
}

DGLie lie_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object");
  if (j.contains("library")) {
    const Json& name = j["library"];
    if (!name.is_string()) bad(sub(field, "library"), "expected a name");
    auto g = lie_library(name.get<std::string>());
    if (!g) bad(sub(field, "library"), "unknown Lie algebra '" + name.get<std::string>() + "'");
    return *g;
  }
  const std::size_t dim = count(require(j, "dim", field), sub(field, "dim"));
  if (dim > 64) bad(sub(field, "dim"), "too large");
  std::vector<int> degrees(dim, 0), weights(dim, 0);
  if (j.contains("degrees")) degrees = int_list(j["degrees"], sub(field, "degrees"));
  if (j.contains("weights")) weights = int_list(j["weights"], sub(field, "weights"));
  if (degrees.size() != dim) bad(sub(field, "degrees"), "length differs from dim");
  if (weights.size() != dim) bad(sub(field, "weights"), "length differs from dim");
  std::vector<BracketEntry> brackets;
  if (j.contains("brackets")) {
    const std::string bf = sub(field, "brackets");
    const Json& bs = array(j["brackets"], bf);
    for (std::size_t e = 0; e < bs.size(); ++e) {
      const std::string ef = sub(bf, e);
      BracketEntry b;
      b.i = count(require(bs[e], "i", ef), sub(ef, "i"));
      b.j = count(require(bs[e], "j", ef), sub(ef, "j"));
      if (b.i >= dim) bad(sub(ef, "i"), "index out of range");
      if (b.j >= dim) bad(sub(ef, "j"), "index out of range");
      const Json& cs = array(require(bs[e], "coeffs", ef), sub(ef, "coeffs"));
      if (cs.size() != dim) bad(sub(ef, "coeffs"), "expected " + std::to_string(dim) + " coefficients");
      for (std::size_t k = 0; k < dim; ++k) b.coeffs.push_back(rational_from_json(cs[k], sub(sub(ef, "coeffs"), k)));
      for (const BracketEntry& prev : brackets)
        if (prev.i == b.i && prev.j == b.j) bad(ef, "bracket given twice");
      brackets.push_back(std::move(b));
    }
  }
  std::optional<Matrix> d;
  if (j.contains("differential")) {
    d = matrix_from_json(j["differential"], sub(field, "differential"));
    if (d->rows() != dim || d->cols() != dim) bad(sub(field, "differential"), "expected a dim x dim matrix");
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    const Json& ns = array(j["names"], sub(field, "names"));
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (!ns[i].is_string()) bad(sub(sub(field, "names"), i), "expected a string");
      names.push_back(ns[i].get<std::string>());
    }
    if (names.size() != dim) bad(sub(field, "names"), "length differs from dim");
  }
  return guarded(field, [&] { return make_lie(degrees, weights, brackets, d, names); });
}

Json to_json(const DGLie& g) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const LieVector v = g.bracket(i, j);
      if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
      Json coeffs = Json::array();
      for (const Rational& c : v) coeffs.push_back(to_json(c));
      brackets.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  Json out{{"dim", g.dim()}, {"degrees", g.degrees()}, {"weights", g.weights()}, {"names", g.names()},
           {"brackets", brackets}};
  if (g.has_differential()) out["differential"] = to_json(g.differential());
  return out;
}

Polynomial polynomial_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) return guarded(field, [&] { return parse_polynomial(j.get<std::string>()); });
  if (!j.is_object()) bad(field, "expected a polynomial string or record");
  if (j.contains("polynomial")) {
    const Json& text = j["polynomial"];
    if (!text.is_string()) bad(sub(field, "polynomial"), "expected a string");
    std::vector<std::string> vars;
    if (j.contains("variables")) {
      const Json& vs = array(j["variables"], sub(field, "variables"));
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_string()) bad(sub(sub(field, "variables"), i), "expected a string");
        vars.push_back(vs[i].get<std::string>());
      }
    }
    return guarded(sub(field, "polynomial"), [&] { return parse_polynomial(text.get<std::string>(), vars); });
  }
  Polynomial f;
  const std::size_t n = count(require(j, "vars", field), sub(field, "vars"));
  for (std::size_t i = 0; i < n; ++i) f.variables.push_back("x" + std::to_string(i + 1));
  const std::string tf = sub(field, "terms");
  const Json& ts = array(require(j, "terms", field), tf);
  for (std::size_t t = 0; t < ts.size(); ++t) {
    const std::string ef = sub(tf, t);
    const Rational c = rational_from_json(require(ts[t], "coeff", ef), sub(ef, "coeff"));
    std::vector<int> exps = int_list(require(ts[t], "exponents", ef), sub(ef, "exponents"));
    if (exps.size() != n) bad(sub(ef, "exponents"), "expected " + std::to_string(n) + " exponents");
    for (int e : exps)
      if (e < 0) bad(sub(ef, "exponents"), "exponents must be nonnegative");
    if (f.terms.contains(exps)) bad(ef, "duplicate exponent vector");
    if (sgn(c) != 0) f.terms.emplace(std::move(exps), c);
  }
  return f;
}

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms) terms.push_back(Json{{"coeff", to_json(c)}, {"exponents", e}});
  return Json{{"polynomial", to_string(f)}, {"variables", f.variables}, {"vars", f.vars()}, {"terms", terms}};
}

DerivedQuotientInput derived_quotient_from_json(const Json& j, const std::string& field, std::size_t default_bound) {
  DGLie g = lie_from_json(require(j, "lie", field), sub(field, "lie"));
  const std::string af = sub(field, "algebra");
  const Json& alg = require(j, "algebra", field);
  const Json& gens = array(require(alg, "generators", af), sub(af, "generators"));
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gf = sub(sub(af, "generators"), i);
    const Json& name = require(gens[i], "name", gf);
    if (!name.is_string()) bad(sub(gf, "name"), "expected a string");
    names.push_back(name.get<std::string>());
    weights.push_back(gens[i].contains("weight") ? small_int(gens[i]["weight"], sub(gf, "weight")) : 1);
    if (gens[i].contains("degree") && small_int(gens[i]["degree"], sub(gf, "degree")) != 0)
      bad(sub(gf, "degree"), "algebra generators must have degree 0");
  }
  const std::size_t bound = alg.contains("bound") ? count(alg["bound"], sub(af, "bound")) : default_bound;
  GradedBasisAlgebra a = polynomial_algebra(names, weights, bound);

  std::vector<std::vector<Vec>> values(g.dim(), std::vector<Vec>(names.size()));
  const std::string xf = sub(field, "action");
  const Json& acts = array(require(j, "action", field), xf);
  for (std::size_t e = 0; e < acts.size(); ++e) {
    const std::string ef = sub(xf, e);
    const Json& el = require(acts[e], "element", ef);
    std::size_t i = 0;
    if (el.is_string()) {
      auto it = std::find(g.names().begin(), g.names().end(), el.get<std::string>());
      if (it == g.names().end()) bad(sub(ef, "element"), "unknown Lie algebra element");
      i = static_cast<std::size_t>(it - g.names().begin());
    } else {
      i = count(el, sub(ef, "element"));
      if (i >= g.dim()) bad(sub(ef, "element"), "index out of range");
    }
    const Json& gen = require(acts[e], "generator", ef);
    if (!gen.is_string()) bad(sub(ef, "generator"), "expected a generator name");
    auto git = std::find(names.begin(), names.end(), gen.get<std::string>());
    if (git == names.end()) bad(sub(ef, "generator"), "unknown generator");
    const std::size_t gi = static_cast<std::size_t>(git - names.begin());
    const Json& val = require(acts[e], "value", ef);
    if (!val.is_string()) bad(sub(ef, "value"), "expected a polynomial string");
    const Polynomial p = guarded(sub(ef, "value"), [&] { return parse_polynomial(val.get<std::string>(), names); });
    Vec v;
    for (const auto& [exps, c] : p.terms) {
      Word w;
      for (std::size_t k = 0; k < exps.size(); ++k) w.insert(w.end(), static_cast<std::size_t>(exps[k]), k);
      auto idx = a.index_of(w);
      if (!idx) bad(sub(ef, "value"), "term exceeds the truncation bound");
      add_term(v, *idx, c);
    }
    values[i][gi] = std::move(v);
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(derivation_from_generators(a, values[i]));
  return {std::move(g), std::move(a), std::move(action)};
}

KoszulInput koszul_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object");
  KoszulInput in;
  if (j.contains("P")) {
    in.p = object_from_json(j["P"], sub(field, "P"));
  } else {
    in.p = FiltObject(int_list(require(j, "weights", field), sub(field, "weights")));
  }
  if (in.p.dim() > 8) bad(field, "rank too large");
  if (j.contains("m")) {
    const std::string mf = sub(field, "m");
    const Json& ms = array(j["m"], mf);
    if (ms.size() != in.p.dim()) bad(mf, "expected one coordinate per basis vector of P");
    std::vector<Rational> m;
    for (std::size_t i = 0; i < ms.size(); ++i) m.push_back(rational_from_json(ms[i], sub(mf, i)));
    in.m = std::move(m);
  }
  return in;
}

}  // namespace qahom::io
