#include <filesystem>

#include "helpers.hpp"
#include "qahom/error.hpp"
#include "qahom/io.hpp"
#include "qahom/verify/random.hpp"

using namespace qahom;
using namespace qahom::io;
using namespace qahom::verify;

namespace {

std::string fixture(const std::string& name) { return std::string(QAHOM_FIXTURES_DIR) + "/" + name; }

template <typename F>
std::string input_error(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("rationals are strings p/q") {
  CHECK(to_json(q("-2/4")) == Json("-1/2"));
  CHECK(to_json(q("3")) == Json("3/1"));
  CHECK(rational_from_json(Json("5"), "x") == 5);
  CHECK(rational_from_json(Json(7), "x") == 7);
  CHECK(contains(input_error([] { rational_from_json(Json("1/0"), "a.b"); }), "field 'a.b'"));
  CHECK(contains(input_error([] { rational_from_json(Json(0.5), "c"); }), "field 'c'"));
}

TEST_CASE("round trips") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    const Complex x = random_complex(rng, -1, 2, 3);
    CHECK(complex_from_json(to_json(x), "x").objects() == x.objects());
    const Complex y = complex_from_json(to_json(x), "x");
    for (int n = -2; n <= 3; ++n) CHECK(y.differential_matrix(n) == x.differential_matrix(n));
    const FiltObject v = random_object(rng, 0, 3), w = random_object(rng, 0, 3);
    const FiltMorphism f = random_morphism(rng, v, w);
    CHECK(morphism_from_json(to_json(f), "f") == f);
    CHECK(object_from_json(to_json(v), "v") == v);
    const ChainMap id = ChainMap::identity(x);
    const ChainMap back = chain_map_from_json(to_json(id), "g");
    for (int n : x.support()) CHECK(back.component_matrix(n) == id.component_matrix(n));
  }
  for (const std::string& name : lie_library_names()) {
    const DGLie g = *lie_library(name);
    const DGLie back = lie_from_json(to_json(g), "lie");
    CHECK(back.constants() == g.constants());
    CHECK(back.degrees() == g.degrees());
    CHECK(back.weights() == g.weights());
    CHECK(back.names() == g.names());
  }
  const Polynomial f = parse_polynomial("x^3 - 1/2 x y + 4");
  CHECK(polynomial_from_json(to_json(f), "f") == f);
}

TEST_CASE("malformed input names the offending field") {
  CHECK(contains(input_error([] { matrix_from_json(Json::parse(R"([["1","2"],["3"]])"), "m"); }), "field 'm[1]'"));
  CHECK(contains(input_error([] { object_from_json(Json::parse(R"({"dim": 2, "weights": [0]})"), "P"); }),
                 "field 'P.weights'"));
  CHECK(contains(input_error([] {
                   complex_from_json(Json::parse(R"({"objects": {"zero": {"weights": [0]}}})"), "X");
                 }),
                 "X.objects.zero"));
  CHECK(contains(input_error([] {
                   morphism_from_json(
                       Json::parse(R"({"source": {"weights": [0]}, "target": {"weights": [0]}, "matrix": [["1","1"]]})"),
                       "f");
                 }),
                 "field 'f.matrix'"));
  CHECK(contains(input_error([] { lie_from_json(Json::parse(R"({"library": "gl3"})"), "lie"); }), "unknown Lie algebra"));
  CHECK(contains(input_error([] {
                   lie_from_json(Json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 5, "coeffs": ["0","0"]}]})"), "lie");
                 }),
                 "field 'lie.brackets[0].j'"));
  CHECK(contains(input_error([] { polynomial_from_json(Json(3), "f"); }), "field 'f'"));
  CHECK(contains(input_error([] { polynomial_from_json(Json("x +"), "f"); }), "position"));
  CHECK(contains(input_error([] { parse_file(fixture("does_not_exist.json")); }), "cannot read"));
}

TEST_CASE("invariant violations stay invariant errors") {
  // d^2 != 0 is a verification failure, not an input error.
  const Json j = Json::parse(
      R"({"objects": {"0": {"weights": [0]}, "1": {"weights": [0]}, "2": {"weights": [0]}},
          "differentials": {"0": [["1"]], "1": [["1"]]}})");
  CHECK_THROWS_AS(complex_from_json(j, "X"), InvariantError);
}

TEST_CASE("polynomial forms") {
  const Polynomial a = polynomial_from_json(Json("x^2 + y"), "f");
  const Polynomial b = polynomial_from_json(Json::parse(R"({"polynomial": "x^2 + y", "variables": ["x", "y"]})"), "f");
  const Polynomial c = polynomial_from_json(
      Json::parse(R"({"vars": 2, "terms": [{"coeff": "1", "exponents": [2, 0]}, {"coeff": "1", "exponents": [0, 1]}]})"),
      "f");
  CHECK(a == b);
  CHECK(a.terms == c.terms);
  CHECK(contains(input_error([] {
                   polynomial_from_json(Json::parse(R"({"vars": 1, "terms": [{"coeff": "1", "exponents": [-1]}]})"), "f");
                 }),
                 "nonnegative"));
}

TEST_CASE("fixtures load") {
  for (const auto& entry : std::filesystem::directory_iterator(QAHOM_FIXTURES_DIR)) {
    INFO(entry.path().string());
    CHECK_NOTHROW(parse_file(entry.path().string()));
  }
  const LiftingSquare sq = square_from_json(parse_file(fixture("lift_square.json")), "");
  CHECK_NOTHROW(validate(sq));
  const KoszulInput k = koszul_from_json(parse_file(fixture("koszul_m.json")), "");
  REQUIRE(k.m);
  CHECK(k.m->at(1) == q("2/3"));
  const DerivedQuotientInput dq = derived_quotient_from_json(parse_file(fixture("derived_ddt.json")), "", 6);
  CHECK(dq.lie.dim() == 1);
  CHECK(dq.action.size() == 1);
}

TEST_CASE("derived quotient input errors") {
  const Json base = parse_file(fixture("derived_euler.json"));
  Json j = base;
  j["action"][0]["generator"] = "s";
  CHECK(contains(input_error([&] { derived_quotient_from_json(j, "", 6); }), "field 'action[0].generator'"));
  j = base;
  j["action"][0]["element"] = "F";
  CHECK(contains(input_error([&] { derived_quotient_from_json(j, "", 6); }), "action[0].element"));
  j = base;
  j["action"][0]["value"] = "t^9";
  CHECK(contains(input_error([&] { derived_quotient_from_json(j, "", 6); }), "truncation bound"));
  j = base;
  j["algebra"]["generators"][0]["degree"] = 1;
  CHECK(contains(input_error([&] { derived_quotient_from_json(j, "", 6); }), "degree 0"));
}
