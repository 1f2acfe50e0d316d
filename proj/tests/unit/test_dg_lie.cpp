#include "helpers.hpp"
#include "qahom/error.hpp"
#include "qahom/koszul.hpp"
#include "qahom/lie.hpp"
#include "qahom/verify/oracles.hpp"

using namespace qahom;
using namespace qahom::verify;

namespace {

DGLie lib(const std::string& name) {
  const auto g = lie_library(name);
  REQUIRE(g);
  return *g;
}

std::vector<bool> parities(const DGLie& g) {
  std::vector<bool> odd;
  for (int d : g.degrees()) odd.push_back(d % 2 != 0);
  return odd;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("library algebras satisfy the axioms") {
  for (const std::string& name : lie_library_names()) {
    INFO(name);
    const AxiomReport rep = check_lie_axioms(lib(name));
    CHECK(rep.passed);
    CHECK(rep.checks > 0);
  }
  CHECK_FALSE(lie_library("abelian5"));
  CHECK_FALSE(lie_library("nope"));
  CHECK(lib("abelian3").is_abelian());
  CHECK_FALSE(lib("sl2").is_abelian());
}

TEST_CASE("sl2 brackets") {
  const DGLie g = lib("sl2");
  CHECK(g.bracket(0, 1) == LieVector{0, 2, 0});
  CHECK(g.bracket(1, 0) == LieVector{0, -2, 0});
  CHECK(g.bracket(1, 2) == LieVector{1, 0, 0});
  CHECK(g.bracket(2, 2) == LieVector{0, 0, 0});
}

TEST_CASE("a corrupted structure constant is located") {
  DGLie g = lib("sl2");
  g.set_constant(0, 1, 1, 3);
  g.set_constant(1, 0, 1, -3);
  const AxiomReport rep = check_lie_axioms(g);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(contains(rep.violations.front(), "Jacobi fails at"));
  CHECK_THROWS_AS(require_lie_axioms(g), InvariantError);

  DGLie h = lib("heisenberg");
  h.set_constant(0, 1, 2, 5);  // [y, x] still -1
  const AxiomReport a = check_lie_axioms(h);
  CHECK_FALSE(a.passed);
  CHECK(contains(a.violations.front(), "antisymmetry fails at (x, y)"));
}

TEST_CASE("inhomogeneous brackets are rejected") {
  // [x, y] = x would change the weight.
  CHECK_THROWS_AS(make_lie({0, 0}, {1, 1}, {{0, 1, {1, 0}}}), InvariantError);
  CHECK_THROWS(make_lie({0}, {1}, {{0, 0, {1, 1}}}));
}

TEST_CASE("odd generators: [theta, theta] = z is symmetric") {
  const DGLie g = lib("odd");
  CHECK(g.bracket(0, 0) == LieVector{0, 1});
  CHECK(check_lie_axioms(g).passed);
}

TEST_CASE("cone of a dg-Lie algebra satisfies the axioms and is acyclic") {
  for (const std::string& name : lie_library_names()) {
    INFO(name);
    const DGLie c = cone_lie(lib(name));
    CHECK(c.dim() == 2 * lib(name).dim());
    CHECK(check_lie_axioms(c).passed);
    const Complex u = underlying_complex(c);
    CHECK(is_acyclic(u));
    CHECK(oracle_acyclic(u));
  }
  // A cone of a cone is still a dg-Lie algebra.
  CHECK(check_lie_axioms(cone_lie(cone_lie(lib("solvable2")))).passed);
}

TEST_CASE("UEA of solvable2: y x = x y - y") {
  const UEA u(lib("solvable2"), 3);
  const UEAElement nf = u.normal_form(Word{1, 0});
  CHECK(nf == UEAElement{{Word{0, 1}, Rational(1)}, {Word{1}, Rational(-1)}});
  CHECK(u.is_normal(Word{0, 0, 1}));
  CHECK_FALSE(u.is_normal(Word{1, 0}));
  CHECK_THROWS_AS(u.normal_form(Word{0, 0, 0, 0}), std::invalid_argument);
  // Associativity on a few words.
  const UEAElement x{{Word{0}, Rational(1)}}, y{{Word{1}, Rational(1)}};
  CHECK(u.multiply(u.multiply(y, x), y) == u.multiply(y, u.multiply(x, y)));
}

TEST_CASE("UEA of a one-dimensional algebra is a polynomial ring") {
  const UEA u(abelian_lie(1), 5);
  CHECK(u.normal_form_counts() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("PBW: sl2 matches C(n+2, 2)") {
  const PbwReport rep = pbw_check(lib("sl2"), 6);
  CHECK(rep.passed);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(rep.sym_dims[n] == binom(n + 2, 2));
    CHECK(rep.gr_dims[n] == binom(n + 2, 2));
    CHECK(rep.normal_form_dims[n] == binom(n + 2, 2));
  }
}

TEST_CASE("PBW against the Sym counting oracle, including odd generators") {
  for (const std::string& name : lie_library_names()) {
    INFO(name);
    const DGLie g = lib(name);
    const PbwReport rep = pbw_check(g, 5);
    CHECK(rep.passed);
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(rep.gr_dims[n] == oracle_sym_dim(parities(g), n));
      CHECK(rep.normal_form_dims[n] == oracle_sym_dim(parities(g), n));
    }
  }
}

TEST_CASE("Chevalley-Eilenberg resolution: abelian and Heisenberg, weighted") {
  for (const std::string& name : {"abelian1", "abelian2", "abelian3", "heisenberg"}) {
    INFO(name);
    const CEResolution res = ce_resolution(lib(name), 4);
    CHECK(res.weighted);
    const CEReport rep = verify_ce_acyclicity(res, 4);
    CHECK(rep.passed);
    for (const CEPieceReport& p : rep.pieces) {
      if (p.index == 0) CHECK(p.cohomology == std::map<int, std::size_t>{{0, 1}});
      else CHECK(p.cohomology.empty());
      for (const auto& [n, d] : oracle_cohomology_dims(res.pieces[p.index].complex))
        CHECK(d == (p.index == 0 && n == 0 ? 1u : 0u));
    }
  }
}

TEST_CASE("Chevalley-Eilenberg resolution: sl2 by length cutoffs") {
  const CEResolution res = ce_resolution(lib("sl2"), 3);
  CHECK_FALSE(res.weighted);
  const CEReport rep = verify_ce_acyclicity(res, 3);
  CHECK(rep.passed);
  for (const CEPieceReport& p : rep.pieces) {
    CHECK(p.cohomology == std::map<int, std::size_t>{{0, 1}});
    CHECK(p.augmentation_ok);
  }
}

TEST_CASE("Chevalley-Eilenberg needs g in degree 0") {
  CHECK_THROWS_AS(ce_resolution(lib("odd"), 2), std::invalid_argument);
}

TEST_CASE("for abelian g the CE pieces have the Koszul layer dimensions") {
  for (std::size_t r = 1; r <= 3; ++r) {
    const CEResolution res = ce_resolution(abelian_lie(r), 4);
    const KoszulData k = fancy_koszul(FiltObject::trivial(r), 4);
    for (std::size_t w = 0; w <= 4; ++w) {
      const Complex& a = res.pieces[w].complex;
      const Complex& b = k.strands[w].complex;
      for (int n = -4; n <= 0; ++n) CHECK(a.object(n).dim() == b.object(n).dim());
    }
  }
}

TEST_CASE("augmentation of the weight-0 piece") {
  const CEResolution res = ce_resolution(lib("heisenberg"), 2);
  const ChainMap aug = ce_augmentation(res.pieces[0]);
  CHECK(is_iso(induced_on_cohomology(aug, 0)));
  CHECK(is_reduced_qiso(aug));
}

namespace {


std::size_t total(const DerivedQuotientPiece& p) {
  std::size_t s = 0;
  for (const auto& [n, d] : p.cohomology) s += d;
  return s;
}

}  // namespace

TEST_CASE("derived quotient: d/dt on Q[t]") {
  const DGLie g = make_lie({0}, {-1}, {}, std::nullopt, {"D"});
  const GradedBasisAlgebra a = polynomial_algebra({"t"}, {1}, 6);
  const Matrix d = derivation_from_generators(a, {Vec{{a.unit(), Rational(1)}}});
  const DerivedQuotient dq = derived_quotient(g, a, {d});
  REQUIRE_FALSE(dq.pieces.empty());
  for (const DerivedQuotientPiece& p : dq.pieces) {
    INFO(p.weight);
    if (p.weight == 0) CHECK(p.cohomology == std::map<int, std::size_t>{{0, 1}});
    else CHECK(total(p) == 0);
    for (const auto& [n, dim] : oracle_cohomology_dims(p.complex)) CHECK(dim == (p.weight == 0 && n == 0 ? 1u : 0u));
  }
}

TEST_CASE("derived quotient: Euler field on Q[t]") {
  const DGLie g = make_lie({0}, {0}, {}, std::nullopt, {"E"});
  const GradedBasisAlgebra a = polynomial_algebra({"t"}, {1}, 6);
  const Matrix e = derivation_from_generators(a, {Vec{{a.generator_index(0), Rational(1)}}});
  const DerivedQuotient dq = derived_quotient(g, a, {e});
  for (const DerivedQuotientPiece& p : dq.pieces) {
    INFO(p.weight);
    if (p.weight == 0) CHECK(p.cohomology == std::map<int, std::size_t>{{0, 1}, {1, 1}});
    else CHECK(total(p) == 0);
  }
}

TEST_CASE("derived quotient: trivial action gives A (x) /\\g'") {
  const DGLie g = abelian_lie(2, 0);
  const GradedBasisAlgebra a = polynomial_algebra({"s", "t"}, {1, 1}, 4);
  const Matrix zero(a.dim(), a.dim());
  const DerivedQuotient dq = derived_quotient(g, a, {zero, zero});
  for (const DerivedQuotientPiece& p : dq.pieces) {
    INFO(p.weight);
    const std::size_t aw = static_cast<std::size_t>(p.weight) + 1;  // monomials of degree w in two variables
    const std::map<int, std::size_t> want{{0, aw}, {1, 2 * aw}, {2, aw}};
    CHECK(p.cohomology == want);
  }
}

TEST_CASE("derived quotient rejects bad actions") {
  const GradedBasisAlgebra a = polynomial_algebra({"t"}, {1}, 4);
  const DGLie g = make_lie({0}, {-1}, {}, std::nullopt, {"D"});
  Matrix d = derivation_from_generators(a, {Vec{{a.unit(), Rational(1)}}});
  // D(t^2) = 3t is not 2t.
  const std::size_t t = a.generator_index(0), t2 = *a.index_of(Word{0, 0});
  d(t, t2) = 3;
  CHECK_THROWS_AS(derived_quotient(g, a, {d}), InvariantError);

  // D(t) = t has weight 1, not 1 - 1.
  const Matrix wrong = derivation_from_generators(a, {Vec{{t, Rational(1)}}});
  CHECK_THROWS_AS(derived_quotient(g, a, {wrong}), InvariantError);

  // Abelian g acting by s d/dt and t d/ds: not a representation.
  const GradedBasisAlgebra b = polynomial_algebra({"s", "t"}, {1, 1}, 4);
  const std::size_t s = b.generator_index(0), u = b.generator_index(1);
  const Matrix d0 = derivation_from_generators(b, {Vec{}, Vec{{s, Rational(1)}}});
  const Matrix d1 = derivation_from_generators(b, {Vec{{u, Rational(1)}}, Vec{}});
  try {
    derived_quotient(abelian_lie(2, 0), b, {d0, d1});
    FAIL("accepted");
  } catch (const InvariantError& e) {
    CHECK(contains(e.what(), "not a representation"));
  }
  CHECK_THROWS_AS(derived_quotient(lib("odd"), b, {d0, d1}), std::invalid_argument);
}
