#include "helpers.hpp"
#include "qahom/algebra.hpp"
#include "qahom/error.hpp"
#include "qahom/verify/oracles.hpp"

using namespace qahom;
using namespace qahom::verify;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Complex degree_zero(std::size_t r) { return Complex::concentrated(FiltObject::trivial(r), 0); }

}  // namespace

TEST_CASE("tensor algebra with bound 0 is the unit algebra") {
  // "M^0 is R in degree 0 by convention"
  const GradedBasisAlgebra t = tensor_algebra(degree_zero(3), 0);
  CHECK(t.dim() == 1);
  CHECK(t.degree(t.unit()) == 0);
}

TEST_CASE("one generator in degree 0: 1, x, x^2, x^3") {
  for (const auto& a : {tensor_algebra(degree_zero(1), 3), symmetric_algebra(degree_zero(1), 3)}) {
    CHECK(a.dims_by_length() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(a.word(3) == Word{0, 0, 0});
  }
}

TEST_CASE("tensor algebra: (dim M)^n words of length n") {
  for (std::size_t r = 1; r <= 3; ++r) {
    const auto dims = tensor_algebra(degree_zero(r), 4).dims_by_length();
    std::size_t p = 1;
    for (std::size_t n = 0; n <= 4; ++n, p *= r) CHECK(dims[n] == p);
  }
}

TEST_CASE("exterior algebra of an r-dim degree-0 space") {
  for (std::size_t r = 0; r <= 4; ++r) {
    const GradedBasisAlgebra e = exterior_algebra(degree_zero(r), 6);
    CHECK(e.dim() == (std::size_t{1} << r));
    const auto dims = e.dims_by_length();
    for (std::size_t k = 0; k < dims.size(); ++k) CHECK(dims[k] == binom(r, k));
    for (std::size_t i = 0; i < e.dim(); ++i) CHECK(e.degree(i) == -static_cast<int>(e.length(i)));
    CHECK(check_dga_axioms(e).passed);
  }
}

TEST_CASE("Sym(g[1]) has the dimensions of the exterior algebra") {
  for (std::size_t r = 1; r <= 4; ++r) {
    const Complex shifted = Complex::concentrated(FiltObject::trivial(r), -1);
    const auto a = symmetric_algebra(shifted, 6).dims_by_length();
    const auto b = exterior_algebra(degree_zero(r), 6).dims_by_length();
    for (std::size_t k = 0; k < 7; ++k) CHECK((k < a.size() ? a[k] : 0) == (k < b.size() ? b[k] : 0));
  }
}

TEST_CASE("symmetric algebra dims follow the Sym counting oracle") {
  const Complex m({{0, FiltObject({0, 1})}, {1, FiltObject({0})}});
  const auto dims = symmetric_algebra(m, 5).dims_by_length();
  for (std::size_t n = 0; n <= 5; ++n) CHECK(dims[n] == oracle_sym_dim({false, false, true}, n));
}

TEST_CASE("Sym(M (+) M') matches Sym(M) (x) Sym(M') per degree and weight") {
  const Complex m({{0, FiltObject({1})}, {-1, FiltObject({2})}});
  const Complex m2({{0, FiltObject({0, 3})}});
  const std::size_t n = 4;
  const auto whole = symmetric_algebra(direct_sum(m, m2), n);
  const auto a = symmetric_algebra(m, n), b = symmetric_algebra(m2, n);
  std::map<std::pair<int, int>, std::size_t> conv;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (a.length(i) + b.length(j) <= n) conv[{a.degree(i) + b.degree(j), a.weight(i) + b.weight(j)}] += 1;
  CHECK(whole.graded_dims() == conv);
}

TEST_CASE("Koszul signs for odd generators") {
  const GradedBasisAlgebra e = exterior_algebra(degree_zero(2), 2);
  const Vec v = e.normalize({1, 0});
  REQUIRE(v.size() == 1);
  CHECK(e.word(v.begin()->first) == Word{0, 1});
  CHECK(v.begin()->second == -1);
  CHECK(e.normalize({0, 0}).empty());
}

TEST_CASE("dga axioms: polynomial algebra and a single odd generator pass") {
  CHECK(check_dga_axioms(polynomial_algebra({"x", "y"}, {1, 1}, 4)).passed);
  const GradedBasisAlgebra theta = exterior_algebra(degree_zero(1), 3);
  CHECK(theta.dim() == 2);
  CHECK(check_dga_axioms(theta).passed);
}

TEST_CASE("differential extended as a derivation") {
  // M = (Q -1-> Q) in degrees -1, 0: Sym M has d(a) = b.
  const Complex m({{-1, FiltObject({0})}, {0, FiltObject({0})}}, {{-1, Matrix{{1}}}});
  const GradedBasisAlgebra s = symmetric_algebra(m, 4);
  CHECK(s.has_differential());
  const AxiomReport rep = check_dga_axioms(s);
  CHECK(rep.passed);
  CHECK(rep.checks > 0);
  const GradedBasisAlgebra t = tensor_algebra(m, 3);
  CHECK(check_dga_axioms(t).passed);
  const GradedBasisAlgebra e = exterior_algebra(m, 3);
  CHECK(check_dga_axioms(e).passed);
}

TEST_CASE("generator differential of the wrong degree is rejected") {
  GradedBasisAlgebra a = polynomial_algebra({"x"}, {1}, 3);
  CHECK_THROWS_AS(a.set_generator_differential(0, Vec{{a.generator_index(0), Rational(1)}}), InvariantError);
}

TEST_CASE("corrupted tables are located") {
  GradedBasisAlgebra a = polynomial_algebra({"x", "y"}, {1, 1}, 3);
  const std::size_t x = a.generator_index(0), y = a.generator_index(1);
  a.set_product(x, y, Vec{{*a.index_of(Word{0, 0}), Rational(1)}});
  const AxiomReport rep = check_dga_axioms(a);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.failures >= 1);

  const Complex m({{-1, FiltObject({0})}, {0, FiltObject({0})}}, {{-1, Matrix{{1}}}});
  GradedBasisAlgebra s = symmetric_algebra(m, 3);
  // d(a) = b is fine; a d that does not square to zero is caught.
  s.set_differential_value(s.generator_index(1), Vec{{s.generator_index(0), Rational(1)}});
  CHECK_FALSE(check_dga_axioms(s).passed);
}
