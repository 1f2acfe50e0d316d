#include "helpers.hpp"
#include "qahom/error.hpp"
#include "qahom/filtered.hpp"
#include "qahom/verify/oracles.hpp"
#include "qahom/verify/random.hpp"

using namespace qahom;
using namespace qahom::verify;

TEST_CASE("morphisms must respect the filtration") {
  CHECK_THROWS_AS(FiltMorphism(FiltObject({0}), FiltObject({1}), Matrix{{1}}), InvariantError);
  CHECK_NOTHROW(FiltMorphism(FiltObject({1}), FiltObject({0}), Matrix{{1}}));
  CHECK_NOTHROW(FiltMorphism(FiltObject({0}), FiltObject({1}), Matrix{{0}}));
}

TEST_CASE("filtration-shift identity: mono, epi, not strict") {
  const FiltMorphism f(FiltObject({1}), FiltObject({0}), Matrix{{1}});
  CHECK(f.is_mono());
  CHECK(f.is_epi());
  CHECK_FALSE(is_strict(f));
  CHECK_FALSE(is_strict_mono(f));
  CHECK_FALSE(is_strict_epi(f));
  CHECK_FALSE(is_iso(f));
  CHECK_FALSE(oracle_is_strict(f.source(), f.target(), f.matrix()));
  CHECK(is_iso(FiltMorphism::identity(FiltObject({1, -2}))));
}

TEST_CASE("induced and quotient filtrations") {
  const FiltObject v({0, 1});
  const SubObject s = subspace(v, Matrix{{1}, {1}});
  CHECK(s.object.weights() == std::vector<int>{1});
  const SubObject s0 = subspace(v, Matrix{{1}, {0}});
  CHECK(s0.object.weights() == std::vector<int>{0});
  const QuotientObject qo = quotient(v, Matrix{{1}, {1}});
  CHECK(qo.object.weights() == std::vector<int>{0});
  CHECK(qo.projection * qo.section == Matrix::identity(1));
  const QuotientObject q1 = quotient(v, Matrix{{1}, {0}});
  CHECK(q1.object.weights() == std::vector<int>{1});
}

TEST_CASE("filtration dims and profile") {
  const FiltObject v({2, -1, 0, 2});
  CHECK(v.filtration_dim(-2) == 0);
  CHECK(v.filtration_dim(0) == 2);
  CHECK(v.filtration_dim(5) == 4);
  CHECK(v.weight_profile() == std::vector<int>{-1, 0, 2, 2});
}

TEST_CASE("strictness agrees with the oracle; abelian case always strict") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const FiltObject v = random_object(rng, 0, 4), w = random_object(rng, 0, 4);
    const FiltMorphism f = random_morphism(rng, v, w);
    CHECK(is_strict(f) == oracle_is_strict(v, w, f.matrix()));
    const FiltMorphism g = random_morphism(rng, FiltObject::trivial(v.dim()), FiltObject::trivial(w.dim()));
    CHECK(is_strict(g));
  }
}

TEST_CASE("kernel, cokernel, image, coimage") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const FiltObject v = random_object(rng, 0, 4), w = random_object(rng, 0, 4);
    const FiltMorphism f = random_morphism(rng, v, w);
    const std::size_t rk = oracle_rank(f.matrix());
    const KernelResult k = kernel(f);
    CHECK(k.object.dim() == v.dim() - rk);
    CHECK(compose(f, k.inclusion).matrix().is_zero());
    CHECK(oracle_is_strict_mono(k.object, v, k.inclusion.matrix()));
    const CokernelResult c = cokernel(f);
    CHECK(c.object.dim() == w.dim() - rk);
    CHECK(compose(c.projection, f).matrix().is_zero());
    CHECK(oracle_is_strict_epi(w, c.object, c.projection.matrix()));
    const KernelResult im = image(f);
    const CokernelResult coim = coimage(f);
    CHECK(im.object.dim() == rk);
    CHECK(coim.object.dim() == rk);
    // Coim -> Im is bijective; an iso exactly when f is strict.
    const FiltMorphism u = coimage_to_image(f);
    CHECK(oracle_rank(u.matrix()) == rk);
    CHECK(is_iso(u) == is_strict(f));
  }
}

TEST_CASE("factorizations recompose") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const FiltObject v = random_object(rng, 0, 4), w = random_object(rng, 0, 4);
    const FiltMorphism f = random_morphism(rng, v, w);
    const FactoredMorphism a = factor(f);
    CHECK(compose(a.mono, a.strict_epi) == f);
    CHECK(a.mono.is_mono());
    CHECK(is_strict_epi(a.strict_epi));
    const ImageFactorization b = factor_through_image(f);
    CHECK(compose(b.strict_mono, b.epi) == f);
    CHECK(b.epi.is_epi());
    CHECK(is_strict_mono(b.strict_mono));
  }
}

TEST_CASE("pushout and pullback squares commute with the expected dimensions") {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const FiltObject x = random_object(rng, 0, 3), y = random_object(rng, 0, 3), z = random_object(rng, 0, 3);
    const FiltMorphism f = random_morphism(rng, x, y), g = random_morphism(rng, x, z);
    const Pushout po = pushout(f, g);
    CHECK(compose(po.from_first, f) == compose(po.from_second, g));
    CHECK(po.object.dim() == y.dim() + z.dim() - oracle_rank(vstack(f.matrix(), -g.matrix())));
    const FiltMorphism h = random_morphism(rng, y, x), k = random_morphism(rng, z, x);
    const Pullback pb = pullback(h, k);
    CHECK(compose(h, pb.to_first) == compose(k, pb.to_second));
    CHECK(pb.object.dim() == y.dim() + z.dim() - oracle_rank(hstack(h.matrix(), -k.matrix())));
  }
  CHECK_THROWS_AS(pushout(FiltMorphism::identity(FiltObject({0})), FiltMorphism::identity(FiltObject({0, 0}))),
                  std::invalid_argument);
}

TEST_CASE("sums, tensor and dual") {
  const FiltObject v({0, 1}), w({-1, 2});
  CHECK(direct_sum(v, w).weights() == std::vector<int>{0, 1, -1, 2});
  CHECK(tensor(v, w).weights() == std::vector<int>{-1, 2, 0, 3});
  CHECK(dual(v).weights() == std::vector<int>{0, -1});
  Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    const FiltObject a = random_object(rng, 0, 3), b = random_object(rng, 0, 3);
    const FiltMorphism f = random_morphism(rng, a, b);
    CHECK(dual(dual(f)) == f);
    const FiltMorphism g = random_morphism(rng, b, a);
    CHECK(compose(copair(FiltMorphism::identity(b), FiltMorphism::identity(b)), pair(f, f)) ==
          FiltMorphism(a, b, f.matrix() * Rational(2)));
    CHECK(oracle_rank(tensor(f, g).matrix()) == oracle_rank(f.matrix()) * oracle_rank(g.matrix()));
    CHECK(compose(sum_projection_first(a, b), sum_inclusion_first(a, b)) == FiltMorphism::identity(a));
    CHECK(compose(sum_projection_second(a, b), sum_inclusion_first(a, b)).matrix().is_zero());
  }
}

TEST_CASE("strict monos compose") {
  Rng rng(26);
  for (int t = 0; t < 100; ++t) {
    const FiltObject c = random_object(rng, 0, 4);
    const FiltMorphism g = random_strict_mono(rng, c);
    const FiltMorphism f = random_strict_mono(rng, g.source());
    CHECK(is_strict_mono(compose(g, f)));
  }
}
