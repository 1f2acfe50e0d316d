#include <stdexcept>

#include "helpers.hpp"
#include "qahom/matrix.hpp"
#include "qahom/verify/oracles.hpp"
#include "qahom/verify/random.hpp"

using namespace qahom;
using namespace qahom::verify;

TEST_CASE("rationals serialize as p/q and parse both forms") {
  CHECK(to_string(q("3/6")) == "1/2");
  CHECK(to_string(q("-4")) == "-4/1");
  CHECK(to_string(q("0")) == "0/1");
  CHECK(q("+2/4") == q("1/2"));
  CHECK(q("-6/4") == q("-3/2"));
  CHECK_THROWS_AS(q("-6/-4"), std::invalid_argument);
  CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q("abc"), std::invalid_argument);
  CHECK_THROWS_AS(q(""), std::invalid_argument);
  CHECK_THROWS_AS(q("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(q("1/"), std::invalid_argument);
}

TEST_CASE("rank and kernel agree with the oracle") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = rng.index(5), c = rng.index(5);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational(0.5);
    const std::size_t rk = rank(m);
    CHECK(rk == oracle_rank(m));
    const Matrix k = kernel_basis(m);
    CHECK(k.cols() == c - rk);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("identity and small hand examples") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix(0, 3)) == 0);
  const Matrix k = kernel_basis(Matrix{{1, 2}, {2, 4}});
  REQUIRE(k.cols() == 1);
  CHECK((Matrix{{1, 2}} * k).is_zero());
}

TEST_CASE("solve_affine: consistent and inconsistent systems") {
  const Matrix a{{1, 1}, {0, 1}};
  const AffineSolution s = solve_affine(a, Matrix{{3}, {1}});
  REQUIRE(s.particular);
  CHECK(a * *s.particular == Matrix{{3}, {1}});
  CHECK(s.kernel.cols() == 0);

  const Matrix b{{1, 1}, {2, 2}};
  CHECK_FALSE(solve_affine(b, Matrix{{1}, {3}}).particular);
  const AffineSolution t = solve_affine(b, Matrix{{1}, {2}});
  REQUIRE(t.particular);
  CHECK(t.kernel.cols() == 1);
  CHECK_THROWS_AS(solve_affine(b, Matrix{{1}}), std::invalid_argument);
}

TEST_CASE("inverse") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_invertible(rng, 1 + rng.index(4));
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(m.rows()));
  }
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST_CASE("row_reduce with a pivot order") {
  const Matrix m{{1, 1, 0}, {0, 1, 1}};
  const std::vector<std::size_t> order{2, 1, 0};
  const Echelon e = row_reduce(m, order);
  CHECK(e.pivots == std::vector<std::size_t>{2, 1});
  CHECK(row_reduce(m).pivots == std::vector<std::size_t>{0, 1});
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(row_reduce(m, bad), std::invalid_argument);
}

TEST_CASE("stacking and kronecker shapes") {
  const Matrix a{{1, 2}}, b{{3, 4}};
  CHECK(vstack(a, b) == Matrix{{1, 2}, {3, 4}});
  CHECK(hstack(a, b) == Matrix{{1, 2, 3, 4}});
  CHECK(block_diagonal(a, b).rows() == 2);
  CHECK(block_diagonal(a, b).cols() == 4);
  const Matrix k = kronecker(Matrix{{1, 2}}, Matrix{{0, 1}, {1, 0}});
  CHECK(k == Matrix{{0, 1, 0, 2}, {1, 0, 2, 0}});
}

TEST_CASE("SpanTracker") {
  SpanTracker s(3);
  CHECK(s.add({1, 0, 0}));
  CHECK(s.add({1, 1, 0}));
  CHECK_FALSE(s.add({2, 1, 0}));
  CHECK(s.contains({0, 5, 0}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  CHECK(s.size() == 2);
}
