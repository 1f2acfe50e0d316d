#include "qahom/verify/random.hpp"

#include <algorithm>

namespace qahom::verify {

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

std::size_t Rng::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

bool Rng::chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p; }

Rational Rng::rational(double zero_chance) {
  if (chance(zero_chance)) return 0;
  int p = 0;
  while (p == 0) p = uniform(-3, 3);
  return parse_rational(std::to_string(p) + "/" + std::to_string(uniform(1, 3)));
}

FiltObject random_object(Rng& rng, std::size_t min_dim, std::size_t max_dim, int wmin, int wmax) {
  const std::size_t n = min_dim + rng.index(max_dim - min_dim + 1);
  std::vector<int> w(n);
  for (int& x : w) x = rng.uniform(wmin, wmax);
  return FiltObject(std::move(w));
}

Matrix random_filtered_matrix(Rng& rng, const FiltObject& source, const FiltObject& target, double zero_chance) {
  Matrix m(target.dim(), source.dim());
  for (std::size_t i = 0; i < target.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j)
      if (target.weight(i) <= source.weight(j)) m(i, j) = rng.rational(zero_chance);
  return m;
}

FiltMorphism random_morphism(Rng& rng, const FiltObject& source, const FiltObject& target, double zero_chance) {
  return FiltMorphism(source, target, random_filtered_matrix(rng, source, target, zero_chance));
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix m(n, n);
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j) m(i, j) = rng.rational(0.4);
    if (rank(m) == n) return m;
  }
}

namespace {

Matrix random_columns(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(0.4);
  return m;
}

}  // namespace

FiltMorphism random_strict_mono(Rng& rng, const FiltObject& ambient) {
  const std::size_t k = ambient.dim() == 0 ? 0 : rng.index(ambient.dim() + 1);
  const SubObject s = subspace(ambient, random_columns(rng, ambient.dim(), k));
  return FiltMorphism(s.object, ambient, s.inclusion);
}

FiltMorphism random_strict_epi(Rng& rng, const FiltObject& ambient) {
  const std::size_t k = ambient.dim() == 0 ? 0 : rng.index(ambient.dim() + 1);
  const QuotientObject q = quotient(ambient, random_columns(rng, ambient.dim(), k));
  return FiltMorphism(ambient, q.object, q.projection);
}

Complex random_complex(Rng& rng, int lo, int hi, std::size_t max_dim, int wmin, int wmax) {
  std::map<int, FiltObject> objects;
  for (int n = lo; n <= hi; ++n) objects.emplace(n, random_object(rng, 0, max_dim, wmin, wmax));
  std::map<int, Matrix> diffs;
  Matrix previous(objects.at(lo).dim(), 0);
  for (int n = lo; n < hi; ++n) {
    const FiltObject& x = objects.at(n);
    const FiltObject& y = objects.at(n + 1);
    const QuotientObject q = quotient(x, previous);
    const Matrix m = random_filtered_matrix(rng, q.object, y, rng.chance(0.2) ? 1.0 : 0.4);
    Matrix d = m * q.projection;
    previous = d;
    diffs.emplace(n, std::move(d));
  }
  return Complex(std::move(objects), std::move(diffs));
}

Complex random_exact_complex(Rng& rng, int lo, int hi, std::size_t max_dim, int wmin, int wmax) {
  // c[n] elementary pieces Q -1-> Q sitting in degrees n, n + 1.
  std::map<int, std::size_t> c;
  for (int n = lo; n < hi; ++n) {
    const std::size_t used = c.contains(n - 1) ? c[n - 1] : 0;
    const std::size_t room = max_dim > used ? max_dim - used : 0;
    c[n] = room == 0 ? 0 : rng.index(room + 1);
  }
  auto dim_at = [&](int n) {
    std::size_t d = 0;
    if (c.contains(n - 1)) d += c[n - 1];
    if (c.contains(n)) d += c[n];
    return d;
  };
  std::map<int, Matrix> change;
  for (int n = lo; n <= hi; ++n) change.emplace(n, random_invertible(rng, dim_at(n)));
  std::map<int, Matrix> diffs;
  for (int n = lo; n < hi; ++n) {
    // basis of X^n: [ends of pieces from n-1 | starts of pieces at n]
    const std::size_t ends_here = c.contains(n - 1) ? c[n - 1] : 0;
    Matrix d(dim_at(n + 1), dim_at(n));
    for (std::size_t k = 0; k < c[n]; ++k) d(k, ends_here + k) = 1;
    diffs.emplace(n, change.at(n + 1) * d * *inverse(change.at(n)));
  }
  std::map<int, FiltObject> objects;
  std::vector<int> prev;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> w(dim_at(n));
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = rng.uniform(wmin, wmax);
      if (n > lo && diffs.contains(n - 1)) {
        const Matrix& d = diffs.at(n - 1);
        for (std::size_t j = 0; j < d.cols(); ++j)
          if (sgn(d(i, j)) != 0) w[i] = std::min(w[i], prev[j]);
      }
    }
    objects.emplace(n, FiltObject(w));
    prev = std::move(w);
  }
  return Complex(std::move(objects), std::move(diffs));
}

Complex random_strictly_exact_complex(Rng& rng, int lo, int hi, std::size_t max_dim) {
  const Complex z = random_complex(rng, lo + 1, hi, std::max<std::size_t>(1, max_dim / 2));
  return cone(ChainMap::identity(z));
}

ChainMap random_null_homotopic(Rng& rng, const Complex& x, const Complex& y) {
  std::map<int, Matrix> h;
  for (int n : x.support()) h.emplace(n, random_filtered_matrix(rng, x.object(n), y.object(n - 1), 0.4));
  auto hm = [&](int n) {
    auto it = h.find(n);
    return it == h.end() ? Matrix(y.object(n - 1).dim(), x.object(n).dim()) : it->second;
  };
  std::map<int, Matrix> comps;
  for (int n : joint_degrees(x, y)) {
    Matrix f = y.differential_matrix(n - 1) * hm(n) + hm(n + 1) * x.differential_matrix(n);
    if (!f.empty()) comps.emplace(n, std::move(f));
  }
  return ChainMap(x, y, std::move(comps));
}

Matrix random_cycles(Rng& rng, const Complex& x, int n, const FiltObject& r) {
  const FiltObject& xn = x.object(n);
  const Matrix z = kernel_basis(x.differential_matrix(n));
  const SubObject s = subspace(xn, z);
  Matrix out(xn.dim(), r.dim());
  for (std::size_t j = 0; j < r.dim(); ++j) {
    Matrix coeffs(s.object.dim(), 1);
    for (std::size_t k = 0; k < s.object.dim(); ++k)
      if (s.object.weight(k) <= r.weight(j)) coeffs(k, 0) = rng.rational(0.3);
    out.set_block(0, j, s.inclusion * coeffs);
  }
  return out;
}

}  // namespace qahom::verify
