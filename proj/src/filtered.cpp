#include "qahom/filtered.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qahom/error.hpp"

namespace qahom {

std::size_t FiltObject::filtration_dim(int p) const {
  return static_cast<std::size_t>(std::count_if(weights_.begin(), weights_.end(), [p](int w) { return w <= p; }));
}

std::vector<int> FiltObject::weight_profile() const {
  std::vector<int> w = weights_;
  std::sort(w.begin(), w.end());
  return w;
}

std::string describe(const FiltObject& v) {
  std::ostringstream os;
  os << "Q^" << v.dim() << " (weights";
  for (int w : v.weights()) os << ' ' << w;
  os << ')';
  return os.str();
}

bool preserves_filtration(const FiltObject& source, const FiltObject& target, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && target.weight(i) > source.weight(j)) return false;
  return true;
}

FiltMorphism::FiltMorphism(FiltObject source, FiltObject target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw std::invalid_argument("morphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + " but objects need " +
                                std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
  }
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      if (sgn(matrix_(i, j)) != 0 && target_.weight(i) > source_.weight(j)) {
        throw InvariantError("filtration not preserved at entry (" + std::to_string(i) + "," + std::to_string(j) +
                             "): target weight " + std::to_string(target_.weight(i)) + " > source weight " +
                             std::to_string(source_.weight(j)));
      }
}

FiltMorphism FiltMorphism::identity(const FiltObject& v) { return {v, v, Matrix::identity(v.dim())}; }

FiltMorphism FiltMorphism::zero(const FiltObject& source, const FiltObject& target) {
  return {source, target, Matrix(target.dim(), source.dim())};
}

std::size_t FiltMorphism::rank() const { return qahom::rank(matrix_); }
bool FiltMorphism::is_mono() const { return rank() == source_.dim(); }
bool FiltMorphism::is_epi() const { return rank() == target_.dim(); }

FiltMorphism compose(const FiltMorphism& g, const FiltMorphism& f) {
  if (g.source().dim() != f.target().dim() || g.source() != f.target()) {
    throw std::invalid_argument("compose: target of first map differs from source of second");
  }
  return {f.source(), g.target(), g.matrix() * f.matrix()};
}

FiltMorphism operator+(const FiltMorphism& a, const FiltMorphism& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw std::invalid_argument("sum of morphisms with different endpoints");
  return {a.source(), a.target(), a.matrix() + b.matrix()};
}

FiltMorphism operator*(const Rational& s, const FiltMorphism& f) { return {f.source(), f.target(), s * f.matrix()}; }

SubObject subspace(const FiltObject& ambient, const Matrix& spanning) {
  const std::size_t n = ambient.dim();
  if (spanning.rows() != n) throw std::invalid_argument("subspace: spanning vectors have wrong length");
  // Highest weights first, so each basis vector's pivot is its top-weight coordinate.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ambient.weight(a) > ambient.weight(b); });
  const Echelon e = row_reduce(spanning.transpose(), order);

  std::vector<std::size_t> rows(e.pivots.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) { return e.pivots[a] < e.pivots[b]; });

  SubObject out;
  std::vector<int> weights;
  out.inclusion = Matrix(n, rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const std::size_t r = rows[c];
    for (std::size_t i = 0; i < n; ++i) out.inclusion(i, c) = e.reduced(r, i);
    out.pivots.push_back(e.pivots[r]);
    weights.push_back(ambient.weight(e.pivots[r]));
  }
  out.object = FiltObject(std::move(weights));
  return out;
}

QuotientObject quotient(const FiltObject& ambient, const Matrix& spanning) {
  const std::size_t n = ambient.dim();
  if (spanning.rows() != n) throw std::invalid_argument("quotient: spanning vectors have wrong length");
  SpanTracker tracker(n);
  std::vector<std::size_t> span_cols;
  for (std::size_t j = 0; j < spanning.cols(); ++j) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = spanning(i, j);
    if (tracker.add(std::move(v))) span_cols.push_back(j);
  }
  // Greedy in ascending weight: the chosen classes form an adapted basis of
  // the quotient filtration (F_p V + K) / K.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ambient.weight(a) < ambient.weight(b); });
  std::vector<std::size_t> chosen;
  for (std::size_t i : order) {
    std::vector<Rational> e(n);
    e[i] = 1;
    if (tracker.add(std::move(e))) chosen.push_back(i);
  }
  std::sort(chosen.begin(), chosen.end());

  QuotientObject out;
  std::vector<int> weights;
  out.section = Matrix(n, chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    out.section(chosen[c], c) = 1;
    weights.push_back(ambient.weight(chosen[c]));
  }
  out.object = FiltObject(std::move(weights));
  const Matrix basis = hstack(spanning.select_columns(span_cols), out.section);
  const auto inv = inverse(basis);
  if (!inv) throw std::logic_error("quotient: complement basis is singular");
  out.projection = inv->block(span_cols.size(), 0, chosen.size(), n);
  return out;
}

Matrix coordinates(const SubObject& sub, const Matrix& vectors) {
  Matrix c = vectors.select_rows(sub.pivots);
  if (!(sub.inclusion * c == vectors)) throw std::invalid_argument("coordinates: vector not in the subspace");
  return c;
}

KernelResult kernel(const FiltMorphism& f) {
  SubObject s = subspace(f.source(), kernel_basis(f.matrix()));
  FiltMorphism inc(s.object, f.source(), s.inclusion);
  return {std::move(s.object), std::move(inc)};
}

CokernelResult cokernel(const FiltMorphism& f) {
  QuotientObject q = quotient(f.target(), f.matrix());
  FiltMorphism proj(f.target(), q.object, q.projection);
  return {std::move(q.object), std::move(proj)};
}

KernelResult image(const FiltMorphism& f) {
  SubObject s = subspace(f.target(), f.matrix());
  FiltMorphism inc(s.object, f.target(), s.inclusion);
  return {std::move(s.object), std::move(inc)};
}

CokernelResult coimage(const FiltMorphism& f) {
  QuotientObject q = quotient(f.source(), kernel_basis(f.matrix()));
  FiltMorphism proj(f.source(), q.object, q.projection);
  return {std::move(q.object), std::move(proj)};
}

FiltMorphism coimage_to_image(const FiltMorphism& f) {
  const QuotientObject coim = quotient(f.source(), kernel_basis(f.matrix()));
  const SubObject im = subspace(f.target(), f.matrix());
  return {coim.object, im.object, coordinates(im, f.matrix() * coim.section)};
}

bool is_strict(const FiltMorphism& f) {
  const QuotientObject coim = quotient(f.source(), kernel_basis(f.matrix()));
  const SubObject im = subspace(f.target(), f.matrix());
  return coim.object.weight_profile() == im.object.weight_profile();
}

bool is_strict_mono(const FiltMorphism& f) { return f.is_mono() && is_strict(f); }
bool is_strict_epi(const FiltMorphism& f) { return f.is_epi() && is_strict(f); }

bool is_iso(const FiltMorphism& f) {
  const auto inv = inverse(f.matrix());
  return inv && preserves_filtration(f.target(), f.source(), *inv);
}

FactoredMorphism factor(const FiltMorphism& f) {
  const QuotientObject coim = quotient(f.source(), kernel_basis(f.matrix()));
  return {FiltMorphism(f.source(), coim.object, coim.projection),
          FiltMorphism(coim.object, f.target(), f.matrix() * coim.section)};
}

ImageFactorization factor_through_image(const FiltMorphism& f) {
  const SubObject im = subspace(f.target(), f.matrix());
  return {FiltMorphism(f.source(), im.object, coordinates(im, f.matrix())),
          FiltMorphism(im.object, f.target(), im.inclusion)};
}

Pushout pushout(const FiltMorphism& f, const FiltMorphism& g) {
  if (f.source() != g.source()) throw std::invalid_argument("pushout: maps do not share a source");
  const FiltMorphism u = pair(f, Rational(-1) * g);
  const CokernelResult q = cokernel(u);
  const FiltObject& y = f.target();
  const FiltObject& z = g.target();
  return {q.object, compose(q.projection, sum_inclusion_first(y, z)),
          compose(q.projection, sum_inclusion_second(y, z))};
}

Pullback pullback(const FiltMorphism& f, const FiltMorphism& g) {
  if (f.target() != g.target()) throw std::invalid_argument("pullback: maps do not share a target");
  const FiltMorphism v = copair(f, Rational(-1) * g);
  const KernelResult k = kernel(v);
  const FiltObject& y = f.source();
  const FiltObject& z = g.source();
  return {k.object, compose(sum_projection_first(y, z), k.inclusion),
          compose(sum_projection_second(y, z), k.inclusion)};
}

FiltObject direct_sum(const FiltObject& a, const FiltObject& b) {
  std::vector<int> w = a.weights();
  w.insert(w.end(), b.weights().begin(), b.weights().end());
  return FiltObject(std::move(w));
}

FiltMorphism direct_sum(const FiltMorphism& f, const FiltMorphism& g) {
  return {direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
          block_diagonal(f.matrix(), g.matrix())};
}

FiltMorphism copair(const FiltMorphism& f, const FiltMorphism& g) {
  if (f.target() != g.target()) throw std::invalid_argument("copair: maps do not share a target");
  return {direct_sum(f.source(), g.source()), f.target(), hstack(f.matrix(), g.matrix())};
}

FiltMorphism pair(const FiltMorphism& f, const FiltMorphism& g) {
  if (f.source() != g.source()) throw std::invalid_argument("pair: maps do not share a source");
  return {f.source(), direct_sum(f.target(), g.target()), vstack(f.matrix(), g.matrix())};
}

FiltMorphism sum_inclusion_first(const FiltObject& a, const FiltObject& b) {
  return {a, direct_sum(a, b), vstack(Matrix::identity(a.dim()), Matrix(b.dim(), a.dim()))};
}

FiltMorphism sum_inclusion_second(const FiltObject& a, const FiltObject& b) {
  return {b, direct_sum(a, b), vstack(Matrix(a.dim(), b.dim()), Matrix::identity(b.dim()))};
}

FiltMorphism sum_projection_first(const FiltObject& a, const FiltObject& b) {
  return {direct_sum(a, b), a, hstack(Matrix::identity(a.dim()), Matrix(a.dim(), b.dim()))};
}

FiltMorphism sum_projection_second(const FiltObject& a, const FiltObject& b) {
  return {direct_sum(a, b), b, hstack(Matrix(b.dim(), a.dim()), Matrix::identity(b.dim()))};
}

FiltObject tensor(const FiltObject& v, const FiltObject& w) {
  std::vector<int> weights;
  weights.reserve(v.dim() * w.dim());
  for (int a : v.weights())
    for (int b : w.weights()) weights.push_back(a + b);
  return FiltObject(std::move(weights));
}

FiltMorphism tensor(const FiltMorphism& f, const FiltMorphism& g) {
  return {tensor(f.source(), g.source()), tensor(f.target(), g.target()), kronecker(f.matrix(), g.matrix())};
}

FiltObject dual(const FiltObject& v) {
  std::vector<int> w = v.weights();
  for (int& x : w) x = -x;
  return FiltObject(std::move(w));
}

FiltMorphism dual(const FiltMorphism& f) { return {dual(f.target()), dual(f.source()), f.matrix().transpose()}; }

}  // namespace qahom
