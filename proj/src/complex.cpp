#include "qahom/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "qahom/error.hpp"

namespace qahom {

namespace {

const FiltObject& zero_object() {
  static const FiltObject z;
  return z;
}

std::string first_nonzero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) return "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).get_str();
  return "";
}

// Degreewise layout of a tensor product: blocks (p, q) in ascending p.
struct TensorBlock {
  int p;
  int q;
  std::size_t offset;
  std::size_t size;
};

std::vector<TensorBlock> tensor_layout(const Complex& x, const Complex& y, int n) {
  std::vector<TensorBlock> blocks;
  std::size_t offset = 0;
  for (int p : x.support()) {
    const int q = n - p;
    const std::size_t size = x.object(p).dim() * y.object(q).dim();
    if (size == 0) continue;
    blocks.push_back({p, q, offset, size});
    offset += size;
  }
  return blocks;
}

const TensorBlock* find_block(const std::vector<TensorBlock>& blocks, int p) {
  for (const auto& b : blocks)
    if (b.p == p) return &b;
  return nullptr;
}

std::set<int> tensor_degrees(const Complex& x, const Complex& y) {
  std::set<int> out;
  for (int p : x.support())
    for (int q : y.support()) out.insert(p + q);
  return out;
}

}  // namespace

Complex::Complex(std::map<int, FiltObject> objects, std::map<int, Matrix> differentials) {
  for (auto& [n, v] : objects)
    if (v.dim() > 0) objects_.emplace(n, std::move(v));
  for (auto& [n, m] : differentials) {
    const std::size_t rows = object(n + 1).dim();
    const std::size_t cols = object(n).dim();
    if (m.rows() != rows || m.cols() != cols) {
      throw std::invalid_argument("differential d^" + std::to_string(n) + " is " + std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                  std::to_string(cols));
    }
    if (m.empty() || m.is_zero()) continue;
    if (!preserves_filtration(object(n), object(n + 1), m)) {
      try {
        FiltMorphism(object(n), object(n + 1), m);
      } catch (const InvariantError& e) {
        throw InvariantError("differential d^" + std::to_string(n) + ": " + e.what());
      }
    }
    differentials_.emplace(n, std::move(m));
  }
  for (const auto& [n, d] : differentials_) {
    auto next = differentials_.find(n + 1);
    if (next == differentials_.end()) continue;
    const Matrix sq = next->second * d;
    if (!sq.is_zero()) {
      throw InvariantError("d^" + std::to_string(n + 1) + " o d^" + std::to_string(n) + " != 0: entry " +
                           first_nonzero(sq));
    }
  }
}

Complex Complex::concentrated(const FiltObject& v, int degree) { return Complex({{degree, v}}); }

const FiltObject& Complex::object(int n) const {
  auto it = objects_.find(n);
  return it == objects_.end() ? zero_object() : it->second;
}

Matrix Complex::differential_matrix(int n) const {
  auto it = differentials_.find(n);
  if (it != differentials_.end()) return it->second;
  return Matrix(object(n + 1).dim(), object(n).dim());
}

FiltMorphism Complex::differential(int n) const { return {object(n), object(n + 1), differential_matrix(n)}; }

std::vector<int> Complex::support() const {
  std::vector<int> out;
  for (const auto& [n, v] : objects_) out.push_back(n);
  return out;
}

std::size_t Complex::total_dim() const {
  std::size_t t = 0;
  for (const auto& [n, v] : objects_) t += v.dim();
  return t;
}

std::vector<int> joint_degrees(const Complex& a, const Complex& b) {
  std::vector<int> s = a.support();
  const std::vector<int> t = b.support();
  s.insert(s.end(), t.begin(), t.end());
  if (s.empty()) return {};
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  std::vector<int> out;
  for (int n = *lo - 1; n <= *hi + 1; ++n) out.push_back(n);
  return out;
}

ChainMap::ChainMap(Complex source, Complex target, std::map<int, Matrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [n, m] : components) {
    const std::size_t rows = target_.object(n).dim();
    const std::size_t cols = source_.object(n).dim();
    if (m.rows() != rows || m.cols() != cols) {
      throw std::invalid_argument("chain map component at degree " + std::to_string(n) + " is " +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                  std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (m.empty() || m.is_zero()) continue;
    try {
      FiltMorphism(source_.object(n), target_.object(n), m);
    } catch (const InvariantError& e) {
      throw InvariantError("chain map component at degree " + std::to_string(n) + ": " + e.what());
    }
    components_.emplace(n, std::move(m));
  }
  for (int n : joint_degrees(source_, target_)) {
    const Matrix lhs = component_matrix(n + 1) * source_.differential_matrix(n);
    const Matrix rhs = target_.differential_matrix(n) * component_matrix(n);
    if (!(lhs == rhs)) {
      throw InvariantError("chain map does not commute with differentials at degree " + std::to_string(n) +
                           ": entry " + first_nonzero(lhs - rhs));
    }
  }
}

ChainMap ChainMap::identity(const Complex& x) {
  std::map<int, Matrix> c;
  for (int n : x.support()) c.emplace(n, Matrix::identity(x.object(n).dim()));
  return {x, x, std::move(c)};
}

ChainMap ChainMap::zero(const Complex& x, const Complex& y) { return {x, y}; }

Matrix ChainMap::component_matrix(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return Matrix(target_.object(n).dim(), source_.object(n).dim());
}

FiltMorphism ChainMap::component(int n) const { return {source_.object(n), target_.object(n), component_matrix(n)}; }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (g.source().objects() != f.target().objects()) {
    throw std::invalid_argument("compose: chain maps are not composable");
  }
  std::map<int, Matrix> c;
  for (int n : f.source().support()) c.emplace(n, g.component_matrix(n) * f.component_matrix(n));
  return {f.source(), g.target(), std::move(c)};
}

ReducedCohomology reduced_cohomology_data(const Complex& x, int n) {
  SubObject cycles = subspace(x.object(n), kernel_basis(x.differential_matrix(n)));
  const Matrix incoming = coordinates(cycles, x.differential_matrix(n - 1));
  QuotientObject classes = quotient(cycles.object, incoming);
  FiltObject h = classes.object;
  return {std::move(h), std::move(cycles), std::move(classes)};
}

FiltObject reduced_cohomology(const Complex& x, int n) { return reduced_cohomology_data(x, n).object; }

std::map<int, FiltObject> reduced_cohomology(const Complex& x) {
  std::map<int, FiltObject> out;
  for (int n : x.support()) out.emplace(n, reduced_cohomology(x, n));
  return out;
}

FiltMorphism induced_on_cohomology(const ChainMap& f, int n) {
  const ReducedCohomology hx = reduced_cohomology_data(f.source(), n);
  const ReducedCohomology hy = reduced_cohomology_data(f.target(), n);
  const Matrix reps = hx.cycles.inclusion * hx.classes.section;
  const Matrix images = coordinates(hy.cycles, f.component_matrix(n) * reps);
  return {hx.object, hy.object, hy.classes.projection * images};
}

bool is_reduced_qiso(const ChainMap& f) {
  for (int n : joint_degrees(f.source(), f.target()))
    if (!is_iso(induced_on_cohomology(f, n))) return false;
  return true;
}

bool is_acyclic(const Complex& x) {
  for (int n : x.support())
    if (reduced_cohomology(x, n).dim() != 0) return false;
  return true;
}

Complex cone(const ChainMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  std::map<int, FiltObject> objects;
  std::map<int, Matrix> diffs;
  const std::vector<int> degrees = joint_degrees(x, y);
  for (int n : degrees) objects.emplace(n, direct_sum(y.object(n), x.object(n + 1)));
  for (int n : degrees) {
    const FiltObject& src = objects[n];
    auto tgt_it = objects.find(n + 1);
    const std::size_t tgt_dim = tgt_it == objects.end() ? 0 : tgt_it->second.dim();
    Matrix d(tgt_dim, src.dim());
    if (tgt_dim > 0) {
      const std::size_t y0 = y.object(n).dim();
      const std::size_t y1 = y.object(n + 1).dim();
      d.set_block(0, 0, y.differential_matrix(n));
      d.set_block(0, y0, f.component_matrix(n + 1));
      d.set_block(y1, y0, -x.differential_matrix(n + 1));
    }
    diffs.emplace(n, std::move(d));
  }
  return {std::move(objects), std::move(diffs)};
}

ChainMap cone_inclusion(const ChainMap& f) {
  const Complex c = cone(f);
  std::map<int, Matrix> comps;
  for (int n : f.target().support()) {
    Matrix m(c.object(n).dim(), f.target().object(n).dim());
    m.set_block(0, 0, Matrix::identity(f.target().object(n).dim()));
    comps.emplace(n, std::move(m));
  }
  return {f.target(), c, std::move(comps)};
}

ChainMap cone_projection(const ChainMap& f) {
  const Complex c = cone(f);
  const Complex x1 = shift(f.source(), 1);
  std::map<int, Matrix> comps;
  for (int n : x1.support()) {
    Matrix m(x1.object(n).dim(), c.object(n).dim());
    m.set_block(0, f.target().object(n).dim(), Matrix::identity(x1.object(n).dim()));
    comps.emplace(n, std::move(m));
  }
  return {c, x1, std::move(comps)};
}

Complex shift(const Complex& x, int k) {
  std::map<int, FiltObject> objects;
  std::map<int, Matrix> diffs;
  const Rational sign = (k % 2 == 0) ? 1 : -1;
  for (const auto& [n, v] : x.objects()) objects.emplace(n - k, v);
  for (const auto& [n, d] : x.differentials()) diffs.emplace(n - k, sign * d);
  return {std::move(objects), std::move(diffs)};
}

ChainMap shift(const ChainMap& f, int k) {
  std::map<int, Matrix> comps;
  for (const auto& [n, m] : f.components()) comps.emplace(n - k, m);
  return {shift(f.source(), k), shift(f.target(), k), std::move(comps)};
}

Complex direct_sum(const Complex& x, const Complex& y) {
  std::map<int, FiltObject> objects;
  std::map<int, Matrix> diffs;
  const std::vector<int> degrees = joint_degrees(x, y);
  for (int n : degrees) objects.emplace(n, direct_sum(x.object(n), y.object(n)));
  for (int n : degrees) diffs.emplace(n, block_diagonal(x.differential_matrix(n), y.differential_matrix(n)));
  return {std::move(objects), std::move(diffs)};
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  std::map<int, Matrix> comps;
  for (int n : joint_degrees(f.source(), g.source()))
    comps.emplace(n, block_diagonal(f.component_matrix(n), g.component_matrix(n)));
  return {direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), std::move(comps)};
}

ChainMap sum_inclusion_first(const Complex& x, const Complex& y) {
  std::map<int, Matrix> comps;
  for (int n : x.support())
    comps.emplace(n, vstack(Matrix::identity(x.object(n).dim()), Matrix(y.object(n).dim(), x.object(n).dim())));
  return {x, direct_sum(x, y), std::move(comps)};
}

ChainMap sum_inclusion_second(const Complex& x, const Complex& y) {
  std::map<int, Matrix> comps;
  for (int n : y.support())
    comps.emplace(n, vstack(Matrix(x.object(n).dim(), y.object(n).dim()), Matrix::identity(y.object(n).dim())));
  return {y, direct_sum(x, y), std::move(comps)};
}

ChainMap sum_projection_first(const Complex& x, const Complex& y) {
  std::map<int, Matrix> comps;
  for (int n : x.support())
    comps.emplace(n, hstack(Matrix::identity(x.object(n).dim()), Matrix(x.object(n).dim(), y.object(n).dim())));
  return {direct_sum(x, y), x, std::move(comps)};
}

ChainMap sum_projection_second(const Complex& x, const Complex& y) {
  std::map<int, Matrix> comps;
  for (int n : y.support())
    comps.emplace(n, hstack(Matrix(y.object(n).dim(), x.object(n).dim()), Matrix::identity(y.object(n).dim())));
  return {direct_sum(x, y), y, std::move(comps)};
}

ChainMap pair(const ChainMap& f, const ChainMap& g) {
  if (f.source().objects() != g.source().objects()) throw std::invalid_argument("pair: maps do not share a source");
  std::map<int, Matrix> comps;
  for (int n : f.source().support()) comps.emplace(n, vstack(f.component_matrix(n), g.component_matrix(n)));
  return {f.source(), direct_sum(f.target(), g.target()), std::move(comps)};
}

ChainMap copair(const ChainMap& f, const ChainMap& g) {
  if (f.target().objects() != g.target().objects()) throw std::invalid_argument("copair: maps do not share a target");
  std::map<int, Matrix> comps;
  for (int n : f.target().support()) comps.emplace(n, hstack(f.component_matrix(n), g.component_matrix(n)));
  return {direct_sum(f.source(), g.source()), f.target(), std::move(comps)};
}

ChainMap scale(const Rational& s, const ChainMap& f) {
  std::map<int, Matrix> comps;
  for (const auto& [n, m] : f.components()) comps.emplace(n, s * m);
  return {f.source(), f.target(), std::move(comps)};
}

Complex tensor(const Complex& x, const Complex& y) {
  std::map<int, FiltObject> objects;
  std::map<int, Matrix> diffs;
  const std::set<int> degrees = tensor_degrees(x, y);
  for (int n : degrees) {
    FiltObject v;
    for (const auto& b : tensor_layout(x, y, n)) v = direct_sum(v, tensor(x.object(b.p), y.object(b.q)));
    objects.emplace(n, std::move(v));
  }
  for (int n : degrees) {
    if (!degrees.count(n + 1)) continue;
    const auto src = tensor_layout(x, y, n);
    const auto tgt = tensor_layout(x, y, n + 1);
    Matrix d(objects[n + 1].dim(), objects[n].dim());
    for (const auto& b : src) {
      if (const TensorBlock* t = find_block(tgt, b.p + 1)) {
        d.set_block(t->offset, b.offset,
                    kronecker(x.differential_matrix(b.p), Matrix::identity(y.object(b.q).dim())));
      }
      if (const TensorBlock* t = find_block(tgt, b.p)) {
        const Rational sign = (b.p % 2 == 0) ? 1 : -1;
        d.set_block(t->offset, b.offset,
                    sign * kronecker(Matrix::identity(x.object(b.p).dim()), y.differential_matrix(b.q)));
      }
    }
    diffs.emplace(n, std::move(d));
  }
  return {std::move(objects), std::move(diffs)};
}

ChainMap tensor(const ChainMap& f, const ChainMap& g) {
  const Complex src = tensor(f.source(), g.source());
  const Complex tgt = tensor(f.target(), g.target());
  std::map<int, Matrix> comps;
  for (int n : src.support()) {
    const auto sb = tensor_layout(f.source(), g.source(), n);
    const auto tb = tensor_layout(f.target(), g.target(), n);
    Matrix m(tgt.object(n).dim(), src.object(n).dim());
    for (const auto& b : sb)
      if (const TensorBlock* t = find_block(tb, b.p))
        m.set_block(t->offset, b.offset, kronecker(f.component_matrix(b.p), g.component_matrix(b.q)));
    comps.emplace(n, std::move(m));
  }
  return {src, tgt, std::move(comps)};
}

ComplexQuotient cokernel(const ChainMap& f) {
  const Complex& v = f.target();
  std::map<int, QuotientObject> q;
  for (int n : v.support()) q.emplace(n, quotient(v.object(n), f.component_matrix(n)));
  std::map<int, FiltObject> objects;
  for (const auto& [n, qo] : q) objects.emplace(n, qo.object);
  std::map<int, Matrix> diffs;
  for (const auto& [n, qo] : q) {
    auto next = q.find(n + 1);
    if (next == q.end()) continue;
    diffs.emplace(n, next->second.projection * v.differential_matrix(n) * qo.section);
  }
  Complex c(std::move(objects), std::move(diffs));
  std::map<int, Matrix> proj, sections;
  for (auto& [n, qo] : q) {
    proj.emplace(n, qo.projection);
    sections.emplace(n, std::move(qo.section));
  }
  ChainMap p(v, c, std::move(proj));
  return {std::move(c), std::move(p), std::move(sections)};
}

ComplexSub kernel(const ChainMap& f) {
  const Complex& u = f.source();
  std::map<int, SubObject> k;
  for (int n : u.support()) k.emplace(n, subspace(u.object(n), kernel_basis(f.component_matrix(n))));
  std::map<int, FiltObject> objects;
  for (const auto& [n, s] : k) objects.emplace(n, s.object);
  std::map<int, Matrix> diffs;
  for (const auto& [n, s] : k) {
    auto next = k.find(n + 1);
    if (next == k.end()) continue;
    diffs.emplace(n, coordinates(next->second, u.differential_matrix(n) * s.inclusion));
  }
  Complex c(std::move(objects), std::move(diffs));
  std::map<int, Matrix> inc;
  for (auto& [n, s] : k) inc.emplace(n, std::move(s.inclusion));
  ChainMap i(c, u, std::move(inc));
  return {std::move(c), std::move(i)};
}

ComplexPushout pushout(const ChainMap& f, const ChainMap& g) {
  if (f.source().objects() != g.source().objects()) throw std::invalid_argument("pushout: maps do not share a source");
  ComplexQuotient q = cokernel(pair(f, scale(Rational(-1), g)));
  ChainMap first = compose(q.projection, sum_inclusion_first(f.target(), g.target()));
  ChainMap second = compose(q.projection, sum_inclusion_second(f.target(), g.target()));
  Complex c = q.complex;
  return {std::move(c), std::move(first), std::move(second), std::move(q)};
}

bool strict_exact_check(const FiltMorphism& f, const FiltMorphism& g) {
  if (f.target() != g.source()) throw std::invalid_argument("strict_exact_check: maps are not composable");
  if (!(g.matrix() * f.matrix()).is_zero()) throw std::invalid_argument("strict_exact_check: composite is nonzero");
  if (!is_strict_mono(f) || !is_strict_epi(g)) return false;
  return f.rank() + g.rank() == f.target().dim();
}

bool strict_exact_check(const ChainMap& f, const ChainMap& g) {
  if (f.target().objects() != g.source().objects()) {
    throw std::invalid_argument("strict_exact_check: chain maps are not composable");
  }
  std::set<int> degrees;
  for (int n : joint_degrees(f.source(), f.target())) degrees.insert(n);
  for (int n : joint_degrees(g.source(), g.target())) degrees.insert(n);
  for (int n : degrees)
    if (!strict_exact_check(f.component(n), g.component(n))) return false;
  return true;
}

}  // namespace qahom
