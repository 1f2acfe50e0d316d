#include "qahom/model.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "qahom/error.hpp"

namespace qahom {

MorphismClassification classify(const ChainMap& f) {
  MorphismClassification c;
  c.degreewise_mono = c.degreewise_epi = c.degreewise_strict_mono = c.degreewise_strict_epi = true;
  for (int n : joint_degrees(f.source(), f.target())) {
    const FiltMorphism fn = f.component(n);
    const bool mono = fn.is_mono();
    const bool epi = fn.is_epi();
    const bool strict = is_strict(fn);
    c.degreewise_mono &= mono;
    c.degreewise_epi &= epi;
    c.degreewise_strict_mono &= mono && strict;
    c.degreewise_strict_epi &= epi && strict;
  }
  c.reduced_qiso = is_reduced_qiso(f);
  return c;
}

Complex two_term_complex(const FiltMorphism& u, int n) {
  return Complex({{n, u.source()}, {n + 1, u.target()}}, {{n, u.matrix()}});
}

ChainMap generating_cofibration(const FiltMorphism& u, int n) {
  if (!is_strict_mono(u)) throw std::invalid_argument("generating_cofibration: u is not a strict monomorphism");
  const Complex src = two_term_complex(u, n);
  const Complex tgt = two_term_complex(FiltMorphism::identity(u.target()), n);
  return {src, tgt, {{n, u.matrix()}, {n + 1, Matrix::identity(u.target().dim())}}};
}

ChainMap generating_projective_cofibration(const FiltObject& r, int n) {
  const Complex sphere = Complex::concentrated(r, n);
  const Complex disk = two_term_complex(FiltMorphism::identity(r), n - 1);
  return {sphere, disk, {{n, Matrix::identity(r.dim())}}};
}

namespace {

bool same_complex(const Complex& a, const Complex& b) {
  return a.objects() == b.objects() && a.differentials() == b.differentials();
}

}  // namespace

void validate(const LiftingSquare& sq) {
  if (!same_complex(sq.left.source(), sq.top.source()) || !same_complex(sq.top.target(), sq.right.source()) ||
      !same_complex(sq.left.target(), sq.bottom.source()) || !same_complex(sq.bottom.target(), sq.right.target())) {
    throw std::invalid_argument("lifting square: maps do not fit into a square");
  }
  const ChainMap upper = compose(sq.right, sq.top);
  const ChainMap lower = compose(sq.bottom, sq.left);
  for (int n : joint_degrees(sq.left.source(), sq.right.target())) {
    const Matrix diff = upper.component_matrix(n) - lower.component_matrix(n);
    if (diff.is_zero()) continue;
    for (std::size_t i = 0; i < diff.rows(); ++i)
      for (std::size_t j = 0; j < diff.cols(); ++j)
        if (sgn(diff(i, j)) != 0) {
          throw InvariantError("lifting square does not commute at degree " + std::to_string(n) + ", entry (" +
                               std::to_string(i) + "," + std::to_string(j) + "): right*top = " +
                               upper.component_matrix(n)(i, j).get_str() +
                               ", bottom*left = " + lower.component_matrix(n)(i, j).get_str());
        }
  }
}

std::optional<ChainMap> solve_lift(const LiftingSquare& sq) {
  validate(sq);
  const Complex& a = sq.left.source();
  const Complex& b = sq.left.target();
  const Complex& x = sq.right.source();
  const Complex& y = sq.right.target();

  std::set<int> degree_set;
  for (int n : joint_degrees(a, b)) degree_set.insert(n);
  for (int n : joint_degrees(x, y)) degree_set.insert(n);
  const std::vector<int> degrees(degree_set.begin(), degree_set.end());

  // Unknowns: entries (i, j) of h^n allowed by the filtrations.
  struct Var {
    int n;
    std::size_t i, j;
  };
  std::vector<Var> vars;
  std::map<int, std::vector<std::vector<long>>> index;  // n -> [i][j] -> var or -1
  for (int n : degrees) {
    const FiltObject& bn = b.object(n);
    const FiltObject& xn = x.object(n);
    auto& idx = index[n];
    idx.assign(xn.dim(), std::vector<long>(bn.dim(), -1));
    for (std::size_t i = 0; i < xn.dim(); ++i)
      for (std::size_t j = 0; j < bn.dim(); ++j)
        if (xn.weight(i) <= bn.weight(j)) {
          idx[i][j] = static_cast<long>(vars.size());
          vars.push_back({n, i, j});
        }
  }
  auto var = [&](int n, std::size_t i, std::size_t j) -> long {
    auto it = index.find(n);
    if (it == index.end()) return -1;
    return it->second[i][j];
  };

  std::vector<std::vector<std::pair<long, Rational>>> rows;
  std::vector<Rational> rhs;
  auto add_row = [&](std::vector<std::pair<long, Rational>> row, Rational value) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  };

  for (int n : degrees) {
    const std::size_t bn = b.object(n).dim();
    const std::size_t bn1 = b.object(n + 1).dim();
    const std::size_t xn = x.object(n).dim();
    const std::size_t xn1 = x.object(n + 1).dim();
    const std::size_t an = a.object(n).dim();
    const std::size_t yn = y.object(n).dim();
    const Matrix dx = x.differential_matrix(n);
    const Matrix db = b.differential_matrix(n);
    const Matrix left = sq.left.component_matrix(n);
    const Matrix top = sq.top.component_matrix(n);
    const Matrix right = sq.right.component_matrix(n);
    const Matrix bottom = sq.bottom.component_matrix(n);

    // d_X h^n - h^{n+1} d_B = 0
    for (std::size_t i = 0; i < xn1; ++i)
      for (std::size_t j = 0; j < bn; ++j) {
        std::vector<std::pair<long, Rational>> row;
        for (std::size_t k = 0; k < xn; ++k)
          if (sgn(dx(i, k)) != 0)
            if (long v = var(n, k, j); v >= 0) row.emplace_back(v, dx(i, k));
        for (std::size_t k = 0; k < bn1; ++k)
          if (sgn(db(k, j)) != 0)
            if (long v = var(n + 1, i, k); v >= 0) row.emplace_back(v, -db(k, j));
        add_row(std::move(row), 0);
      }
    // h^n left^n = top^n
    for (std::size_t i = 0; i < xn; ++i)
      for (std::size_t j = 0; j < an; ++j) {
        std::vector<std::pair<long, Rational>> row;
        for (std::size_t k = 0; k < bn; ++k)
          if (sgn(left(k, j)) != 0)
            if (long v = var(n, i, k); v >= 0) row.emplace_back(v, left(k, j));
        add_row(std::move(row), top(i, j));
      }
    // right^n h^n = bottom^n
    for (std::size_t i = 0; i < yn; ++i)
      for (std::size_t j = 0; j < bn; ++j) {
        std::vector<std::pair<long, Rational>> row;
        for (std::size_t k = 0; k < xn; ++k)
          if (sgn(right(i, k)) != 0)
            if (long v = var(n, k, j); v >= 0) row.emplace_back(v, right(i, k));
        add_row(std::move(row), bottom(i, j));
      }
  }

  Matrix system(rows.size(), vars.size());
  Matrix values(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [v, c] : rows[r]) system(r, static_cast<std::size_t>(v)) += c;
    values(r, 0) = rhs[r];
  }
  const AffineSolution sol = solve_affine(system, values);
  if (!sol.particular) return std::nullopt;

  std::map<int, Matrix> comps;
  for (int n : degrees) comps.emplace(n, Matrix(x.object(n).dim(), b.object(n).dim()));
  for (std::size_t v = 0; v < vars.size(); ++v) comps[vars[v].n](vars[v].i, vars[v].j) = (*sol.particular)(v, 0);
  return ChainMap(b, x, std::move(comps));
}

ChainMap pushout_product(const ChainMap& f, const ChainMap& g) {
  const ChainMap id_a = ChainMap::identity(f.source());
  const ChainMap id_b = ChainMap::identity(f.target());
  const ChainMap id_x = ChainMap::identity(g.source());
  const ChainMap id_y = ChainMap::identity(g.target());
  // A(x)X -> A(x)Y and A(x)X -> B(x)X
  const ComplexPushout po = pushout(tensor(id_a, g), tensor(f, id_x));
  // [f(x)Y, B(x)g] : (A(x)Y) (+) (B(x)X) -> B(x)Y, descended through the quotient.
  const ChainMap u = copair(tensor(f, id_y), tensor(id_b, g));
  std::map<int, Matrix> comps;
  for (const auto& [n, s] : po.quotient.sections) comps.emplace(n, u.component_matrix(n) * s);
  return {po.complex, u.target(), std::move(comps)};
}

}  // namespace qahom
