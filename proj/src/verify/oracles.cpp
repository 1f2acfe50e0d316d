#include "qahom/verify/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qahom::verify {

namespace {

// Row echelon in place; returns the pivot columns.
std::vector<std::size_t> eliminate(Rows& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational s = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= s * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rows columns_of(const Matrix& m) {
  Rows out(m.cols(), std::vector<Rational>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j][i] = m(i, j);
  return out;
}

// Rank of a set of column vectors of length n.
std::size_t rank_of_vectors(const Rows& vectors, std::size_t n) { return oracle_rank(vectors, n); }

Matrix product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::set<int> weight_set(const FiltObject& a, const FiltObject& b) {
  std::set<int> s(a.weights().begin(), a.weights().end());
  s.insert(b.weights().begin(), b.weights().end());
  return s;
}

}  // namespace

Rows to_rows(const Matrix& m) {
  Rows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

std::size_t oracle_rank(Rows rows, std::size_t cols) { return eliminate(rows, cols).size(); }

std::size_t oracle_rank(const Matrix& m) { return oracle_rank(to_rows(m), m.cols()); }

Rows oracle_kernel(const Matrix& m) {
  Rows rows = to_rows(m);
  const auto pivots = eliminate(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Rows out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

bool oracle_is_strict(const FiltObject& source, const FiltObject& target, const Matrix& m) {
  const std::size_t rk = oracle_rank(m);
  for (int p : weight_set(source, target)) {
    Rows image_p;  // f(F_p V) as vectors
    for (std::size_t j = 0; j < source.dim(); ++j)
      if (source.weight(j) <= p) {
        std::vector<Rational> v(target.dim());
        for (std::size_t i = 0; i < target.dim(); ++i) v[i] = m(i, j);
        image_p.push_back(std::move(v));
      }
    Rows joined = columns_of(m);
    std::size_t fp = 0;
    for (std::size_t i = 0; i < target.dim(); ++i)
      if (target.weight(i) <= p) {
        std::vector<Rational> e(target.dim());
        e[i] = 1;
        joined.push_back(std::move(e));
        ++fp;
      }
    const std::size_t meet = rk + fp - rank_of_vectors(joined, target.dim());
    if (rank_of_vectors(image_p, target.dim()) != meet) return false;
  }
  return true;
}

bool oracle_is_strict_mono(const FiltObject& source, const FiltObject& target, const Matrix& m) {
  return oracle_rank(m) == source.dim() && oracle_is_strict(source, target, m);
}

bool oracle_is_strict_epi(const FiltObject& source, const FiltObject& target, const Matrix& m) {
  return oracle_rank(m) == target.dim() && oracle_is_strict(source, target, m);
}

bool oracle_is_iso(const FiltObject& source, const FiltObject& target, const Matrix& m) {
  return source.dim() == target.dim() && oracle_rank(m) == source.dim() && oracle_is_strict(source, target, m);
}

bool oracle_strict_exact(const FiltMorphism& f, const FiltMorphism& g) {
  const Matrix& a = f.matrix();
  const Matrix& b = g.matrix();
  if (!product(b, a).is_zero()) return false;
  const std::size_t ra = oracle_rank(a), rb = oracle_rank(b);
  if (ra != f.source().dim() || rb != g.target().dim()) return false;
  if (f.target().dim() - rb != ra) return false;
  return oracle_is_strict(f.source(), f.target(), a) && oracle_is_strict(g.source(), g.target(), b);
}

std::map<int, std::size_t> oracle_cohomology_dims(const Complex& x) {
  std::map<int, std::size_t> out;
  const auto support = x.support();
  if (support.empty()) return out;
  for (int n = support.front() - 1; n <= support.back() + 1; ++n) {
    const std::size_t dim = x.object(n).dim();
    const std::size_t z = dim - oracle_rank(x.differential_matrix(n));
    out[n] = z - oracle_rank(x.differential_matrix(n - 1));
  }
  return out;
}

std::map<int, std::size_t> oracle_cohomology_filtration(const Complex& x, int n) {
  std::map<int, std::size_t> out;
  const FiltObject& v = x.object(n);
  const Matrix d = x.differential_matrix(n);
  const Rows boundaries = columns_of(x.differential_matrix(n - 1));
  const std::size_t rb = rank_of_vectors(boundaries, v.dim());
  for (int p : std::set<int>(v.weights().begin(), v.weights().end())) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < v.dim(); ++j)
      if (v.weight(j) <= p) cols.push_back(j);
    Rows joined = boundaries;
    for (const auto& k : oracle_kernel(d.select_columns(cols))) {
      std::vector<Rational> full(v.dim());
      for (std::size_t t = 0; t < cols.size(); ++t) full[cols[t]] = k[t];
      joined.push_back(std::move(full));
    }
    out[p] = rank_of_vectors(joined, v.dim()) - rb;
  }
  return out;
}

bool oracle_acyclic(const Complex& x) {
  for (const auto& [n, d] : oracle_cohomology_dims(x))
    if (d != 0) return false;
  return true;
}

namespace {

struct Unknowns {
  std::map<int, std::size_t> offset;
  std::size_t count = 0;
};

}  // namespace

LiftSystem oracle_lift(const LiftingSquare& sq) {
  const Complex& a = sq.left.source();
  const Complex& b = sq.left.target();
  const Complex& x = sq.right.source();
  const Complex& y = sq.right.target();
  std::set<int> degrees;
  for (const Complex* c : {&a, &b, &x, &y})
    for (int n : c->support()) {
      degrees.insert(n - 1);
      degrees.insert(n);
      degrees.insert(n + 1);
    }
  Unknowns u;
  for (int n : degrees) {
    u.offset[n] = u.count;
    u.count += x.object(n).dim() * b.object(n).dim();
  }
  auto var = [&](int n, std::size_t i, std::size_t j) { return u.offset.at(n) + i * b.object(n).dim() + j; };

  Rows eqs;  // last entry is the right hand side
  auto fresh = [&] { return std::vector<Rational>(u.count + 1); };
  for (int n : degrees) {
    const std::size_t bn = b.object(n).dim(), xn = x.object(n).dim();
    // h^{n+1} dB^n - dX^n h^n = 0
    if (degrees.contains(n + 1)) {
      const Matrix db = b.differential_matrix(n), dx = x.differential_matrix(n);
      const std::size_t xn1 = x.object(n + 1).dim(), bn1 = b.object(n + 1).dim();
      for (std::size_t i = 0; i < xn1; ++i)
        for (std::size_t j = 0; j < bn; ++j) {
          auto e = fresh();
          for (std::size_t k = 0; k < bn1; ++k) e[var(n + 1, i, k)] += db(k, j);
          for (std::size_t k = 0; k < xn; ++k) e[var(n, k, j)] -= dx(i, k);
          eqs.push_back(std::move(e));
        }
    }
    const Matrix l = sq.left.component_matrix(n), t = sq.top.component_matrix(n);
    for (std::size_t i = 0; i < xn; ++i)
      for (std::size_t j = 0; j < a.object(n).dim(); ++j) {
        auto e = fresh();
        for (std::size_t k = 0; k < bn; ++k) e[var(n, i, k)] += l(k, j);
        e.back() = t(i, j);
        eqs.push_back(std::move(e));
      }
    const Matrix r = sq.right.component_matrix(n), bt = sq.bottom.component_matrix(n);
    for (std::size_t i = 0; i < y.object(n).dim(); ++i)
      for (std::size_t j = 0; j < bn; ++j) {
        auto e = fresh();
        for (std::size_t k = 0; k < xn; ++k) e[var(n, k, j)] += r(i, k);
        e.back() = bt(i, j);
        eqs.push_back(std::move(e));
      }
    for (std::size_t i = 0; i < xn; ++i)
      for (std::size_t j = 0; j < bn; ++j)
        if (x.object(n).weight(i) > b.object(n).weight(j)) {
          auto e = fresh();
          e[var(n, i, j)] = 1;
          eqs.push_back(std::move(e));
        }
  }
  Rows coeffs = eqs;
  for (auto& e : coeffs) e.pop_back();
  const std::size_t ra = oracle_rank(coeffs, u.count);
  const std::size_t rab = oracle_rank(eqs, u.count + 1);
  LiftSystem out;
  out.unknowns = u.count;
  out.consistent = ra == rab;
  if (out.consistent) out.solution_dim = u.count - ra;
  return out;
}

bool oracle_is_lift(const LiftingSquare& sq, const ChainMap& h) {
  const Complex& b = sq.left.target();
  const Complex& x = sq.right.source();
  std::set<int> degrees;
  for (const Complex* c : {&sq.left.source(), &b, &x, &sq.right.target()})
    for (int n : c->support()) {
      degrees.insert(n - 1);
      degrees.insert(n);
      degrees.insert(n + 1);
    }
  for (int n : degrees) {
    const Matrix hn = h.component_matrix(n);
    if (!(product(hn, sq.left.component_matrix(n)) == sq.top.component_matrix(n))) return false;
    if (!(product(sq.right.component_matrix(n), hn) == sq.bottom.component_matrix(n))) return false;
    if (!(product(h.component_matrix(n + 1), b.differential_matrix(n)) == product(x.differential_matrix(n), hn)))
      return false;
    for (std::size_t i = 0; i < hn.rows(); ++i)
      for (std::size_t j = 0; j < hn.cols(); ++j)
        if (hn(i, j) != 0 && x.object(n).weight(i) > b.object(n).weight(j)) return false;
  }
  return true;
}

std::size_t oracle_sym_dim(const std::vector<bool>& odd, std::size_t n) {
  const auto o = static_cast<std::size_t>(std::count(odd.begin(), odd.end(), true));
  const std::size_t e = odd.size() - o;
  auto binom = [](std::size_t top, std::size_t k) -> std::size_t {
    if (k > top) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
  };
  std::size_t total = 0;
  for (std::size_t k = 0; k <= std::min(o, n); ++k) {
    const std::size_t rest = n - k;
    const std::size_t even = e == 0 ? (rest == 0 ? 1 : 0) : binom(e + rest - 1, rest);
    total += binom(o, k) * even;
  }
  return total;
}

namespace {

void monomials(std::size_t vars, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == vars) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = degree; a >= 0; --a) {
    cur.push_back(a);
    monomials(vars, degree - a, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monomials(std::size_t vars, int degree) {
  std::vector<std::vector<int>> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  monomials(vars, degree, cur, out);
  return out;
}

}  // namespace

std::vector<std::size_t> oracle_jacobian_dims(const Polynomial& f, std::size_t bound) {
  const std::size_t n = f.variables.size();
  int deg = -1;
  for (const auto& [e, c] : f.terms) {
    int d = 0;
    for (int a : e) d += a;
    if (deg >= 0 && d != deg) throw std::invalid_argument("oracle_jacobian_dims: f is not homogeneous");
    deg = d;
  }
  std::vector<std::map<std::vector<int>, Rational>> partials;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::vector<int>, Rational> p;
    for (const auto& [e, c] : f.terms) {
      if (e[i] == 0) continue;
      auto e2 = e;
      e2[i] -= 1;
      p[e2] += c * e[i];
    }
    if (!p.empty()) partials.push_back(std::move(p));
  }
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d <= bound; ++d) {
    const auto basis = monomials(n, static_cast<int>(d));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    Rows rows;
    const int md = static_cast<int>(d) - (deg - 1);
    if (md >= 0)
      for (const auto& p : partials)
        for (const auto& m : monomials(n, md)) {
          std::vector<Rational> row(basis.size());
          for (const auto& [e, c] : p) {
            auto e2 = e;
            for (std::size_t i = 0; i < n; ++i) e2[i] += m[i];
            row[index.at(e2)] += c;
          }
          rows.push_back(std::move(row));
        }
    out.push_back(basis.size() - oracle_rank(rows, basis.size()));
  }
  return out;
}

}  // namespace qahom::verify
