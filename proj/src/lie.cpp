#include "qahom/lie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qahom/error.hpp"

namespace qahom {

namespace {

bool odd(int n) { return n % 2 != 0; }
Rational koszul(int p, int q) { return odd(p) && odd(q) ? -1 : 1; }

bool is_zero(const LieVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::string lie_vec_string(const DGLie& g, const LieVector& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(v[k]) << ")" << g.name(k);
  }
  return first ? "0" : out.str();
}

void axpy(LieVector& acc, const Rational& s, const LieVector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) acc[k] += s * v[k];
}

}  // namespace

DGLie::DGLie(std::vector<int> degrees, std::vector<int> weights, std::vector<Rational> constants,
             std::optional<Matrix> differential, std::vector<std::string> names)
    : degrees_(std::move(degrees)), weights_(std::move(weights)), constants_(std::move(constants)),
      names_(std::move(names)) {
  const std::size_t n = degrees_.size();
  if (weights_.empty()) weights_.assign(n, 0);
  if (weights_.size() != n) throw std::invalid_argument("lie algebra: weights has wrong length");
  if (constants_.empty()) constants_.assign(n * n * n, Rational(0));
  if (constants_.size() != n * n * n) throw std::invalid_argument("lie algebra: wrong number of structure constants");
  d_ = differential ? *differential : Matrix(n, n);
  if (d_.rows() != n || d_.cols() != n) throw std::invalid_argument("lie algebra: differential has wrong shape");
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back("x" + std::to_string(i + 1));
  if (names_.size() != n) throw std::invalid_argument("lie algebra: names has wrong length");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(constant(i, j, k)) == 0) continue;
        if (degrees_[k] != degrees_[i] + degrees_[j] || weights_[k] != weights_[i] + weights_[j])
          throw InvariantError("bracket [" + names_[i] + ", " + names_[j] + "] has a component on " + names_[k] +
                               " of degree " + std::to_string(degrees_[k]) + " and weight " +
                               std::to_string(weights_[k]) + ", expected degree " +
                               std::to_string(degrees_[i] + degrees_[j]) + " and weight " +
                               std::to_string(weights_[i] + weights_[j]));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(d_(i, j)) == 0) continue;
      if (degrees_[i] != degrees_[j] + 1 || weights_[i] != weights_[j])
        throw InvariantError("d(" + names_[j] + ") has a component on " + names_[i] +
                             " that is not of degree +1 and equal weight");
    }
}

void DGLie::set_constant(std::size_t i, std::size_t j, std::size_t k, Rational value) {
  constants_.at((i * dim() + j) * dim() + k) = std::move(value);
}

LieVector DGLie::basis_vector(std::size_t i) const {
  LieVector v(dim());
  v[i] = 1;
  return v;
}

LieVector DGLie::bracket(std::size_t i, std::size_t j) const {
  LieVector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = constant(i, j, k);
  return v;
}

LieVector DGLie::bracket(const LieVector& x, const LieVector& y) const {
  LieVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(constant(i, j, k)) != 0) out[k] += c * constant(i, j, k);
    }
  }
  return out;
}

LieVector DGLie::apply_differential(const LieVector& x) const {
  LieVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(d_(i, j)) != 0) out[i] += d_(i, j) * x[j];
  return out;
}

bool DGLie::is_abelian() const {
  return std::all_of(constants_.begin(), constants_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

DGLie make_lie(std::vector<int> degrees, std::vector<int> weights, const std::vector<BracketEntry>& brackets,
               std::optional<Matrix> differential, std::vector<std::string> names) {
  const std::size_t n = degrees.size();
  std::vector<Rational> c(n * n * n);
  std::vector<bool> given(n * n, false);
  for (const BracketEntry& b : brackets) {
    if (b.i >= n || b.j >= n) throw std::invalid_argument("bracket index out of range");
    if (b.coeffs.size() != n) throw std::invalid_argument("bracket coefficient list has wrong length");
    if (given[b.i * n + b.j]) throw std::invalid_argument("bracket given twice");
    given[b.i * n + b.j] = true;
    for (std::size_t k = 0; k < n; ++k) c[(b.i * n + b.j) * n + k] = b.coeffs[k];
  }
  for (const BracketEntry& b : brackets) {
    if (b.i == b.j || given[b.j * n + b.i]) continue;
    const Rational s = -koszul(degrees[b.i], degrees[b.j]);
    for (std::size_t k = 0; k < n; ++k) c[(b.j * n + b.i) * n + k] = s * b.coeffs[k];
  }
  return DGLie(std::move(degrees), std::move(weights), std::move(c), std::move(differential), std::move(names));
}

AxiomReport check_lie_axioms(const DGLie& g) {
  AxiomReport rep;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++rep.checks;
      LieVector v = g.bracket(i, j);
      axpy(v, koszul(g.degree(i), g.degree(j)), g.bracket(j, i));
      if (!is_zero(v))
        rep.fail("antisymmetry fails at (" + g.name(i) + ", " + g.name(j) + "): [x,y] + (-1)^{pq}[y,x] = " +
                 lie_vec_string(g, v));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++rep.checks;
        const int p = g.degree(i), q = g.degree(j), r = g.degree(k);
        const LieVector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
        LieVector v(n);
        axpy(v, koszul(p, r), g.bracket(x, g.bracket(j, k)));
        axpy(v, koszul(p, q), g.bracket(y, g.bracket(k, i)));
        axpy(v, koszul(q, r), g.bracket(z, g.bracket(i, j)));
        if (!is_zero(v))
          rep.fail("Jacobi fails at (" + g.name(i) + ", " + g.name(j) + ", " + g.name(k) + "): sum = " +
                   lie_vec_string(g, v));
      }
  const Matrix dd = g.differential() * g.differential();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++rep.checks;
      if (sgn(dd(i, j)) != 0)
        rep.fail("d^2(" + g.name(j) + ") has coefficient " + to_string(dd(i, j)) + " on " + g.name(i));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++rep.checks;
      const LieVector x = g.basis_vector(i), y = g.basis_vector(j);
      LieVector v = g.apply_differential(g.bracket(i, j));
      axpy(v, -1, g.bracket(g.apply_differential(x), y));
      axpy(v, odd(g.degree(i)) ? 1 : -1, g.bracket(x, g.apply_differential(y)));
      if (!is_zero(v))
        rep.fail("Leibniz fails at (" + g.name(i) + ", " + g.name(j) + "): d[x,y] - [dx,y] - (-1)^{|x|}[x,dy] = " +
                 lie_vec_string(g, v));
    }
  return rep;
}

void require_lie_axioms(const DGLie& g) {
  const AxiomReport rep = check_lie_axioms(g);
  if (!rep.passed) throw InvariantError(rep.violations.front());
}

Complex underlying_complex(const DGLie& g) {
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < g.dim(); ++i) by_degree[g.degree(i)].push_back(i);
  std::map<int, FiltObject> objects;
  for (const auto& [n, idx] : by_degree) {
    std::vector<int> w;
    for (std::size_t i : idx) w.push_back(g.weight(i));
    objects.emplace(n, FiltObject(std::move(w)));
  }
  std::map<int, Matrix> diffs;
  for (const auto& [n, src] : by_degree) {
    auto it = by_degree.find(n + 1);
    if (it == by_degree.end()) continue;
    const auto& tgt = it->second;
    Matrix m(tgt.size(), src.size());
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) m(r, c) = g.differential()(tgt[r], src[c]);
    diffs.emplace(n, std::move(m));
  }
  return Complex(std::move(objects), std::move(diffs));
}

DGLie cone_lie(const DGLie& g) {
  const std::size_t n = g.dim();
  const std::size_t m = 2 * n;
  std::vector<int> degrees, weights;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    degrees.push_back(g.degree(i));
    weights.push_back(g.weight(i));
    names.push_back(g.name(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    degrees.push_back(g.degree(i) - 1);
    weights.push_back(g.weight(i));
    names.push_back("eps_" + g.name(i));
  }
  std::vector<Rational> c(m * m * m);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * m + j) * m + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = g.constant(i, j, k);
        if (sgn(v) == 0) continue;
        at(i, j, k) = v;
        at(n + i, j, n + k) = v;
        at(i, n + j, n + k) = odd(g.degree(i)) ? -v : v;
      }
  Matrix d(m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = g.differential()(i, j);
      d(n + i, n + j) = -g.differential()(i, j);
    }
  for (std::size_t j = 0; j < n; ++j) d(j, n + j) = 1;
  return DGLie(std::move(degrees), std::move(weights), std::move(c), std::move(d), std::move(names));
}

DGLie abelian_lie(std::size_t dim, int weight) {
  return DGLie(std::vector<int>(dim, 0), std::vector<int>(dim, weight), {});
}

std::vector<std::string> lie_library_names() {
  return {"abelian1", "abelian2", "abelian3", "abelian4", "sl2", "heisenberg", "solvable2", "odd"};
}

std::optional<DGLie> lie_library(const std::string& name) {
  if (name.starts_with("abelian") && name.size() == 8 && name[7] >= '1' && name[7] <= '4')
    return abelian_lie(static_cast<std::size_t>(name[7] - '0'));
  if (name == "sl2")
    return make_lie({0, 0, 0}, {0, 0, 0},
                    {{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}}, std::nullopt, {"h", "e", "f"});
  if (name == "heisenberg")
    return make_lie({0, 0, 0}, {1, 1, 2}, {{0, 1, {0, 0, 1}}}, std::nullopt, {"x", "y", "z"});
  if (name == "solvable2") return make_lie({0, 0}, {0, 1}, {{0, 1, {0, 1}}}, std::nullopt, {"x", "y"});
  if (name == "odd") return make_lie({-1, -2}, {1, 2}, {{0, 0, {0, 1}}}, std::nullopt, {"theta", "z"});
  return std::nullopt;
}

UEA::UEA(DGLie g, std::size_t bound) : g_(std::move(g)), bound_(bound) {
  std::vector<Word> layer{Word{}};
  basis_.push_back({});
  for (std::size_t len = 1; len <= bound_; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (std::size_t a = w.empty() ? 0 : w.back(); a < g_.dim(); ++a) {
        if (!w.empty() && a == w.back() && odd(g_.degree(a))) continue;
        Word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    if (next.empty()) break;
    basis_.insert(basis_.end(), next.begin(), next.end());
    layer = std::move(next);
  }
}

bool UEA::is_normal(const Word& w) const {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p] > w[p + 1]) return false;
    if (w[p] == w[p + 1] && odd(g_.degree(w[p]))) return false;
  }
  return true;
}

std::vector<std::size_t> UEA::normal_form_counts() const {
  std::vector<std::size_t> out(bound_ + 1, 0);
  for (const Word& w : basis_) ++out[w.size()];
  return out;
}

namespace {

void add_element(UEAElement& acc, const UEAElement& v, const Rational& s) {
  for (const auto& [w, c] : v) {
    auto [it, inserted] = acc.try_emplace(w, c * s);
    if (!inserted) {
      it->second += c * s;
      if (sgn(it->second) == 0) acc.erase(it);
    }
  }
}

}  // namespace

UEAElement UEA::normal_form(const Word& w) const {
  if (w.size() > bound_) throw std::invalid_argument("UEA: word longer than the truncation bound");
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  std::size_t p = 0;
  for (; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1] || (w[p] == w[p + 1] && odd(g_.degree(w[p])))) break;
  UEAElement out;
  if (p + 1 >= w.size()) {
    out.emplace(w, Rational(1));
  } else {
    const std::size_t a = w[p], b = w[p + 1];
    const Rational half = a == b ? Rational(1, 2) : Rational(1);
    if (a != b) {
      Word swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      add_element(out, normal_form(swapped), koszul(g_.degree(a), g_.degree(b)));
    }
    for (std::size_t k = 0; k < g_.dim(); ++k) {
      const Rational& c = g_.constant(a, b, k);
      if (sgn(c) == 0) continue;
      Word shorter(w.begin(), w.begin() + static_cast<long>(p));
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
      add_element(out, normal_form(shorter), c * half);
    }
  }
  cache_.emplace(w, out);
  return out;
}

UEAElement UEA::multiply(const UEAElement& a, const UEAElement& b) const {
  UEAElement out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_element(out, normal_form(w), cu * cv);
    }
  return out;
}

std::string UEA::describe(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += " ";
    out += g_.name(w[k]);
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

PbwReport pbw_check(const DGLie& g, std::size_t bound) {
  PbwReport rep;
  const std::size_t d = g.dim();

  rep.sym_dims.assign(bound + 1, 0);
  rep.sym_dims[0] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (odd(g.degree(i))) {
      for (std::size_t n = bound; n >= 1; --n) rep.sym_dims[n] += rep.sym_dims[n - 1];
    } else {
      for (std::size_t n = 1; n <= bound; ++n) rep.sym_dims[n] += rep.sym_dims[n - 1];
    }
  }

  // Words of T(g) indexed by length first, then base-d digits.
  std::vector<std::size_t> offset(bound + 2, 0);
  std::size_t power = 1;
  for (std::size_t len = 0; len <= bound; ++len) {
    offset[len + 1] = offset[len] + power;
    if (d > 0 && power > 50'000'000 / d) throw std::invalid_argument("pbw_check: tensor algebra too large");
    power *= d;
  }
  auto index_of = [&](const Word& w) {
    std::size_t v = 0;
    for (std::size_t a : w) v = v * d + a;
    return offset[w.size()] + v;
  };
  auto decode = [&](std::size_t len, std::size_t v) {
    Word w(len);
    for (std::size_t k = len; k-- > 0;) {
      w[k] = v % d;
      v /= d;
    }
    return w;
  };

  using Row = std::map<std::size_t, Rational>;
  std::unordered_map<std::size_t, Row> pivots;
  auto insert = [&](Row row) {
    while (!row.empty()) {
      const auto lead = row.rbegin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        return;
      }
      const Rational f = row.rbegin()->second / it->second.rbegin()->second;
      for (const auto& [col, c] : it->second) {
        auto [pos, inserted] = row.try_emplace(col, -f * c);
        if (!inserted) {
          pos->second -= f * c;
          if (sgn(pos->second) == 0) row.erase(pos);
        }
      }
    }
  };

  std::vector<std::size_t> rank_upto(bound + 1, 0);
  for (std::size_t len = 2; len <= bound; ++len) {
    for (std::size_t ul = 0; ul + 2 <= len; ++ul) {
      const std::size_t vl = len - 2 - ul;
      std::size_t ucount = 1, vcount = 1;
      for (std::size_t k = 0; k < ul; ++k) ucount *= d;
      for (std::size_t k = 0; k < vl; ++k) vcount *= d;
      for (std::size_t ui = 0; ui < ucount; ++ui) {
        const Word u = decode(ul, ui);
        for (std::size_t vi = 0; vi < vcount; ++vi) {
          const Word v = decode(vl, vi);
          for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y <= x; ++y) {
              if (x == y && !odd(g.degree(x))) continue;
              Row row;
              auto add = [&](const Word& mid, const Rational& c) {
                if (sgn(c) == 0) return;
                Word w = u;
                w.insert(w.end(), mid.begin(), mid.end());
                w.insert(w.end(), v.begin(), v.end());
                auto [pos, inserted] = row.try_emplace(index_of(w), c);
                if (!inserted) {
                  pos->second += c;
                  if (sgn(pos->second) == 0) row.erase(pos);
                }
              };
              add({x, y}, 1);
              add({y, x}, -koszul(g.degree(x), g.degree(y)));
              for (std::size_t k = 0; k < d; ++k) add({k}, -g.constant(x, y, k));
              insert(std::move(row));
            }
        }
      }
    }
    rank_upto[len] = pivots.size();
  }

  std::vector<std::size_t> u_dims(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) u_dims[n] = offset[n + 1] - rank_upto[n];
  rep.gr_dims.assign(bound + 1, 0);
  for (std::size_t n = 0; n <= bound; ++n) rep.gr_dims[n] = u_dims[n] - (n > 0 ? u_dims[n - 1] : 0);
  rep.normal_form_dims = UEA(g, bound).normal_form_counts();

  for (std::size_t n = 0; n <= bound; ++n) {
    if (rep.gr_dims[n] != rep.sym_dims[n] || rep.normal_form_dims[n] != rep.sym_dims[n]) {
      rep.passed = false;
      rep.witness = "n = " + std::to_string(n) + ": dim gr_n U = " + std::to_string(rep.gr_dims[n]) +
                    ", normal forms = " + std::to_string(rep.normal_form_dims[n]) +
                    ", dim Sym^n = " + std::to_string(rep.sym_dims[n]);
      break;
    }
  }
  return rep;
}

std::string CEResolution::describe(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += " ";
    out += cone.name(w[k]);
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

CEResolution ce_resolution(const DGLie& g, std::size_t bound) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.degree(i) != 0) throw std::invalid_argument("ce_resolution: g must be concentrated in degree 0");
  if (g.has_differential()) throw std::invalid_argument("ce_resolution: nonzero internal differential is not supported");

  CEResolution res{g, cone_lie(g), true, {}};
  const std::size_t n = g.dim();
  res.weighted = std::all_of(g.weights().begin(), g.weights().end(), [](int w) { return w >= 1; });
  const UEA u(res.cone, bound);

  auto word_weight = [&](const Word& w) {
    int s = 0;
    for (std::size_t a : w) s += res.cone.weight(a);
    return s;
  };
  auto eps_count = [&](const Word& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [&](std::size_t a) { return a >= n; }));
  };

  for (std::size_t idx = 0; idx <= bound; ++idx) {
    CEPiece piece;
    piece.index = static_cast<int>(idx);
    for (const Word& w : u.basis()) {
      const bool member = res.weighted ? word_weight(w) == static_cast<int>(idx) : w.size() <= idx;
      if (member) piece.basis[-eps_count(w)].push_back(w);
    }
    std::map<int, FiltObject> objects;
    std::map<int, std::map<Word, std::size_t>> position;
    for (const auto& [deg, words] : piece.basis) {
      objects.emplace(deg, FiltObject::trivial(words.size()));
      for (std::size_t k = 0; k < words.size(); ++k) position[deg].emplace(words[k], k);
    }
    std::map<int, Matrix> diffs;
    for (const auto& [deg, words] : piece.basis) {
      if (deg == 0) continue;
      Matrix m(piece.basis[deg + 1].size(), words.size());
      for (std::size_t col = 0; col < words.size(); ++col) {
        const Word& w = words[col];
        int eps_before = 0;
        for (std::size_t p = 0; p < w.size(); ++p) {
          if (w[p] < n) continue;
          Word replaced = w;
          replaced[p] = w[p] - n;
          const Rational sign = odd(eps_before) ? -1 : 1;
          for (const auto& [t, c] : u.normal_form(replaced)) {
            auto it = position[deg + 1].find(t);
            if (it == position[deg + 1].end())
              throw InvariantError("ce_resolution: d(" + res.describe(w) + ") leaves the piece at " + res.describe(t));
            m(it->second, col) += sign * c;
          }
          ++eps_before;
        }
      }
      diffs.emplace(deg, std::move(m));
    }
    piece.complex = Complex(std::move(objects), std::move(diffs));
    res.pieces.push_back(std::move(piece));
  }
  return res;
}

ChainMap ce_augmentation(const CEPiece& piece) {
  const Complex unit = Complex::concentrated(FiltObject::unit(), 0);
  auto it = piece.basis.find(0);
  if (it == piece.basis.end()) return ChainMap::zero(piece.complex, unit);
  Matrix m(1, it->second.size());
  for (std::size_t k = 0; k < it->second.size(); ++k)
    if (it->second[k].empty()) m(0, k) = 1;
  return ChainMap(piece.complex, unit, {{0, m}});
}

CEReport verify_ce_acyclicity(const CEResolution& res, std::size_t weight_bound) {
  CEReport rep;
  for (const CEPiece& piece : res.pieces) {
    if (piece.index > static_cast<int>(weight_bound)) continue;
    CEPieceReport pr;
    pr.index = piece.index;
    for (const auto& [deg, h] : reduced_cohomology(piece.complex))
      if (h.dim() > 0) pr.cohomology[deg] = h.dim();
    const bool expect_unit = !res.weighted || piece.index == 0;
    if (expect_unit) {
      pr.expected = pr.cohomology == std::map<int, std::size_t>{{0, 1}};
      try {
        const ChainMap aug = ce_augmentation(piece);
        pr.augmentation_ok = is_iso(induced_on_cohomology(aug, 0));
      } catch (const std::exception&) {
        pr.augmentation_ok = false;
      }
    } else {
      pr.expected = pr.cohomology.empty();
    }
    if (rep.passed && (!pr.expected || !pr.augmentation_ok)) {
      rep.passed = false;
      std::string dims;
      for (const auto& [deg, dim] : pr.cohomology) dims += " H^" + std::to_string(deg) + "=" + std::to_string(dim);
      rep.witness = std::string(res.weighted ? "weight " : "length cutoff ") + std::to_string(piece.index) + ":" +
                    (dims.empty() ? " acyclic" : dims) + (pr.augmentation_ok ? "" : ", augmentation not an iso on H^0");
    }
    rep.pieces.push_back(std::move(pr));
  }
  return rep;
}

Matrix derivation_from_generators(const GradedBasisAlgebra& a, const std::vector<Vec>& generator_values) {
  if (generator_values.size() != a.generators().size())
    throw std::invalid_argument("derivation: one value per generator required");
  Matrix m(a.dim(), a.dim());
  for (std::size_t col = 0; col < a.dim(); ++col) {
    const Word& w = a.word(col);
    for (std::size_t p = 0; p < w.size(); ++p)
      for (const auto& [u, c] : generator_values[w[p]]) {
        Word letters(w.begin(), w.begin() + static_cast<long>(p));
        letters.insert(letters.end(), a.word(u).begin(), a.word(u).end());
        letters.insert(letters.end(), w.begin() + static_cast<long>(p) + 1, w.end());
        for (const auto& [t, s] : a.normalize(letters)) m(t, col) += c * s;
      }
  }
  return m;
}

namespace {

// theta_S theta_T for sorted odd monomials encoded as bitmasks.
std::optional<std::pair<int, unsigned>> wedge(unsigned s, unsigned t) {
  if (s & t) return std::nullopt;
  int inversions = 0;
  for (unsigned x = s; x; x &= x - 1) {
    const int i = __builtin_ctz(x);
    inversions += __builtin_popcount(t & ((1u << i) - 1));
  }
  return std::pair{inversions % 2 ? -1 : 1, s | t};
}

}  // namespace

DerivedQuotient derived_quotient(const DGLie& g, const GradedBasisAlgebra& a, const std::vector<Matrix>& action) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(i) != 0) throw std::invalid_argument("derived_quotient: g must sit in degree 0");
  if (g.has_differential()) throw std::invalid_argument("derived_quotient: g must have zero differential");
  if (n > 16) throw std::invalid_argument("derived_quotient: g too large");
  if (!a.commutative()) throw std::invalid_argument("derived_quotient: A must be commutative");
  for (const Generator& gen : a.generators())
    if (gen.degree != 0 || gen.weight < 1)
      throw std::invalid_argument("derived_quotient: A generators must have degree 0 and positive weight");
  if (action.size() != n) throw std::invalid_argument("derived_quotient: one operator per basis element of g");
  for (const Matrix& m : action)
    if (m.rows() != a.dim() || m.cols() != a.dim())
      throw std::invalid_argument("derived_quotient: operator has wrong shape");

  const std::size_t bound = a.bound();
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t col = 0; col < a.dim(); ++col)
      for (std::size_t row = 0; row < a.dim(); ++row) {
        if (sgn(action[i](row, col)) == 0) continue;
        if (a.weight(row) != a.weight(col) + g.weight(i))
          throw InvariantError("action of " + g.name(i) + " on " + a.describe(col) + " has a term " +
                               a.describe(row) + " of the wrong weight");
        if (a.length(col) == 1 && a.length(row) > 1) r = std::max(r, a.length(row) - 1);
      }

  auto column = [&](const Matrix& m, std::size_t col) {
    Vec v;
    for (std::size_t row = 0; row < m.rows(); ++row) add_term(v, row, m(row, col));
    return v;
  };
  auto apply = [&](const Matrix& m, const Vec& v) {
    Vec out;
    for (const auto& [col, c] : v) add_to(out, column(m, col), c);
    return out;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < a.dim(); ++p)
      for (std::size_t q = 0; q < a.dim(); ++q) {
        if (a.length(p) + a.length(q) + r > bound) continue;
        const Vec lhs = apply(action[i], *a.product(p, q));
        Vec rhs = a.multiply(column(action[i], p), Vec{{q, Rational(1)}});
        add_to(rhs, a.multiply(Vec{{p, Rational(1)}}, column(action[i], q)));
        if (lhs != rhs)
          throw InvariantError("action of " + g.name(i) + " is not a derivation at (" + a.describe(p) + ", " +
                               a.describe(q) + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix comm = action[i] * action[j] - action[j] * action[i];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(g.constant(i, j, k)) != 0) comm -= g.constant(i, j, k) * action[k];
      for (std::size_t col = 0; col < a.dim(); ++col) {
        if (a.length(col) + 2 * r > bound) continue;
        for (std::size_t row = 0; row < a.dim(); ++row)
          if (sgn(comm(row, col)) != 0)
            throw InvariantError("action is not a representation: [D_" + g.name(i) + ", D_" + g.name(j) +
                                 "] differs from the bracket on " + a.describe(col));
      }
    }

  int positive = 0;
  for (std::size_t i = 0; i < n; ++i) positive += std::max(g.weight(i), 0);
  const unsigned subsets = 1u << n;
  auto theta_weight = [&](unsigned s) {
    int w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) w += g.weight(i);
    return w;
  };
  auto label = [&](unsigned s, std::size_t av) {
    std::string t;
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) t += (t.empty() ? "" : " ") + std::string("th_") + g.name(i);
    return (t.empty() ? std::string("1") : t) + " (x) " + a.describe(av);
  };

  // d theta^k = -sum_{i<j} c_ij^k theta^i theta^j
  std::vector<std::vector<std::pair<unsigned, Rational>>> dtheta(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sgn(g.constant(i, j, k)) != 0) dtheta[k].emplace_back((1u << i) | (1u << j), -g.constant(i, j, k));

  DerivedQuotient out;
  const int max_complete = static_cast<int>(bound) - positive;
  for (int w = -positive; w <= max_complete; ++w) {
    DerivedQuotientPiece piece;
    piece.weight = w;
    std::map<int, std::vector<std::pair<unsigned, std::size_t>>> basis;
    for (unsigned s = 0; s < subsets; ++s)
      for (std::size_t av = 0; av < a.dim(); ++av)
        if (a.weight(av) - theta_weight(s) == w) basis[__builtin_popcount(s)].push_back({s, av});
    std::map<int, FiltObject> objects;
    std::map<int, std::map<std::pair<unsigned, std::size_t>, std::size_t>> position;
    for (const auto& [deg, elems] : basis) {
      objects.emplace(deg, FiltObject::trivial(elems.size()));
      for (std::size_t k = 0; k < elems.size(); ++k) {
        position[deg].emplace(elems[k], k);
        piece.basis[deg].push_back(label(elems[k].first, elems[k].second));
      }
    }
    std::map<int, Matrix> diffs;
    for (const auto& [deg, elems] : basis) {
      if (!basis.contains(deg + 1)) continue;
      Matrix m(basis[deg + 1].size(), elems.size());
      auto put = [&](unsigned s, std::size_t av, const Rational& c, std::size_t col) {
        auto it = position[deg + 1].find({s, av});
        if (it == position[deg + 1].end()) throw std::logic_error("derived_quotient: incomplete weight piece");
        m(it->second, col) += c;
      };
      for (std::size_t col = 0; col < elems.size(); ++col) {
        const auto [s, av] = elems[col];
        // d(theta_S) (x) a
        int p = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (!(s & (1u << k))) continue;
          const unsigned pre = s & ((1u << k) - 1);
          const unsigned post = s & ~((2u << k) - 1);
          for (const auto& [pair, c] : dtheta[k]) {
            auto first = wedge(pre, pair);
            if (!first) continue;
            auto second = wedge(first->second, post);
            if (!second) continue;
            put(second->second, av, c * (p % 2 ? -1 : 1) * first->first * second->first, col);
          }
          ++p;
        }
        // (-1)^{|S|} theta_S theta^i (x) D_i a
        const int sign_s = __builtin_popcount(s) % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) {
          auto prod = wedge(s, 1u << i);
          if (!prod) continue;
          for (std::size_t row = 0; row < a.dim(); ++row)
            if (sgn(action[i](row, av)) != 0) put(prod->second, row, action[i](row, av) * sign_s * prod->first, col);
        }
      }
      diffs.emplace(deg, std::move(m));
    }
    piece.complex = Complex(std::move(objects), std::move(diffs));
    for (const auto& [deg, h] : reduced_cohomology(piece.complex))
      if (h.dim() > 0) piece.cohomology[deg] = h.dim();
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

}  // namespace qahom
