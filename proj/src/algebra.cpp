#include "qahom/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qahom/error.hpp"

namespace qahom {

void add_term(Vec& acc, std::size_t index, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = acc.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

void add_to(Vec& acc, const Vec& v, const Rational& scale) {
  for (const auto& [i, c] : v) add_term(acc, i, c * scale);
}

namespace {

bool odd(int n) { return n % 2 != 0; }

std::string vec_string(const GradedBasisAlgebra& a, const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")" << a.describe(i);
  }
  return out.str();
}

}  // namespace

GradedBasisAlgebra::GradedBasisAlgebra(AlgebraKind kind, std::vector<Generator> generators, std::size_t bound)
    : kind_(kind), generators_(std::move(generators)), bound_(bound) {
  // Breadth first so that words are ordered by length.
  std::vector<Word> layer{Word{}};
  words_.push_back({});
  for (std::size_t len = 1; len <= bound_; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (commutative() && !w.empty()) {
          if (g < w.back()) continue;
          if (g == w.back() && odd(generators_[g].degree)) continue;
        }
        Word v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    }
    for (const Word& w : next) words_.push_back(w);
    layer = std::move(next);
    if (layer.empty()) break;
  }
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);

  for (std::size_t i = 0; i < words_.size(); ++i)
    for (std::size_t j = 0; j < words_.size(); ++j) {
      if (words_[i].size() + words_[j].size() > bound_) continue;
      Word w = words_[i];
      w.insert(w.end(), words_[j].begin(), words_[j].end());
      table_.emplace(std::pair{i, j}, normalize(w));
    }
  generator_d_.assign(generators_.size(), Vec{});
  d_.assign(words_.size(), Vec{});
}

int GradedBasisAlgebra::degree(std::size_t i) const {
  int s = 0;
  for (std::size_t g : words_[i]) s += generators_[g].degree;
  return s;
}

int GradedBasisAlgebra::weight(std::size_t i) const {
  int s = 0;
  for (std::size_t g : words_[i]) s += generators_[g].weight;
  return s;
}

std::optional<std::size_t> GradedBasisAlgebra::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedBasisAlgebra::generator_index(std::size_t g) const {
  auto i = index_of(Word{g});
  if (!i) throw std::invalid_argument("generator outside the truncation");
  return *i;
}

std::string GradedBasisAlgebra::describe(std::size_t i) const {
  const Word& w = words_[i];
  if (w.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t run = 1;
    while (commutative() && k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += commutative() ? "*" : "(x)";
    out += generators_[w[k]].name;
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

Vec GradedBasisAlgebra::normalize(const Word& letters) const {
  if (letters.size() > bound_) return {};
  Word w = letters;
  int sign = 1;
  if (commutative()) {
    for (std::size_t i = 1; i < w.size(); ++i)
      for (std::size_t k = i; k > 0 && w[k - 1] > w[k]; --k) {
        if (odd(generators_[w[k - 1]].degree) && odd(generators_[w[k]].degree)) sign = -sign;
        std::swap(w[k - 1], w[k]);
      }
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] == w[i - 1] && odd(generators_[w[i]].degree)) return {};
  }
  auto idx = index_of(w);
  if (!idx) return {};
  return Vec{{*idx, Rational(sign)}};
}

std::optional<Vec> GradedBasisAlgebra::product(std::size_t i, std::size_t j) const {
  auto it = table_.find({i, j});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

Vec GradedBasisAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b)
      if (auto p = product(i, j)) add_to(out, *p, ci * cj);
  return out;
}

Vec GradedBasisAlgebra::derivation(const Word& w) const {
  Vec out;
  int prefix_degree = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const Rational sign = odd(prefix_degree) ? -1 : 1;
    for (const auto& [u, c] : generator_d_[w[pos]]) {
      Word letters(w.begin(), w.begin() + static_cast<long>(pos));
      letters.insert(letters.end(), words_[u].begin(), words_[u].end());
      letters.insert(letters.end(), w.begin() + static_cast<long>(pos) + 1, w.end());
      if (letters.size() > bound_) continue;
      add_to(out, normalize(letters), sign * c);
    }
    prefix_degree += generators_[w[pos]].degree;
  }
  return out;
}

void GradedBasisAlgebra::set_generator_differential(std::size_t g, Vec value) {
  if (g >= generators_.size()) throw std::invalid_argument("set_generator_differential: generator out of range");
  for (const auto& [u, c] : value) {
    if (u >= words_.size()) throw std::invalid_argument("set_generator_differential: basis index out of range");
    if (degree(u) != generators_[g].degree + 1)
      throw InvariantError("d(" + generators_[g].name + ") has a term " + describe(u) + " of degree " +
                           std::to_string(degree(u)) + ", expected " + std::to_string(generators_[g].degree + 1));
  }
  generator_d_[g] = std::move(value);
  for (std::size_t i = 0; i < words_.size(); ++i) d_[i] = derivation(words_[i]);
}

Vec GradedBasisAlgebra::apply_differential(const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : v) add_to(out, d_[i], c);
  return out;
}

std::size_t GradedBasisAlgebra::differential_excess() const {
  std::size_t r = 0;
  for (const Vec& v : generator_d_)
    for (const auto& [u, c] : v) r = std::max(r, words_[u].size() > 0 ? words_[u].size() - 1 : std::size_t{0});
  return r;
}

bool GradedBasisAlgebra::has_differential() const {
  return std::any_of(d_.begin(), d_.end(), [](const Vec& v) { return !v.empty(); });
}

void GradedBasisAlgebra::set_product(std::size_t i, std::size_t j, Vec value) { table_[{i, j}] = std::move(value); }

void GradedBasisAlgebra::set_differential_value(std::size_t i, Vec value) { d_.at(i) = std::move(value); }

std::map<std::pair<int, int>, std::size_t> GradedBasisAlgebra::graded_dims() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) ++out[{degree(i), weight(i)}];
  return out;
}

std::vector<std::size_t> GradedBasisAlgebra::dims_by_length() const {
  std::vector<std::size_t> out(bound_ + 1, 0);
  for (const Word& w : words_) ++out[w.size()];
  return out;
}

namespace {

struct GeneratorLayout {
  std::vector<Generator> generators;
  std::map<std::pair<int, std::size_t>, std::size_t> position;  // (degree, basis index) -> generator
};

GeneratorLayout layout(const Complex& m, int degree_shift) {
  GeneratorLayout out;
  for (int n : m.support()) {
    const FiltObject& v = m.object(n);
    for (std::size_t i = 0; i < v.dim(); ++i) {
      out.position.emplace(std::pair{n, i}, out.generators.size());
      out.generators.push_back({"x" + std::to_string(out.generators.size()), n + degree_shift, v.weight(i)});
    }
  }
  return out;
}

GradedBasisAlgebra free_construction(AlgebraKind kind, const Complex& m, std::size_t bound, int shift) {
  GeneratorLayout gl = layout(m, shift);
  GradedBasisAlgebra a(kind, gl.generators, bound);
  if (bound == 0) return a;
  const Rational sign = shift % 2 == 0 ? 1 : -1;
  for (int n : m.support()) {
    const Matrix d = m.differential_matrix(n);
    for (std::size_t j = 0; j < m.object(n).dim(); ++j) {
      Vec value;
      for (std::size_t i = 0; i < d.rows(); ++i)
        if (sgn(d(i, j)) != 0) add_term(value, a.generator_index(gl.position.at({n + 1, i})), sign * d(i, j));
      if (!value.empty()) a.set_generator_differential(gl.position.at({n, j}), std::move(value));
    }
  }
  return a;
}

}  // namespace

GradedBasisAlgebra tensor_algebra(const Complex& m, std::size_t bound) {
  return free_construction(AlgebraKind::free_associative, m, bound, 0);
}

GradedBasisAlgebra symmetric_algebra(const Complex& m, std::size_t bound) {
  return free_construction(AlgebraKind::graded_commutative, m, bound, 0);
}

GradedBasisAlgebra exterior_algebra(const Complex& m, std::size_t bound) {
  return free_construction(AlgebraKind::graded_commutative, m, bound, -1);
}

GradedBasisAlgebra polynomial_algebra(const std::vector<std::string>& names, const std::vector<int>& weights,
                                      std::size_t bound) {
  if (names.size() != weights.size()) throw std::invalid_argument("polynomial_algebra: names/weights mismatch");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < names.size(); ++i) gens.push_back({names[i], 0, weights[i]});
  return GradedBasisAlgebra(AlgebraKind::graded_commutative, std::move(gens), bound);
}

void AxiomReport::fail(std::string message) {
  passed = false;
  ++failures;
  if (violations.size() < 10) violations.push_back(std::move(message));
}

AxiomReport check_dga_axioms(const GradedBasisAlgebra& a) {
  AxiomReport rep;
  const std::size_t n = a.dim();
  const std::size_t bound = a.bound();
  auto basis = [](std::size_t i) { return Vec{{i, Rational(1)}}; };

  for (std::size_t i = 0; i < n; ++i) {
    ++rep.checks;
    if (a.product(a.unit(), i) != basis(i) || a.product(i, a.unit()) != basis(i))
      rep.fail("unit: 1*" + a.describe(i) + " or " + a.describe(i) + "*1 differs from " + a.describe(i));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.length(i) + a.length(j) > bound) continue;
      const Vec ij = *a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (a.length(i) + a.length(j) + a.length(k) > bound) continue;
        ++rep.checks;
        const Vec lhs = a.multiply(ij, basis(k));
        const Vec rhs = a.multiply(basis(i), *a.product(j, k));
        if (lhs != rhs)
          rep.fail("associativity at (" + a.describe(i) + ", " + a.describe(j) + ", " + a.describe(k) +
                   "): (xy)z = " + vec_string(a, lhs) + ", x(yz) = " + vec_string(a, rhs));
      }
    }

  if (a.commutative()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (a.length(i) + a.length(j) > bound) continue;
        ++rep.checks;
        Vec swapped;
        const int s = (odd(a.degree(i)) && odd(a.degree(j))) ? -1 : 1;
        add_to(swapped, *a.product(j, i), s);
        if (*a.product(i, j) != swapped)
          rep.fail("graded commutativity at (" + a.describe(i) + ", " + a.describe(j) + ")");
      }
  }

  const std::size_t r = a.differential_excess();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [u, c] : a.differential(i)) {
      if (a.degree(u) != a.degree(i) + 1)
        rep.fail("d(" + a.describe(i) + ") has a term " + a.describe(u) + " of the wrong degree");
    }
    if (a.length(i) + 2 * r > bound) continue;
    ++rep.checks;
    const Vec dd = a.apply_differential(a.differential(i));
    if (!dd.empty()) rep.fail("d^2(" + a.describe(i) + ") = " + vec_string(a, dd));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.length(i) + a.length(j) + r > bound) continue;
      ++rep.checks;
      const Vec lhs = a.apply_differential(*a.product(i, j));
      Vec rhs = a.multiply(a.differential(i), basis(j));
      add_to(rhs, a.multiply(basis(i), a.differential(j)), odd(a.degree(i)) ? -1 : 1);
      if (lhs != rhs)
        rep.fail("Leibniz at (" + a.describe(i) + ", " + a.describe(j) + "): d(xy) = " + vec_string(a, lhs) +
                 ", (dx)y +- x(dy) = " + vec_string(a, rhs));
    }
  return rep;
}

}  // namespace qahom
