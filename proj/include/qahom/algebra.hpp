#pragma once

// Truncated free constructions (tensor, symmetric, exterior algebras) on a
// finite set of homogeneous generators, with Koszul signs and a derivation.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qahom/complex.hpp"

namespace qahom {

struct Generator {
  std::string name;
  int degree = 0;
  int weight = 0;
};

using Word = std::vector<std::size_t>;
/// Sparse linear combination of basis elements.
using Vec = std::map<std::size_t, Rational>;

void add_to(Vec& acc, const Vec& v, const Rational& scale = 1);
void add_term(Vec& acc, std::size_t index, const Rational& coeff);

enum class AlgebraKind { free_associative, graded_commutative };

class GradedBasisAlgebra {
 public:
  // Basis: all normal-form words of length <= bound. Free: every word.
  // Graded commutative: nondecreasing words, odd generators at most once.
  GradedBasisAlgebra(AlgebraKind kind, std::vector<Generator> generators, std::size_t bound);

  AlgebraKind kind() const { return kind_; }
  bool commutative() const { return kind_ == AlgebraKind::graded_commutative; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t bound() const { return bound_; }

  std::size_t dim() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  std::size_t length(std::size_t i) const { return words_[i].size(); }
  int degree(std::size_t i) const;
  int weight(std::size_t i) const;
  std::optional<std::size_t> index_of(const Word& w) const;
  std::size_t unit() const { return 0; }
  std::size_t generator_index(std::size_t g) const;
  std::string describe(std::size_t i) const;

  /// Normal form of an arbitrary product of generators; empty when it vanishes
  /// or exceeds the bound.
  Vec normalize(const Word& letters) const;

  /// Stored product of two basis elements (absent beyond the truncation).
  std::optional<Vec> product(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the stored table; pairs beyond the bound are skipped.
  Vec multiply(const Vec& a, const Vec& b) const;

  // Sets d on a generator and re-extends it to every basis word as a
  // derivation (Koszul signs); terms that would exceed the bound are dropped.
  void set_generator_differential(std::size_t g, Vec value);
  const Vec& differential(std::size_t i) const { return d_[i]; }
  Vec apply_differential(const Vec& v) const;
  /// Largest word-length increase of d on a generator.
  std::size_t differential_excess() const;
  bool has_differential() const;

  // Raw overrides of stored data; no re-validation. Used to build negative
  // controls.
  void set_product(std::size_t i, std::size_t j, Vec value);
  void set_differential_value(std::size_t i, Vec value);

  /// Number of basis words per (degree, weight).
  std::map<std::pair<int, int>, std::size_t> graded_dims() const;
  std::vector<std::size_t> dims_by_length() const;

 private:
  Vec derivation(const Word& w) const;

  AlgebraKind kind_;
  std::vector<Generator> generators_;
  std::size_t bound_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> table_;
  std::vector<Vec> generator_d_;
  std::vector<Vec> d_;
};

/// T(M) truncated at word length bound.
GradedBasisAlgebra tensor_algebra(const Complex& m, std::size_t bound);
/// Sym(M) truncated at polynomial degree bound.
GradedBasisAlgebra symmetric_algebra(const Complex& m, std::size_t bound);
/// Sym(M[1]): every generator one degree lower, differential negated.
GradedBasisAlgebra exterior_algebra(const Complex& m, std::size_t bound);
/// Q[x_1..x_n] in degree 0 with the given weights.
GradedBasisAlgebra polynomial_algebra(const std::vector<std::string>& names, const std::vector<int>& weights,
                                      std::size_t bound);

struct AxiomReport {
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> violations;  // first few, in check order

  void fail(std::string message);
};

/// Associativity, unit, declared graded commutativity, d^2 = 0 and Leibniz
/// d(xy) = (dx)y + (-1)^{|x|} x(dy), on every basis pair/triple whose result
/// the truncation determines.
AxiomReport check_dga_axioms(const GradedBasisAlgebra& a);

}  // namespace qahom
