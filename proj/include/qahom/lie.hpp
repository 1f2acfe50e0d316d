#pragma once

// dg-Lie algebras given by structure constants, the cone g (+) g[1], truncated
// universal enveloping algebras in PBW normal form, Chevalley-Eilenberg
// resolutions and the derived quotient complex.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qahom/algebra.hpp"
#include "qahom/complex.hpp"

namespace qahom {

using LieVector = std::vector<Rational>;

class DGLie {
 public:
  DGLie() = default;
  // constants[(i * dim + j) * dim + k] is the coefficient of e_k in [e_i, e_j];
  // differential(i, j) is the coefficient of e_i in d e_j. Throws
  // std::invalid_argument on shape errors and InvariantError when a bracket
  // or d is not homogeneous in degree and weight.
  DGLie(std::vector<int> degrees, std::vector<int> weights, std::vector<Rational> constants,
        std::optional<Matrix> differential = std::nullopt, std::vector<std::string> names = {});

  std::size_t dim() const { return degrees_.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  // Raw override, no re-validation (negative controls).
  void set_constant(std::size_t i, std::size_t j, std::size_t k, Rational value);
  const std::vector<Rational>& constants() const { return constants_; }

  LieVector bracket(std::size_t i, std::size_t j) const;
  LieVector bracket(const LieVector& x, const LieVector& y) const;
  const Matrix& differential() const { return d_; }
  LieVector apply_differential(const LieVector& x) const;
  bool has_differential() const { return !d_.is_zero(); }
  bool is_abelian() const;
  LieVector basis_vector(std::size_t i) const;

 private:
  std::vector<int> degrees_;
  std::vector<int> weights_;
  std::vector<Rational> constants_;
  Matrix d_;
  std::vector<std::string> names_;
};

/// Builds constants from a list of brackets [e_i, e_j] = sum coeffs[k] e_k;
/// missing [e_j, e_i] are filled in by graded antisymmetry.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  LieVector coeffs;
};
DGLie make_lie(std::vector<int> degrees, std::vector<int> weights, const std::vector<BracketEntry>& brackets,
               std::optional<Matrix> differential = std::nullopt, std::vector<std::string> names = {});

/// Graded antisymmetry, graded Jacobi, d^2 = 0 and d[x,y] = [dx,y] + (-1)^{|x|}[x,dy]
/// on all basis pairs and triples.
AxiomReport check_lie_axioms(const DGLie& g);
/// Throws InvariantError carrying the first violation.
void require_lie_axioms(const DGLie& g);

/// The underlying complex, filtered by the auxiliary weights.
Complex underlying_complex(const DGLie& g);

/// g (+) eps g with eps g = g[1]: d(eps y) = y - eps dy, [eps y, x] = eps[y, x],
/// [x, eps y] = (-1)^{|x|} eps[x, y], [eps y, eps y'] = 0. Basis: g first.
DGLie cone_lie(const DGLie& g);

// Named examples: abelian1..abelian4, sl2, heisenberg, solvable2, odd.
std::optional<DGLie> lie_library(const std::string& name);
std::vector<std::string> lie_library_names();
DGLie abelian_lie(std::size_t dim, int weight = 1);

using UEAElement = std::map<Word, Rational>;

/// U(g) truncated at PBW length bound, in normal form: nondecreasing words in
/// the basis indices, odd letters not repeated.
class UEA {
 public:
  UEA(DGLie g, std::size_t bound);

  const DGLie& lie() const { return g_; }
  std::size_t bound() const { return bound_; }
  bool is_normal(const Word& w) const;
  /// Normal words ordered by length, then lexicographically.
  const std::vector<Word>& basis() const { return basis_; }
  std::vector<std::size_t> normal_form_counts() const;

  // Rewrites with x_a x_b -> (-1)^{|a||b|} x_b x_a + [x_a, x_b] at the first
  // descent. Throws std::invalid_argument for words longer than the bound.
  UEAElement normal_form(const Word& w) const;
  UEAElement multiply(const UEAElement& a, const UEAElement& b) const;
  std::string describe(const Word& w) const;

 private:
  DGLie g_;
  std::size_t bound_;
  std::vector<Word> basis_;
  mutable std::map<Word, UEAElement> cache_;
};

struct PbwReport {
  bool passed = true;
  std::vector<std::size_t> sym_dims;           // dim Sym^n(g)
  std::vector<std::size_t> gr_dims;            // dim U^{<=n} - dim U^{<=n-1}, from the presentation
  std::vector<std::size_t> normal_form_dims;   // normal words of length n
  std::string witness;
};

/// Compares dim gr_n U(g) with dim Sym^n(g) for n <= bound. dim U^{<=n} is
/// computed from T(g)^{<=n} modulo the span of the defining relations inside
/// it; the normal-form count is reported alongside.
PbwReport pbw_check(const DGLie& g, std::size_t bound);

struct CEPiece {
  int index = 0;  // auxiliary weight, or PBW-length cutoff when unweighted
  Complex complex;
  std::map<int, std::vector<Word>> basis;  // degree -> words of U(cone g) in normal form
};

struct CEResolution {
  DGLie lie;
  DGLie cone;
  bool weighted = false;
  std::vector<CEPiece> pieces;

  std::string describe(const Word& w) const;
};

// U(g) (x) /\g realized inside U(g (+) g[1]). When every weight is positive
// the pieces are the weight pieces 0..bound; otherwise they are the
// subcomplexes of PBW length <= L for L = 0..bound. Throws
// std::invalid_argument unless g sits in degree 0 with zero differential.
CEResolution ce_resolution(const DGLie& g, std::size_t bound);

/// Counit U(g) (x) /\^0 g -> R on a piece containing the unit word.
ChainMap ce_augmentation(const CEPiece& piece);

struct CEPieceReport {
  int index = 0;
  std::map<int, std::size_t> cohomology;  // degree -> dim
  bool expected = true;
  bool augmentation_ok = true;
};

struct CEReport {
  bool passed = true;
  std::vector<CEPieceReport> pieces;
  std::string witness;
};

/// Positive weights: acyclic; weight 0 (or any length cutoff): R in degree 0
/// with the augmentation a chain map inducing an iso on H^0.
CEReport verify_ce_acyclicity(const CEResolution& res, std::size_t weight_bound);

/// Extends values on the generators of a degree-0 commutative algebra to a
/// derivation matrix on its basis; terms beyond the truncation are dropped.
Matrix derivation_from_generators(const GradedBasisAlgebra& a, const std::vector<Vec>& generator_values);

struct DerivedQuotientPiece {
  int weight = 0;
  Complex complex;
  std::map<int, std::vector<std::string>> basis;  // degree -> labels theta_S (x) a
  std::map<int, std::size_t> cohomology;
};

struct DerivedQuotient {
  std::vector<DerivedQuotientPiece> pieces;  // ascending weight, only weights the truncation fully determines
};

// /\g' (x) A with d a = sum_i theta^i (x) D_i a and d theta^k = -sum_{i<j}
// c_ij^k theta^i theta^j, extended as a derivation. The action must satisfy
// [D_i, D_j] = sum_k c_ij^k D_k. Throws InvariantError (with a witness) when the
// action is not homogeneous, not by derivations or not a representation.
DerivedQuotient derived_quotient(const DGLie& g, const GradedBasisAlgebra& a, const std::vector<Matrix>& action);

}  // namespace qahom
