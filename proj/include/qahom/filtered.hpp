#pragma once

// Finite-dimensional filtered vector spaces over Q: the computable
// quasi-abelian category. An object is a space with an adapted basis; basis
// vector i has weight w_i and the filtration is F_p = span{e_i : w_i <= p}.

#include <cstddef>
#include <string>
#include <vector>

#include "qahom/matrix.hpp"

namespace qahom {

class FiltObject {
 public:
  FiltObject() = default;
  explicit FiltObject(std::vector<int> weights) : weights_(std::move(weights)) {}

  static FiltObject unit() { return FiltObject({0}); }
  static FiltObject zero() { return FiltObject(); }
  /// All weights zero: the abelian instance.
  static FiltObject trivial(std::size_t dim) { return FiltObject(std::vector<int>(dim, 0)); }

  std::size_t dim() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }

  /// dim F_p.
  std::size_t filtration_dim(int p) const;
  /// Weights in ascending order; equal exactly when two objects are isomorphic.
  std::vector<int> weight_profile() const;

  friend bool operator==(const FiltObject&, const FiltObject&) = default;

 private:
  std::vector<int> weights_;
};

std::string describe(const FiltObject& v);

/// A filtration-preserving linear map, stored as a target.dim x source.dim matrix.
class FiltMorphism {
 public:
  // Throws InvariantError when an entry (i, j) is nonzero although
  // target weight i exceeds source weight j.
  FiltMorphism(FiltObject source, FiltObject target, Matrix matrix);

  static FiltMorphism identity(const FiltObject& v);
  static FiltMorphism zero(const FiltObject& source, const FiltObject& target);

  const FiltObject& source() const { return source_; }
  const FiltObject& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  std::size_t rank() const;
  bool is_mono() const;
  bool is_epi() const;

  friend bool operator==(const FiltMorphism&, const FiltMorphism&) = default;

 private:
  FiltObject source_;
  FiltObject target_;
  Matrix matrix_;
};

/// Does the matrix respect the filtrations? (No exception variant.)
bool preserves_filtration(const FiltObject& source, const FiltObject& target, const Matrix& m);

/// g after f.
FiltMorphism compose(const FiltMorphism& g, const FiltMorphism& f);
FiltMorphism operator+(const FiltMorphism& a, const FiltMorphism& b);
FiltMorphism operator*(const Rational& s, const FiltMorphism& f);

/// A subspace with the induced filtration and its (strict mono) inclusion.
struct SubObject {
  FiltObject object;
  Matrix inclusion;                  // ambient.dim x object.dim
  std::vector<std::size_t> pivots;   // coordinate where basis vector r has a 1 and all others vanish
};

/// A quotient with the quotient filtration, its (strict epi) projection,
/// and a filtration-preserving section picking basis representatives.
struct QuotientObject {
  FiltObject object;
  Matrix projection;  // object.dim x ambient.dim
  Matrix section;     // ambient.dim x object.dim, projection * section = id
};

// Induced filtration on the column span of `spanning`; basis vectors are
// ordered by their pivot coordinate.
SubObject subspace(const FiltObject& ambient, const Matrix& spanning);
// Quotient of `ambient` by the column span of `spanning`.
QuotientObject quotient(const FiltObject& ambient, const Matrix& spanning);

/// Coordinates of vectors (columns) lying in the subspace. Throws
/// std::invalid_argument if some column is not in it.
Matrix coordinates(const SubObject& sub, const Matrix& vectors);

struct KernelResult {
  FiltObject object;
  FiltMorphism inclusion;
};
struct CokernelResult {
  FiltObject object;
  FiltMorphism projection;
};

KernelResult kernel(const FiltMorphism& f);
CokernelResult cokernel(const FiltMorphism& f);
/// Im f = ker(target -> Coker f), subspace filtration from the target.
KernelResult image(const FiltMorphism& f);
/// Coim f = coker(Ker f -> source), quotient filtration from the source.
CokernelResult coimage(const FiltMorphism& f);
/// The canonical bijection Coim f -> Im f.
FiltMorphism coimage_to_image(const FiltMorphism& f);

/// Coim f -> Im f is an isomorphism of filtered objects.
bool is_strict(const FiltMorphism& f);
bool is_strict_mono(const FiltMorphism& f);
bool is_strict_epi(const FiltMorphism& f);
/// Bijective with filtration-preserving inverse.
bool is_iso(const FiltMorphism& f);

struct FactoredMorphism {
  FiltMorphism strict_epi;  // source -> Coim f
  FiltMorphism mono;        // Coim f -> target
};
/// f = mono o strict_epi.
FactoredMorphism factor(const FiltMorphism& f);

struct ImageFactorization {
  FiltMorphism epi;          // source -> Im f
  FiltMorphism strict_mono;  // Im f -> target
};
/// f = strict_mono o epi.
ImageFactorization factor_through_image(const FiltMorphism& f);

struct Pushout {
  FiltObject object;
  FiltMorphism from_first;   // y -> P
  FiltMorphism from_second;  // z -> P
};
/// Pushout of y <-f- x -g-> z. Throws std::invalid_argument on mismatched sources.
Pushout pushout(const FiltMorphism& f, const FiltMorphism& g);

struct Pullback {
  FiltObject object;
  FiltMorphism to_first;   // P -> y
  FiltMorphism to_second;  // P -> z
};
/// Pullback of y -f-> x <-g- z. Throws std::invalid_argument on mismatched targets.
Pullback pullback(const FiltMorphism& f, const FiltMorphism& g);

FiltObject direct_sum(const FiltObject& a, const FiltObject& b);
FiltMorphism direct_sum(const FiltMorphism& f, const FiltMorphism& g);
/// [f g] : a (+) b -> c.
FiltMorphism copair(const FiltMorphism& f, const FiltMorphism& g);
/// (f, g) : c -> a (+) b.
FiltMorphism pair(const FiltMorphism& f, const FiltMorphism& g);
FiltMorphism sum_inclusion_first(const FiltObject& a, const FiltObject& b);
FiltMorphism sum_inclusion_second(const FiltObject& a, const FiltObject& b);
FiltMorphism sum_projection_first(const FiltObject& a, const FiltObject& b);
FiltMorphism sum_projection_second(const FiltObject& a, const FiltObject& b);

/// Basis e_i (x) f_j at index i * dim W + j, weight w_i + w'_j.
FiltObject tensor(const FiltObject& v, const FiltObject& w);
FiltMorphism tensor(const FiltMorphism& f, const FiltMorphism& g);

/// Hom(V, 1): dual basis with negated weights.
FiltObject dual(const FiltObject& v);
/// Transpose map W' -> V'.
FiltMorphism dual(const FiltMorphism& f);

}  // namespace qahom
