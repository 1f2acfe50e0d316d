#pragma once

// Bounded cochain complexes of filtered vector spaces, d^n : X^n -> X^{n+1}.

#include <map>
#include <optional>
#include <vector>

#include "qahom/filtered.hpp"

namespace qahom {

class Complex {
 public:
  Complex() = default;
  // Missing differentials are zero. Throws InvariantError when a
  // differential breaks the filtration or d^{n+1} d^n != 0, and
  // std::invalid_argument on shape errors.
  Complex(std::map<int, FiltObject> objects, std::map<int, Matrix> differentials = {});

  static Complex concentrated(const FiltObject& v, int degree);

  const FiltObject& object(int n) const;
  FiltMorphism differential(int n) const;
  Matrix differential_matrix(int n) const;

  /// Degrees carrying a nonzero object, ascending.
  std::vector<int> support() const;
  bool is_zero() const { return support().empty(); }
  std::size_t total_dim() const;

  const std::map<int, FiltObject>& objects() const { return objects_; }
  const std::map<int, Matrix>& differentials() const { return differentials_; }

 private:
  std::map<int, FiltObject> objects_;
  std::map<int, Matrix> differentials_;
};

class ChainMap {
 public:
  // Missing components are zero. Throws InvariantError if some component
  // breaks the filtration or fails to commute with the differentials.
  ChainMap(Complex source, Complex target, std::map<int, Matrix> components = {});

  static ChainMap identity(const Complex& x);
  static ChainMap zero(const Complex& x, const Complex& y);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  FiltMorphism component(int n) const;
  Matrix component_matrix(int n) const;
  const std::map<int, Matrix>& components() const { return components_; }

 private:
  Complex source_;
  Complex target_;
  std::map<int, Matrix> components_;
};

/// Degrees at which anything in either complex is nonzero, widened by one on each side.
std::vector<int> joint_degrees(const Complex& a, const Complex& b);

ChainMap compose(const ChainMap& g, const ChainMap& f);

/// H^n = coker(X^{n-1} -> Ker d^n) together with the data used to build it.
struct ReducedCohomology {
  FiltObject object;
  SubObject cycles;         // Ker d^n inside X^n
  QuotientObject classes;   // Ker d^n -> H^n
};

ReducedCohomology reduced_cohomology_data(const Complex& x, int n);
FiltObject reduced_cohomology(const Complex& x, int n);
/// H^n for every degree where it can be nonzero.
std::map<int, FiltObject> reduced_cohomology(const Complex& x);
FiltMorphism induced_on_cohomology(const ChainMap& f, int n);
bool is_reduced_qiso(const ChainMap& f);
/// Reduced cohomology vanishes in every degree.
bool is_acyclic(const Complex& x);

/// cone(f)^n = Y^n (+) X^{n+1}, d(y, x) = (d y + f x, -d x).
Complex cone(const ChainMap& f);
ChainMap cone_inclusion(const ChainMap& f);
ChainMap cone_projection(const ChainMap& f);

/// X[k]^n = X^{n+k} with differential (-1)^k d.
Complex shift(const Complex& x, int k);
ChainMap shift(const ChainMap& f, int k);

Complex direct_sum(const Complex& x, const Complex& y);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
ChainMap sum_inclusion_first(const Complex& x, const Complex& y);
ChainMap sum_inclusion_second(const Complex& x, const Complex& y);
ChainMap sum_projection_first(const Complex& x, const Complex& y);
ChainMap sum_projection_second(const Complex& x, const Complex& y);
/// (f, g) : X -> Y (+) Z.
ChainMap pair(const ChainMap& f, const ChainMap& g);
/// [f g] : X (+) Y -> Z.
ChainMap copair(const ChainMap& f, const ChainMap& g);
ChainMap scale(const Rational& s, const ChainMap& f);

/// (X (x) Y)^n = (+)_{p+q=n} X^p (x) Y^q with d = d_X (x) 1 + (-1)^p 1 (x) d_Y,
/// summands ordered by ascending p.
Complex tensor(const Complex& x, const Complex& y);
ChainMap tensor(const ChainMap& f, const ChainMap& g);

struct ComplexQuotient {
  Complex complex;
  ChainMap projection;
  std::map<int, Matrix> sections;  // degreewise filtration-preserving right inverses
};
ComplexQuotient cokernel(const ChainMap& f);

struct ComplexSub {
  Complex complex;
  ChainMap inclusion;
};
ComplexSub kernel(const ChainMap& f);

struct ComplexPushout {
  Complex complex;
  ChainMap from_first;
  ChainMap from_second;
  ComplexQuotient quotient;  // of first.target (+) second.target
};
ComplexPushout pushout(const ChainMap& f, const ChainMap& g);

// 0 -> A -f-> B -g-> C -> 0 is strict exact: f strict mono, g strict epi,
// ker g = im f. Throws std::invalid_argument if f and g are not composable
// or g f != 0.
bool strict_exact_check(const FiltMorphism& f, const FiltMorphism& g);
bool strict_exact_check(const ChainMap& f, const ChainMap& g);

}  // namespace qahom
