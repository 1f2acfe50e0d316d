#pragma once

// Seeded random instances for the property suites.

#include <cstdint>
#include <random>

#include "qahom/complex.hpp"
#include "qahom/model.hpp"

namespace qahom::verify {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  std::size_t index(std::size_t n);
  bool chance(double p);
  /// p/q with |p| <= 3, 1 <= q <= 3; zero with probability zero_chance.
  Rational rational(double zero_chance = 0.3);

 private:
  std::mt19937_64 engine_;
};

FiltObject random_object(Rng& rng, std::size_t min_dim, std::size_t max_dim, int wmin = -2, int wmax = 2);
/// Random matrix whose nonzero entries respect the filtrations.
Matrix random_filtered_matrix(Rng& rng, const FiltObject& source, const FiltObject& target, double zero_chance = 0.3);
FiltMorphism random_morphism(Rng& rng, const FiltObject& source, const FiltObject& target, double zero_chance = 0.3);
/// Invertible matrix (not filtration aware).
Matrix random_invertible(Rng& rng, std::size_t n);
/// Inclusion of a random subspace with its induced filtration.
FiltMorphism random_strict_mono(Rng& rng, const FiltObject& ambient);
/// Projection onto a random quotient with the quotient filtration.
FiltMorphism random_strict_epi(Rng& rng, const FiltObject& ambient);

/// d^n = M o (X^n -> X^n / im d^{n-1}) with M random and filtered.
Complex random_complex(Rng& rng, int lo, int hi, std::size_t max_dim, int wmin = -2, int wmax = 2);
// Exact complex: a basis change of cone(id_Z), then weights assigned degree
// by degree as low as the differential forces. Usually not strictly exact.
Complex random_exact_complex(Rng& rng, int lo, int hi, std::size_t max_dim, int wmin = -2, int wmax = 2);
/// cone(id_Z) for a random filtered Z: strictly exact.
Complex random_strictly_exact_complex(Rng& rng, int lo, int hi, std::size_t max_dim);
/// d h + h d for a random filtered h of degree -1.
ChainMap random_null_homotopic(Rng& rng, const Complex& x, const Complex& y);
/// Random element of F_w Z^n(x) as a column, for each weight in r.
Matrix random_cycles(Rng& rng, const Complex& x, int n, const FiltObject& r);

}  // namespace qahom::verify
