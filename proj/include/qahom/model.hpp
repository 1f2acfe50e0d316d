#pragma once

// Morphism classes of the injective and projective model structures on
// complexes of filtered vector spaces, their generating cofibrations, and an
// exact solver for finite lifting problems.

#include <optional>
#include <string>

#include "qahom/complex.hpp"

namespace qahom {

struct MorphismClassification {
  bool degreewise_mono = false;
  bool degreewise_epi = false;
  bool degreewise_strict_mono = false;
  bool degreewise_strict_epi = false;
  bool reduced_qiso = false;

  bool injective_cofibration() const { return degreewise_strict_mono; }
  bool injective_trivial_cofibration() const { return degreewise_strict_mono && reduced_qiso; }
  bool projective_fibration() const { return degreewise_strict_epi; }
  bool projective_trivial_fibration() const { return degreewise_strict_epi && reduced_qiso; }
  bool weak_equivalence() const { return reduced_qiso; }
};

MorphismClassification classify(const ChainMap& f);

/// M(u, n): y in degree n, x in degree n + 1, differential u.
Complex two_term_complex(const FiltMorphism& u, int n);

// M(u, n) -> M(id_x, n) with components (u, id). Throws std::invalid_argument
// unless u is a strict monomorphism.
ChainMap generating_cofibration(const FiltMorphism& u, int n);

// Sphere-to-disk map for the projective structure: R concentrated in degree
// n, included as the cycles of the contractible disk R -id-> R occupying
// degrees n - 1 and n.
ChainMap generating_projective_cofibration(const FiltObject& r, int n);

/// A commutative square  A -top-> X,  B -bottom-> Y,  left: A -> B,  right: X -> Y.
struct LiftingSquare {
  ChainMap left;
  ChainMap right;
  ChainMap top;
  ChainMap bottom;
};

// Throws InvariantError (with the offending degree and entry) when
// right o top != bottom o left, and std::invalid_argument when the four maps
// do not fit together.
void validate(const LiftingSquare& sq);

// Finds h : B -> X with h o left = top and right o h = bottom, or nothing.
// Filtration preservation is imposed by dropping the forbidden entries of h.
std::optional<ChainMap> solve_lift(const LiftingSquare& sq);

/// (A (x) Y) +_{A (x) X} (B (x) X) -> B (x) Y for f : A -> B, g : X -> Y.
ChainMap pushout_product(const ChainMap& f, const ChainMap& g);

}  // namespace qahom
