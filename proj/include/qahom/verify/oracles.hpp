#pragma once

// Reference computations that share no code with the library: their own
// elimination, their own strictness test, brute-force lifting systems.

#include <cstddef>
#include <map>
#include <vector>

#include "qahom/complex.hpp"
#include "qahom/koszul.hpp"
#include "qahom/model.hpp"

namespace qahom::verify {

using Rows = std::vector<std::vector<Rational>>;

Rows to_rows(const Matrix& m);
std::size_t oracle_rank(Rows rows, std::size_t cols);
std::size_t oracle_rank(const Matrix& m);
/// Columns spanning the right kernel.
Rows oracle_kernel(const Matrix& m);

// f(F_p V) = im f ∩ F_p W for every p, via
// dim(im f ∩ F_p W) = rank M + dim F_p W - rank [M | E_p].
bool oracle_is_strict(const FiltObject& source, const FiltObject& target, const Matrix& m);
bool oracle_is_strict_mono(const FiltObject& source, const FiltObject& target, const Matrix& m);
bool oracle_is_strict_epi(const FiltObject& source, const FiltObject& target, const Matrix& m);
bool oracle_is_iso(const FiltObject& source, const FiltObject& target, const Matrix& m);
/// 0 -> A -f-> B -g-> C -> 0 strict exact, by ranks and the strictness oracle.
bool oracle_strict_exact(const FiltMorphism& f, const FiltMorphism& g);

/// dim ker d^n - rank d^{n-1} in every degree of the support (widened by one).
std::map<int, std::size_t> oracle_cohomology_dims(const Complex& x);
/// dim F_p H^n for each p in the weight range of X^n.
std::map<int, std::size_t> oracle_cohomology_filtration(const Complex& x, int n);
bool oracle_acyclic(const Complex& x);

struct LiftSystem {
  bool consistent = false;
  std::size_t unknowns = 0;
  std::size_t solution_dim = 0;  // when consistent
};

// Every entry of every component of h is an unknown; forbidden entries get an
// explicit equation h_ij = 0 next to the chain-map and triangle equations.
LiftSystem oracle_lift(const LiftingSquare& sq);
/// Checks a proposed lift entry by entry.
bool oracle_is_lift(const LiftingSquare& sq, const ChainMap& h);

/// Number of monomials of length n in generators of the given parities (odd = true).
std::size_t oracle_sym_dim(const std::vector<bool>& odd, std::size_t n);

// dim (A/J)_d for homogeneous d <= bound, J the Jacobian ideal of a
// homogeneous f. Throws std::invalid_argument for a non-homogeneous f.
std::vector<std::size_t> oracle_jacobian_dims(const Polynomial& f, std::size_t bound);

}  // namespace qahom::verify
