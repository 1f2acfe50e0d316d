#pragma once

// The fancy Koszul complex K(R, P) = Sym(P') (x) /\P' with d = c o h, the
// specialized complex K(R, P; m), and the derived critical locus of a
// polynomial.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qahom/complex.hpp"

namespace qahom {

/// x^alpha (x) e*_{s_1} ^ ... ^ e*_{s_k} with s_1 < ... < s_k.
struct KoszulMonomial {
  std::vector<int> alpha;
  std::vector<std::size_t> wedge;
  friend auto operator<=>(const KoszulMonomial&, const KoszulMonomial&) = default;
};

std::string describe(const KoszulMonomial& m);

/// The summand of total degree t = |alpha| + k; layer k sits in degree -k.
struct KoszulStrand {
  int total = 0;
  Complex complex;
  std::map<int, std::vector<KoszulMonomial>> basis;  // degree -> monomials
};

struct KoszulData {
  FiltObject p;
  FiltObject p_dual;
  std::size_t bound = 0;
  std::vector<KoszulStrand> strands;  // total degree 0..bound
};

/// All strands of total degree <= bound.
KoszulData fancy_koszul(const FiltObject& p, std::size_t bound);

// h : layer (t, k) -> Sym^{t-k} (x) P' (x) P (x) /\^k P', inserting
// sum_i e*_i (x) e_i. Basis of the target: ((alpha, i, j, S)) in that nesting.
// Throws std::invalid_argument when (t, k) is not a layer.
FiltMorphism h_map(const KoszulData& k, std::size_t total, std::size_t wedge_degree);
// c : Sym^{t-k} (x) P' (x) P (x) /\^k P' -> layer (t, k - 1): multiply e*_i
// into Sym and contract e_j with the alternating sum, signs (-1)^j from j = 1.
FiltMorphism c_map(const KoszulData& k, std::size_t total, std::size_t wedge_degree);
/// c o h, the differential out of layer (t, k).
FiltMorphism koszul_differential(const KoszulData& k, std::size_t total, std::size_t wedge_degree);

struct KoszulStrandReport {
  int total = 0;
  std::map<int, std::size_t> cohomology;
  bool expected = true;
};

struct KoszulReport {
  bool passed = true;
  bool augmentation_ok = true;
  std::vector<KoszulStrandReport> strands;
  std::string witness;
};

/// Strands of positive total degree acyclic; total degree 0 is R in degree 0
/// and the augmentation (constant term) is a chain map inducing an iso there.
KoszulReport verify_augmentation_qiso(const KoszulData& k);

// /\P' with d_m(f_1 ^ ... ^ f_k) = sum_j (-1)^j f_j(m) (... f_j omitted ...).
// Filtration preservation requires m in F_0 P; otherwise throws InvariantError.
// Throws std::invalid_argument if m has the wrong length.
Complex specialized_koszul(const FiltObject& p, const std::vector<Rational>& m);
/// Subsets of size k in the order used by both Koszul constructions.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t rank, std::size_t k);

struct BaseChangeReport {
  bool passed = true;
  std::size_t compared = 0;
  std::string witness;
};

/// Specializes e*_i -> m_i in every differential of K(R, P) and compares with
/// K(R, P; m) entry by entry, on every basis element of every strand.
BaseChangeReport base_change_check(const FiltObject& p, const std::vector<Rational>& m, std::size_t bound);

struct Polynomial {
  std::vector<std::string> variables;
  std::map<std::vector<int>, Rational> terms;  // exponent vector -> nonzero coefficient

  std::size_t vars() const { return variables.size(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool operator==(const Polynomial&) const = default;
};

// Terms "coeff x1^a1 ... xn^an" joined by + and -; '*' between factors is
// optional. Without an explicit variable list the variables are x1, x2, ...
// in numeric order when all names have that shape, otherwise in order of
// first appearance. Throws std::invalid_argument naming the position.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables = {});
std::string to_string(const Polynomial& f);
Polynomial partial_derivative(const Polynomial& f, std::size_t i);

struct CritReport {
  std::size_t bound = 0;
  std::map<int, std::size_t> cohomology;   // degree 0, -1, ..., -n at the cutoff
  std::vector<std::size_t> h0_by_cutoff;   // dim H^0 for cutoffs 0..bound
  std::vector<std::map<int, std::size_t>> cohomology_by_cutoff;
  bool stabilized = false;
};

// A (x) /\(xi_1..xi_n) with d(xi_i) = df/dx_i, truncated to
// |beta| + sum_{s in S} deg(df/dx_s) <= cutoff, which is a subcomplex. H^0 is
// A_{<=D} / J_{<=D}. Stabilized: equal H^0 at D - 1 and D, and J_{<=D}
// contains every monomial of degree D - 1.
CritReport critical_locus(const Polynomial& f, std::size_t bound);

}  // namespace qahom
