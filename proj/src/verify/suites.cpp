#include "qahom/verify/suites.hpp"

#include <chrono>
#include <filesystem>
#include <limits>
#include <sstream>

#include "qahom/error.hpp"
#include "qahom/io.hpp"
#include "qahom/verify/oracles.hpp"
#include "qahom/verify/random.hpp"

namespace qahom::verify {

namespace {

using io::to_json;

// Keeps the failing instance of least size.
struct Failures {
  std::size_t count = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::string witness;

  void add(std::size_t size, const std::string& w) {
    ++count;
    if (size < best) {
      best = size;
      witness = w;
    }
  }
  bool any() const { return count > 0; }
};

std::string morphism_text(const FiltMorphism& f) { return to_json(f).dump(); }

void finish(SuiteResult& r, const Failures& f) {
  if (f.any()) {
    r.passed = false;
    r.witness = f.witness;
    r.notes.push_back(std::to_string(f.count) + " failing instance(s)");
  }
}

// 1. Pushouts preserve strict monos, pullbacks preserve strict epis.
void suite_quasi_abelian(SuiteResult& r, Rng& rng) {
  Failures fails;
  for (int t = 0; t < 500; ++t) {
    const FiltObject b = random_object(rng, 1, 4);
    const FiltMorphism f = random_strict_mono(rng, b);
    const FiltObject c = random_object(rng, 0, 4);
    const FiltMorphism g = random_morphism(rng, f.source(), c);
    const Pushout po = pushout(f, g);
    const bool commutes = compose(po.from_first, f) == compose(po.from_second, g);
    const Matrix& m = po.from_second.matrix();
    const bool lib = is_strict_mono(po.from_second);
    const bool orc = oracle_is_strict_mono(c, po.object, m);
    ++r.instances;
    if (!commutes || !lib || !orc)
      fails.add(b.dim() + c.dim(), "pushout of strict mono " + morphism_text(f) + " along " + morphism_text(g) +
                                       ": library strict mono " + (lib ? "yes" : "no") + ", oracle " +
                                       (orc ? "yes" : "no") + (commutes ? "" : ", square does not commute"));

    const FiltObject b2 = random_object(rng, 1, 4);
    const FiltMorphism e = random_strict_epi(rng, b2);
    const FiltObject d = random_object(rng, 0, 4);
    const FiltMorphism h = random_morphism(rng, d, e.target());
    const Pullback pb = pullback(e, h);
    const bool commutes2 = compose(e, pb.to_first) == compose(h, pb.to_second);
    const bool lib2 = is_strict_epi(pb.to_second);
    const bool orc2 = oracle_is_strict_epi(pb.object, d, pb.to_second.matrix());
    ++r.instances;
    if (!commutes2 || !lib2 || !orc2)
      fails.add(b2.dim() + d.dim(), "pullback of strict epi " + morphism_text(e) + " along " + morphism_text(h) +
                                        ": library strict epi " + (lib2 ? "yes" : "no") + ", oracle " +
                                        (orc2 ? "yes" : "no") + (commutes2 ? "" : ", square does not commute"));
  }
  finish(r, fails);
}

// 2. f = mono o strict epi = strict mono o epi.
void suite_factorization(SuiteResult& r, Rng& rng) {
  Failures fails;
  for (int t = 0; t < 500; ++t) {
    const FiltObject v = random_object(rng, 0, 4), w = random_object(rng, 0, 4);
    const FiltMorphism f = random_morphism(rng, v, w);
    ++r.instances;
    const FactoredMorphism a = factor(f);
    const ImageFactorization b = factor_through_image(f);
    std::string problem;
    if (!(compose(a.mono, a.strict_epi) == f)) problem += " coimage factorization does not recompose;";
    if (oracle_rank(a.mono.matrix()) != a.mono.source().dim()) problem += " mono part not injective;";
    if (!oracle_is_strict_epi(v, a.strict_epi.target(), a.strict_epi.matrix())) problem += " first part not strict epi;";
    if (!(compose(b.strict_mono, b.epi) == f)) problem += " image factorization does not recompose;";
    if (oracle_rank(b.epi.matrix()) != b.epi.target().dim()) problem += " epi part not surjective;";
    if (!oracle_is_strict_mono(b.strict_mono.source(), w, b.strict_mono.matrix()))
      problem += " second part not strict mono;";
    if (!problem.empty()) fails.add(v.dim() + w.dim(), morphism_text(f) + ":" + problem);
  }
  finish(r, fails);
}

// 3. The filtration-shift identity; abelian and general agreement with the oracle.
void suite_strictness(SuiteResult& r, Rng& rng) {
  Failures fails;
  const FiltMorphism shift_id(FiltObject({1}), FiltObject({0}), Matrix{{1}});
  const Complex src = Complex::concentrated(shift_id.source(), 0), dst = Complex::concentrated(shift_id.target(), 0);
  const MorphismClassification c = classify(ChainMap(src, dst, {{0, shift_id.matrix()}}));
  ++r.instances;
  if (!shift_id.is_mono() || !shift_id.is_epi() || is_strict(shift_id) || !c.degreewise_mono || !c.degreewise_epi ||
      c.degreewise_strict_mono || c.degreewise_strict_epi)
    fails.add(0, "filtration-shift identity " + morphism_text(shift_id) + " misclassified");
  if (oracle_is_strict(shift_id.source(), shift_id.target(), shift_id.matrix()))
    fails.add(0, "oracle calls the filtration-shift identity strict");
  for (int t = 0; t < 500; ++t) {
    const FiltObject v = FiltObject::trivial(rng.index(5)), w = FiltObject::trivial(rng.index(5));
    const FiltMorphism f = random_morphism(rng, v, w);
    ++r.instances;
    const bool lib = is_strict(f), orc = oracle_is_strict(v, w, f.matrix());
    if (!lib || !orc) fails.add(v.dim() + w.dim(), "weight-0 morphism " + morphism_text(f) + " reported non-strict");
  }
  std::size_t strict = 0, nonstrict = 0;
  for (int t = 0; t < 500; ++t) {
    const FiltObject v = random_object(rng, 0, 4), w = random_object(rng, 0, 4);
    const FiltMorphism f = random_morphism(rng, v, w);
    ++r.instances;
    const bool lib = is_strict(f), orc = oracle_is_strict(v, w, f.matrix());
    (lib ? strict : nonstrict) += 1;
    if (lib != orc)
      fails.add(v.dim() + w.dim(), morphism_text(f) + ": library strict " + (lib ? "yes" : "no") + ", oracle " +
                                       (orc ? "yes" : "no"));
  }
  r.notes.push_back("mixed-weight instances: " + std::to_string(strict) + " strict, " + std::to_string(nonstrict) +
                    " non-strict, library and oracle compared on each");
  finish(r, fails);
}

// 4. H^*(cone(id_X)) = 0.
void suite_cone(SuiteResult& r, Rng& rng) {
  Failures fails;
  for (int t = 0; t < 200; ++t) {
    const int lo = rng.uniform(-3, 1);
    const Complex x = random_complex(rng, lo, lo + rng.uniform(0, 3), 3);
    const Complex c = cone(ChainMap::identity(x));
    ++r.instances;
    const bool lib = is_acyclic(c), orc = oracle_acyclic(c);
    if (!lib || !orc)
      fails.add(x.total_dim(), "cone of identity on " + to_json(x).dump() + ": library acyclic " +
                                   (lib ? "yes" : "no") + ", oracle " + (orc ? "yes" : "no"));
  }
  finish(r, fails);
}

struct TrivialFibration {
  Complex y, k;
  ChainMap p;
  bool strict_kernel = false;
  ChainMap g;
};

TrivialFibration random_trivial_fibration(Rng& rng) {
  const bool strictly = rng.chance(0.5);
  const int lo = rng.uniform(-1, 0);
  Complex y = random_complex(rng, lo, lo + 2, 2, -1, 1);
  Complex k = strictly ? random_strictly_exact_complex(rng, lo - 1, lo + 2, 2)
                       : random_exact_complex(rng, lo, lo + 2, 2, -1, 1);
  ChainMap g = random_null_homotopic(rng, k, y);
  ChainMap p = copair(ChainMap::identity(y), g);
  return {std::move(y), std::move(k), std::move(p), strictly, std::move(g)};
}

// 5. Trivial fibrations lift against R[n] -> D(n); solver vs brute-force oracle.
void suite_lifting(SuiteResult& r, Rng& rng) {
  Failures fails, oracle_fails;
  std::size_t strict_total = 0, strict_lifted = 0, general_total = 0, general_lifted = 0, compared = 0;
  for (int t = 0; t < 200; ++t) {
    const TrivialFibration tf = random_trivial_fibration(rng);
    const MorphismClassification c = classify(tf.p);
    const Complex& total = tf.p.source();
    const auto support = total.support();
    const int n = support.empty() ? 0 : support[rng.index(support.size())];
    const FiltObject rr = random_object(rng, 1, 2, -1, 1);
    const ChainMap i = generating_projective_cofibration(rr, n);
    // top: cycles x = (d b - g k, k); bottom: b in degree n - 1, d b in degree n.
    const Matrix b = random_filtered_matrix(rng, rr, tf.y.object(n - 1));
    const Matrix kc = random_cycles(rng, tf.k, n, rr);
    const Matrix db = tf.y.differential_matrix(n - 1) * b;
    const Matrix top_n = vstack(db - tf.g.component_matrix(n) * kc, kc);
    const ChainMap top(i.source(), total, {{n, top_n}});
    const ChainMap bottom(i.target(), tf.y, {{n - 1, b}, {n, db}});
    const LiftingSquare sq{i, tf.p, top, bottom};
    validate(sq);
    ++r.instances;
    const std::size_t size = i.target().total_dim() + total.total_dim();
    if (!c.projective_trivial_fibration()) {
      fails.add(size, "generated map not classified as a trivial fibration: " + to_json(tf.p).dump());
      continue;
    }
    const auto h = solve_lift(sq);
    (tf.strict_kernel ? strict_total : general_total) += 1;
    if (h) (tf.strict_kernel ? strict_lifted : general_lifted) += 1;
    if (h && !oracle_is_lift(sq, *h)) oracle_fails.add(size, "solver returned an invalid lift for " + to_json(sq).dump());
    if (size <= 6) {
      ++compared;
      const LiftSystem sys = oracle_lift(sq);
      if (sys.consistent != h.has_value())
        oracle_fails.add(size, std::string("solver ") + (h ? "found" : "found no") + " lift, oracle disagrees: " +
                                   to_json(sq).dump());
    }
    if (!h)
      fails.add(size, "no lift of trivial fibration (kernel " + std::string(tf.strict_kernel ? "" : "not ") +
                          "strictly exact) against R[" + std::to_string(n) + "] -> D(" + std::to_string(n) +
                          "), R = " + describe(rr) + ": " + to_json(sq).dump());
  }
  // Extra solver/oracle comparisons on squares whose lift may or may not exist.
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform(-1, 1);
    const Complex x = random_complex(rng, n - 1, n, 2, 0, 1);
    const Complex y = random_complex(rng, n - 1, n, 1, 0, 1);
    const FiltObject rr = random_object(rng, 1, 1, 0, 1);
    const ChainMap i = generating_projective_cofibration(rr, n);
    // a random right map may fail to be a chain map; fall back to zero.
    std::optional<ChainMap> right;
    try {
      ChainMap q(x, y, {{n - 1, random_filtered_matrix(rng, x.object(n - 1), y.object(n - 1))},
                        {n, random_filtered_matrix(rng, x.object(n), y.object(n))}});
      right = std::move(q);
    } catch (const std::invalid_argument&) {
      right = ChainMap::zero(x, y);
    }
    const Matrix kc = random_cycles(rng, x, n, rr);
    const ChainMap top(i.source(), x, {{n, kc}});
    const Matrix b = random_filtered_matrix(rng, rr, y.object(n - 1));
    const Matrix db = y.differential_matrix(n - 1) * b;
    const Matrix want = right->component_matrix(n) * kc;
    if (!(want == db)) continue;
    const ChainMap bottom(i.target(), y, {{n - 1, b}, {n, db}});
    const LiftingSquare sq{i, *right, top, bottom};
    const std::size_t size = i.target().total_dim() + x.total_dim() + y.total_dim();
    if (size > 6) continue;
    ++compared;
    const auto h = solve_lift(sq);
    const LiftSystem sys = oracle_lift(sq);
    if (sys.consistent != h.has_value() || (h && !oracle_is_lift(sq, *h)))
      oracle_fails.add(size, "solver and oracle disagree on " + to_json(sq).dump());
  }
  r.notes.push_back("strictly exact kernel: " + std::to_string(strict_lifted) + "/" + std::to_string(strict_total) +
                    " lifted");
  r.notes.push_back("exact, not strictly exact kernel: " + std::to_string(general_lifted) + "/" +
                    std::to_string(general_total) + " lifted");
  r.notes.push_back("solver vs brute-force oracle: " + std::to_string(compared) + " squares compared, " +
                    std::to_string(oracle_fails.count) + " disagreements");
  if (oracle_fails.any()) {
    r.passed = false;
    r.witness = oracle_fails.witness;
  }
  if (fails.any()) {
    r.passed = false;
    if (r.witness.empty()) r.witness = fails.witness;
    r.notes.push_back(std::to_string(fails.count) + " trivial fibration(s) without a lift");
  }
}

// 6. Tensoring strict exact sequences with objects.
void suite_monoid(SuiteResult& r, Rng& rng) {
  Failures fails;
  for (int t = 0; t < 200; ++t) {
    const FiltObject b = random_object(rng, 0, 4);
    const FiltMorphism f = random_strict_mono(rng, b);
    const CokernelResult q = cokernel(f);
    const FiltObject v = random_object(rng, 0, 3);
    const FiltMorphism fv = tensor(f, FiltMorphism::identity(v));
    const FiltMorphism gv = tensor(q.projection, FiltMorphism::identity(v));
    ++r.instances;
    const bool before = strict_exact_check(f, q.projection) && oracle_strict_exact(f, q.projection);
    const bool lib = strict_exact_check(fv, gv), orc = oracle_strict_exact(fv, gv);
    if (!before || !lib || !orc)
      fails.add(b.dim() + v.dim(), "sequence " + morphism_text(f) + ", " + morphism_text(q.projection) +
                                       " tensored with " + describe(v) + ": library " + (lib ? "strict exact" : "not") +
                                       ", oracle " + (orc ? "strict exact" : "not"));
  }
  finish(r, fails);
}

// 7. PBW.
void suite_pbw(SuiteResult& r) {
  Failures fails;
  for (const std::string name : {"abelian1", "abelian2", "abelian3", "abelian4", "solvable2", "heisenberg", "sl2"}) {
    const DGLie g = *lie_library(name);
    const PbwReport rep = pbw_check(g, 6);
    std::vector<bool> odd;
    for (int d : g.degrees()) odd.push_back(d % 2 != 0);
    std::ostringstream dims;
    for (std::size_t n = 0; n <= 6; ++n) {
      ++r.instances;
      const std::size_t want = oracle_sym_dim(odd, n);
      dims << (n ? "," : "") << rep.gr_dims[n];
      if (rep.gr_dims[n] != want || rep.sym_dims[n] != want || rep.normal_form_dims[n] != want)
        fails.add(n, name + " n=" + std::to_string(n) + ": gr " + std::to_string(rep.gr_dims[n]) + ", Sym " +
                         std::to_string(want));
    }
    if (!rep.passed) fails.add(100, name + ": " + rep.witness);
    r.notes.push_back(name + " gr dims " + dims.str());
  }
  finish(r, fails);
}

// 8. CE acyclicity in weights 1..4.
void suite_ce(SuiteResult& r) {
  Failures fails;
  for (const std::string name : {"abelian1", "abelian2", "abelian3", "abelian4", "heisenberg"}) {
    const CEResolution res = ce_resolution(*lie_library(name), 4);
    const CEReport rep = verify_ce_acyclicity(res, 4);
    if (!rep.passed) fails.add(0, name + ": " + rep.witness);
    for (const CEPiece& piece : res.pieces) {
      ++r.instances;
      const auto dims = oracle_cohomology_dims(piece.complex);
      bool ok = true;
      for (const auto& [n, d] : dims) ok = ok && d == (piece.index == 0 && n == 0 ? 1u : 0u);
      if (piece.index == 0 && dims.empty()) ok = false;
      if (!ok) fails.add(piece.complex.total_dim(), name + " weight " + std::to_string(piece.index) + ": oracle cohomology nonzero");
    }
  }
  finish(r, fails);
}

// 9. Koszul augmentation and d^2 = 0.
void suite_koszul(SuiteResult& r, Rng& rng) {
  Failures fails;
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (int variant = 0; variant < 2; ++variant) {
      const FiltObject p = variant == 0 ? FiltObject::trivial(rank) : random_object(rng, rank, rank);
      const KoszulData k = fancy_koszul(p, 6);
      const KoszulReport rep = verify_augmentation_qiso(k);
      if (!rep.passed) fails.add(rank, "P = " + describe(p) + ": " + rep.witness);
      for (const KoszulStrand& s : k.strands) {
        ++r.instances;
        const auto dims = oracle_cohomology_dims(s.complex);
        for (const auto& [n, d] : dims)
          if (d != (s.total == 0 && n == 0 ? 1u : 0u))
            fails.add(rank, "P = " + describe(p) + ", strand " + std::to_string(s.total) + ": oracle H^" +
                                std::to_string(n) + " = " + std::to_string(d));
        const auto t = static_cast<std::size_t>(s.total);
        for (std::size_t w = 2; w <= std::min(rank, t); ++w) {
          const Matrix d2 =
              koszul_differential(k, t, w - 1).matrix() * koszul_differential(k, t, w).matrix();
          if (!d2.is_zero())
            fails.add(rank, "P = " + describe(p) + ": d^2 != 0 on strand " + std::to_string(t) + " layer " +
                                std::to_string(w));
        }
      }
    }
  }
  finish(r, fails);
}

// 10. Base change along random m.
void suite_base_change(SuiteResult& r, Rng& rng) {
  Failures fails;
  std::size_t compared = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t rank = 1 + rng.index(3);
    std::vector<Rational> m(rank);
    std::vector<int> w(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      m[i] = rng.rational(0.2);
      w[i] = m[i] == 0 ? rng.uniform(-2, 2) : rng.uniform(-2, 0);
    }
    const FiltObject p(w);
    ++r.instances;
    const BaseChangeReport rep = base_change_check(p, m, 4);
    compared += rep.compared;
    std::string mtext;
    for (const auto& x : m) mtext += (mtext.empty() ? "" : ",") + to_string(x);
    if (!rep.passed) fails.add(rank, "P = " + describe(p) + ", m = (" + mtext + "): " + rep.witness);
    // d_m from the contraction formula, built here.
    const Complex km = specialized_koszul(p, m);
    for (std::size_t kk = 1; kk <= rank; ++kk) {
      const auto src = wedge_basis(rank, kk), dst = wedge_basis(rank, kk - 1);
      Matrix want(dst.size(), src.size());
      for (std::size_t j = 0; j < src.size(); ++j)
        for (std::size_t q = 0; q < kk; ++q) {
          std::vector<std::size_t> rest = src[j];
          rest.erase(rest.begin() + static_cast<long>(q));
          std::size_t row = 0;
          while (dst[row] != rest) ++row;
          want(row, j) += ((q + 1) % 2 == 0 ? Rational(1) : Rational(-1)) * m[src[j][q]];
        }
      const int deg = -static_cast<int>(kk);
      if (!(km.differential_matrix(deg) == want))
        fails.add(rank, "P = " + describe(p) + ", m = (" + mtext + "): d_m at degree " + std::to_string(deg) +
                            " differs from the contraction formula");
    }
  }
  r.notes.push_back(std::to_string(compared) + " columns compared");
  finish(r, fails);
}

// 11. Critical locus at D = 8.
void suite_crit(SuiteResult& r) {
  Failures fails;
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"x", 0}, {"x^2", 1}, {"x^3", 2}, {"x^4", 3}, {"x^5", 4}, {"x^3 + y^3", 4}};
  for (const auto& [text, expected] : cases) {
    const Polynomial f = parse_polynomial(text);
    const CritReport rep = critical_locus(f, 8);
    std::size_t oracle = 0;
    for (std::size_t d : oracle_jacobian_dims(f, 8)) oracle += d;
    ++r.instances;
    const std::size_t h0 = rep.cohomology.at(0);
    std::string problem;
    if (h0 != expected) problem += " dim H0 = " + std::to_string(h0) + ", expected " + std::to_string(expected) + ";";
    if (h0 != oracle) problem += " oracle Jacobian dim " + std::to_string(oracle) + ";";
    if (!rep.stabilized) problem += " not stabilized;";
    for (const auto& [n, d] : rep.cohomology)
      if (n < 0 && d != 0) problem += " H" + std::to_string(n) + " = " + std::to_string(d) + ";";
    r.notes.push_back("f = " + text + ": dim H0 = " + std::to_string(h0) + (rep.stabilized ? " (stabilized)" : ""));
    if (!problem.empty()) fails.add(f.degree() < 0 ? 0 : static_cast<std::size_t>(f.degree()), "f = " + text + ":" + problem);
  }
  finish(r, fails);
}

// 12. Shipped corrupted fixtures must be rejected with a located witness.
void suite_negative(SuiteResult& r, const std::string& dir) {
  Failures fails;
  auto path = [&](const std::string& name) { return (std::filesystem::path(dir) / name).string(); };
  auto located = [](const std::string& msg) {
    return msg.find("degree") != std::string::npos || msg.find("entry") != std::string::npos ||
           msg.find('[') != std::string::npos;
  };
  ++r.instances;
  try {
    const DGLie g = io::lie_from_json(io::parse_file(path("corrupt_jacobi.json")), "lie");
    const AxiomReport rep = check_lie_axioms(g);
    if (rep.passed || rep.violations.empty())
      fails.add(0, "corrupt_jacobi.json accepted");
    else
      r.notes.push_back("corrupt_jacobi.json rejected: " + rep.violations.front());
  } catch (const InvariantError& e) {
    r.notes.push_back(std::string("corrupt_jacobi.json rejected: ") + e.what());
  } catch (const std::exception& e) {
    fails.add(0, std::string("corrupt_jacobi.json: unexpected error: ") + e.what());
  }
  ++r.instances;
  try {
    io::complex_from_json(io::parse_file(path("corrupt_d2.json")), "complex");
    fails.add(0, "corrupt_d2.json accepted");
  } catch (const InvariantError& e) {
    if (located(e.what()))
      r.notes.push_back(std::string("corrupt_d2.json rejected: ") + e.what());
    else
      fails.add(0, std::string("corrupt_d2.json rejected without location: ") + e.what());
  } catch (const std::exception& e) {
    fails.add(0, std::string("corrupt_d2.json: unexpected error: ") + e.what());
  }
  ++r.instances;
  try {
    const LiftingSquare sq = io::square_from_json(io::parse_file(path("noncommuting_square.json")), "square");
    validate(sq);
    fails.add(0, "noncommuting_square.json accepted");
  } catch (const InvariantError& e) {
    if (located(e.what()))
      r.notes.push_back(std::string("noncommuting_square.json rejected: ") + e.what());
    else
      fails.add(0, std::string("noncommuting_square.json rejected without location: ") + e.what());
  } catch (const std::exception& e) {
    fails.add(0, std::string("noncommuting_square.json: unexpected error: ") + e.what());
  }
  finish(r, fails);
}

const char* suite_name(int id) {
  switch (id) {
    case 1: return "quasi-abelian axioms";
    case 2: return "factorizations";
    case 3: return "strictness witness";
    case 4: return "cone acyclicity";
    case 5: return "projective lifting";
    case 6: return "monoid axiom core";
    case 7: return "PBW";
    case 8: return "CE acyclicity";
    case 9: return "Koszul acyclicity";
    case 10: return "base change";
    case 11: return "critical locus";
    case 12: return "negative controls";
    default: return "unknown";
  }
}

double time_limit(int id) {
  switch (id) {
    case 1: return 10;
    case 7: return 30;
    case 11: return 60;
    default: return 0;
  }
}

}  // namespace

SuiteResult run_suite(int id, std::uint64_t seed, const std::string& fixtures_dir) {
  SuiteResult r;
  r.id = id;
  r.name = suite_name(id);
  Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: suite_quasi_abelian(r, rng); break;
      case 2: suite_factorization(r, rng); break;
      case 3: suite_strictness(r, rng); break;
      case 4: suite_cone(r, rng); break;
      case 5: suite_lifting(r, rng); break;
      case 6: suite_monoid(r, rng); break;
      case 7: suite_pbw(r); break;
      case 8: suite_ce(r); break;
      case 9: suite_koszul(r, rng); break;
      case 10: suite_base_change(r, rng); break;
      case 11: suite_crit(r); break;
      case 12: suite_negative(r, fixtures_dir); break;
      default: throw std::invalid_argument("no suite " + std::to_string(id));
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.witness = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit(id) > 0 && r.seconds > time_limit(id)) {
    r.passed = false;
    if (r.witness.empty()) r.witness = "runtime above " + std::to_string(static_cast<int>(time_limit(id))) + " s";
  }
  return r;
}

std::vector<SuiteResult> run_all(std::uint64_t seed, const std::string& fixtures_dir) {
  std::vector<SuiteResult> out;
  for (int id = 1; id <= suite_count; ++id) out.push_back(run_suite(id, seed, fixtures_dir));
  return out;
}

}  // namespace qahom::verify
