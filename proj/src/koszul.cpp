#include "qahom/koszul.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <stdexcept>

#include "qahom/error.hpp"

namespace qahom {

namespace {

void monomials_of_degree(std::size_t vars, int degree, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (prefix.size() + 1 == vars) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    monomials_of_degree(vars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> monomials(std::size_t vars, int degree) {
  std::vector<std::vector<int>> out;
  if (vars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<int> prefix;
  monomials_of_degree(vars, degree, prefix, out);
  return out;
}

void subsets(std::size_t rank, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t s = start; s < rank; ++s) {
    cur.push_back(s);
    subsets(rank, k, s + 1, cur, out);
    cur.pop_back();
  }
}

int monomial_weight(const FiltObject& p, const std::vector<int>& alpha, const std::vector<std::size_t>& wedge) {
  int w = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) w -= alpha[i] * p.weight(i);
  for (std::size_t s : wedge) w -= p.weight(s);
  return w;
}

struct LayerShape {
  std::vector<std::vector<int>> alphas;
  std::vector<std::vector<std::size_t>> wedges;
};

LayerShape layer_shape(std::size_t rank, std::size_t total, std::size_t k) {
  if (k > rank || k > total) throw std::invalid_argument("koszul: no layer with these degrees");
  return {monomials(rank, static_cast<int>(total - k)), wedge_basis(rank, k)};
}

FiltObject layer_object(const FiltObject& p, const LayerShape& s) {
  std::vector<int> w;
  for (const auto& a : s.alphas)
    for (const auto& e : s.wedges) w.push_back(monomial_weight(p, a, e));
  return FiltObject(std::move(w));
}

FiltObject middle_object(const FiltObject& p, const LayerShape& s) {
  const std::size_t r = p.dim();
  std::vector<int> w;
  for (const auto& a : s.alphas)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (const auto& e : s.wedges) w.push_back(monomial_weight(p, a, e) - p.weight(i) + p.weight(j));
  return FiltObject(std::move(w));
}

FiltMorphism h_for(const FiltObject& p, std::size_t total, std::size_t k) {
  const std::size_t r = p.dim();
  const LayerShape s = layer_shape(r, total, k);
  const FiltObject src = layer_object(p, s);
  const FiltObject tgt = middle_object(p, s);
  const std::size_t ns = s.wedges.size();
  Matrix m(tgt.dim(), src.dim());
  for (std::size_t a = 0; a < s.alphas.size(); ++a)
    for (std::size_t e = 0; e < ns; ++e)
      for (std::size_t i = 0; i < r; ++i) m(((a * r + i) * r + i) * ns + e, a * ns + e) = 1;
  return FiltMorphism(src, tgt, std::move(m));
}

FiltMorphism c_for(const FiltObject& p, std::size_t total, std::size_t k) {
  if (k == 0) throw std::invalid_argument("koszul: c needs an exterior factor");
  const std::size_t r = p.dim();
  const LayerShape s = layer_shape(r, total, k);
  const LayerShape t = layer_shape(r, total, k - 1);
  const FiltObject src = middle_object(p, s);
  const FiltObject tgt = layer_object(p, t);
  std::map<std::vector<int>, std::size_t> alpha_pos;
  for (std::size_t a = 0; a < t.alphas.size(); ++a) alpha_pos.emplace(t.alphas[a], a);
  std::map<std::vector<std::size_t>, std::size_t> wedge_pos;
  for (std::size_t e = 0; e < t.wedges.size(); ++e) wedge_pos.emplace(t.wedges[e], e);
  const std::size_t ns = s.wedges.size();
  const std::size_t nt = t.wedges.size();
  Matrix m(tgt.dim(), src.dim());
  for (std::size_t a = 0; a < s.alphas.size(); ++a)
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<int> grown = s.alphas[a];
      ++grown[i];
      const std::size_t ta = alpha_pos.at(grown);
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t e = 0; e < ns; ++e) {
          const auto& wedge = s.wedges[e];
          for (std::size_t q = 0; q < wedge.size(); ++q) {
            if (wedge[q] != j) continue;
            std::vector<std::size_t> rest = wedge;
            rest.erase(rest.begin() + static_cast<long>(q));
            // position q counted from 1
            const Rational sign = (q + 1) % 2 ? -1 : 1;
            m(ta * nt + wedge_pos.at(rest), ((a * r + i) * r + j) * ns + e) += sign;
          }
        }
    }
  return FiltMorphism(src, tgt, std::move(m));
}

}  // namespace

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t rank, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (k <= rank) subsets(rank, k, 0, cur, out);
  return out;
}

std::string describe(const KoszulMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.alpha.size(); ++i) {
    if (m.alpha[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += "e" + std::to_string(i + 1) + "*";
    if (m.alpha[i] > 1) out += "^" + std::to_string(m.alpha[i]);
  }
  if (out.empty()) out = "1";
  out += " (x) ";
  if (m.wedge.empty()) return out + "1";
  for (std::size_t q = 0; q < m.wedge.size(); ++q) out += (q ? "^" : "") + std::string("e") + std::to_string(m.wedge[q] + 1) + "*";
  return out;
}

FiltMorphism h_map(const KoszulData& k, std::size_t total, std::size_t wedge_degree) {
  return h_for(k.p, total, wedge_degree);
}

FiltMorphism c_map(const KoszulData& k, std::size_t total, std::size_t wedge_degree) {
  return c_for(k.p, total, wedge_degree);
}

FiltMorphism koszul_differential(const KoszulData& k, std::size_t total, std::size_t wedge_degree) {
  return compose(c_map(k, total, wedge_degree), h_map(k, total, wedge_degree));
}

KoszulData fancy_koszul(const FiltObject& p, std::size_t bound) {
  KoszulData out{p, dual(p), bound, {}};
  const std::size_t r = p.dim();
  for (std::size_t t = 0; t <= bound; ++t) {
    KoszulStrand strand;
    strand.total = static_cast<int>(t);
    std::map<int, FiltObject> objects;
    for (std::size_t k = 0; k <= std::min(r, t); ++k) {
      const LayerShape s = layer_shape(r, t, k);
      auto& basis = strand.basis[-static_cast<int>(k)];
      for (const auto& a : s.alphas)
        for (const auto& e : s.wedges) basis.push_back({a, e});
      objects.emplace(-static_cast<int>(k), layer_object(p, s));
    }
    std::map<int, Matrix> diffs;
    for (std::size_t k = 1; k <= std::min(r, t); ++k)
      diffs.emplace(-static_cast<int>(k), compose(c_for(p, t, k), h_for(p, t, k)).matrix());
    strand.complex = Complex(std::move(objects), std::move(diffs));
    out.strands.push_back(std::move(strand));
  }
  return out;
}

KoszulReport verify_augmentation_qiso(const KoszulData& k) {
  KoszulReport rep;
  for (const KoszulStrand& s : k.strands) {
    KoszulStrandReport sr;
    sr.total = s.total;
    for (const auto& [deg, h] : reduced_cohomology(s.complex))
      if (h.dim() > 0) sr.cohomology[deg] = h.dim();
    if (s.total == 0) {
      sr.expected = sr.cohomology == std::map<int, std::size_t>{{0, 1}};
      try {
        const ChainMap aug(s.complex, Complex::concentrated(FiltObject::unit(), 0), {{0, Matrix{{1}}}});
        rep.augmentation_ok = is_iso(induced_on_cohomology(aug, 0));
      } catch (const std::exception&) {
        rep.augmentation_ok = false;
      }
    } else {
      sr.expected = sr.cohomology.empty();
    }
    if (rep.passed && (!sr.expected || !rep.augmentation_ok)) {
      rep.passed = false;
      std::string dims;
      for (const auto& [deg, d] : sr.cohomology) dims += " H^" + std::to_string(deg) + "=" + std::to_string(d);
      rep.witness = "total degree " + std::to_string(s.total) + ":" + (dims.empty() ? " acyclic" : dims) +
                    (rep.augmentation_ok ? "" : ", augmentation not an iso on H^0");
    }
    rep.strands.push_back(std::move(sr));
  }
  return rep;
}

Complex specialized_koszul(const FiltObject& p, const std::vector<Rational>& m) {
  const std::size_t r = p.dim();
  if (m.size() != r) throw std::invalid_argument("specialized_koszul: m must have one coordinate per basis vector of P");
  for (std::size_t i = 0; i < r; ++i)
    if (sgn(m[i]) != 0 && p.weight(i) > 0)
      throw InvariantError("specialized_koszul: m_" + std::to_string(i + 1) + " = " + to_string(m[i]) +
                           " is nonzero at weight " + std::to_string(p.weight(i)) + " > 0, so m is not in F_0 P");
  std::map<int, FiltObject> objects;
  std::map<int, Matrix> diffs;
  std::vector<std::vector<std::vector<std::size_t>>> bases;
  for (std::size_t k = 0; k <= r; ++k) {
    bases.push_back(wedge_basis(r, k));
    std::vector<int> w;
    for (const auto& e : bases.back()) w.push_back(monomial_weight(p, std::vector<int>(r, 0), e));
    objects.emplace(-static_cast<int>(k), FiltObject(std::move(w)));
  }
  for (std::size_t k = 1; k <= r; ++k) {
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t e = 0; e < bases[k - 1].size(); ++e) pos.emplace(bases[k - 1][e], e);
    Matrix d(bases[k - 1].size(), bases[k].size());
    for (std::size_t col = 0; col < bases[k].size(); ++col) {
      const auto& wedge = bases[k][col];
      for (std::size_t q = 0; q < wedge.size(); ++q) {
        std::vector<std::size_t> rest = wedge;
        rest.erase(rest.begin() + static_cast<long>(q));
        d(pos.at(rest), col) += ((q + 1) % 2 ? -1 : 1) * m[wedge[q]];
      }
    }
    diffs.emplace(-static_cast<int>(k), std::move(d));
  }
  return Complex(std::move(objects), std::move(diffs));
}

BaseChangeReport base_change_check(const FiltObject& p, const std::vector<Rational>& m, std::size_t bound) {
  BaseChangeReport rep;
  const std::size_t r = p.dim();
  const Complex spec = specialized_koszul(p, m);
  const KoszulData k = fancy_koszul(p, std::max(bound, r));
  auto evaluate = [&](const std::vector<int>& alpha) {
    Rational v = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (int e = 0; e < alpha[i]; ++e) v *= m[i];
    return v;
  };
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> wedge_pos(r + 1);
  for (std::size_t j = 0; j <= r; ++j) {
    const auto basis = wedge_basis(r, j);
    for (std::size_t e = 0; e < basis.size(); ++e) wedge_pos[j].emplace(basis[e], e);
  }
  for (const KoszulStrand& s : k.strands) {
    for (const auto& [deg, basis] : s.basis) {
      if (deg == 0) continue;
      const std::size_t kk = static_cast<std::size_t>(-deg);
      const Matrix d = s.complex.differential_matrix(deg);
      const Matrix dm = spec.differential_matrix(deg);
      const auto& targets = s.basis.at(deg + 1);
      for (std::size_t col = 0; col < basis.size(); ++col) {
        std::vector<Rational> induced(wedge_pos[kk - 1].size());
        for (std::size_t row = 0; row < targets.size(); ++row)
          if (sgn(d(row, col)) != 0) induced[wedge_pos[kk - 1].at(targets[row].wedge)] += d(row, col) * evaluate(targets[row].alpha);
        const Rational scale = evaluate(basis[col].alpha);
        const std::size_t scol = wedge_pos[kk].at(basis[col].wedge);
        ++rep.compared;
        for (std::size_t e = 0; e < induced.size(); ++e) {
          const Rational expected = scale * dm(e, scol);
          if (induced[e] != expected && rep.passed) {
            rep.passed = false;
            rep.witness = "degree " + std::to_string(deg) + ", basis element " + describe(basis[col]) +
                          ": specialized K(R,P) gives " + to_string(induced[e]) + ", K(R,P;m) gives " +
                          to_string(expected) + " at component " + std::to_string(e);
          }
        }
      }
    }
  }
  return rep;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

namespace {

struct RawTerm {
  Rational coeff;
  std::vector<std::pair<std::string, int>> factors;
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      RawTerm t = term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      skip();
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial: " + what + " at position " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  RawTerm term() {
    RawTerm t{Rational(1), {}};
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      try {
        t.coeff = parse_rational(num);
      } catch (const std::invalid_argument&) {
        fail("bad coefficient");
      }
      any = true;
    }
    while (true) {
      skip();
      const std::size_t save = pos_;
      bool star = false;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        if (!any) fail("'*' without a left factor");
        star = true;
        ++pos_;
        skip();
      }
      if (pos_ >= s_.size() || !name_start(s_[pos_])) {
        if (star) fail("expected a variable after '*'");
        pos_ = save;
        break;
      }
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int exponent = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        const std::string e = digits();
        if (e.empty()) fail("expected a nonnegative exponent");
        if (e.size() > 6) fail("exponent too large");
        exponent = std::stoi(e);
      }
      t.factors.emplace_back(std::move(name), exponent);
      any = true;
    }
    if (!any) fail("expected a term");
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  const std::vector<RawTerm> raw = PolyParser(text).parse();
  Polynomial f;
  if (!variables.empty()) {
    f.variables = variables;
  } else {
    std::vector<std::string> seen;
    for (const RawTerm& t : raw)
      for (const auto& [name, e] : t.factors)
        if (std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
    const std::regex numbered("x([0-9]+)");
    const bool all_numbered = std::all_of(seen.begin(), seen.end(), [&](const std::string& v) { return std::regex_match(v, numbered); });
    if (all_numbered && !seen.empty()) {
      std::sort(seen.begin(), seen.end(), [](const std::string& a, const std::string& b) {
        return std::stoul(a.substr(1)) < std::stoul(b.substr(1));
      });
    }
    f.variables = seen;
  }
  for (const RawTerm& t : raw) {
    std::vector<int> exps(f.variables.size(), 0);
    for (const auto& [name, e] : t.factors) {
      auto it = std::find(f.variables.begin(), f.variables.end(), name);
      if (it == f.variables.end()) throw std::invalid_argument("polynomial: unknown variable '" + name + "'");
      exps[static_cast<std::size_t>(it - f.variables.begin())] += e;
    }
    Rational& c = f.terms[exps];
    c += t.coeff;
  }
  std::erase_if(f.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return f;
}

std::string to_string(const Polynomial& f) {
  if (f.terms.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Rational>> terms(f.terms.begin(), f.terms.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string body;
    if (mag != 1 || constant) body = mag.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += " ";
      body += f.variables[i];
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    out += body;
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  Polynomial out;
  out.variables = f.variables;
  for (const auto& [e, c] : f.terms) {
    if (e[i] == 0) continue;
    std::vector<int> d = e;
    --d[i];
    out.terms[d] += c * e[i];
  }
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

CritReport critical_locus(const Polynomial& f, std::size_t bound) {
  const std::size_t n = f.vars();
  if (n > 12) throw std::invalid_argument("critical_locus: too many variables");
  CritReport rep;
  rep.bound = bound;
  std::vector<Polynomial> partials;
  std::vector<int> delta;
  for (std::size_t i = 0; i < n; ++i) {
    partials.push_back(partial_derivative(f, i));
    delta.push_back(std::max(partials.back().degree(), 0));
  }
  std::vector<std::vector<int>> mons;
  for (int d = 0; d <= static_cast<int>(bound); ++d) {
    auto layer = monomials(n, d);
    mons.insert(mons.end(), layer.begin(), layer.end());
  }
  std::map<std::vector<int>, std::size_t> mon_pos;
  for (std::size_t i = 0; i < mons.size(); ++i) mon_pos.emplace(mons[i], i);
  auto mdeg = [](const std::vector<int>& b) { return std::accumulate(b.begin(), b.end(), 0); };

  for (std::size_t cutoff = 0; cutoff <= bound; ++cutoff) {
    std::map<int, std::vector<std::pair<std::vector<int>, std::vector<std::size_t>>>> basis;
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& wedge : wedge_basis(n, k)) {
        int tau = 0;
        for (std::size_t s : wedge) tau += delta[s];
        for (const auto& b : mons)
          if (mdeg(b) + tau <= static_cast<int>(cutoff)) basis[-static_cast<int>(k)].push_back({b, wedge});
      }
    std::map<int, FiltObject> objects;
    for (const auto& [deg, elems] : basis) objects.emplace(deg, FiltObject::trivial(elems.size()));
    std::map<int, Matrix> diffs;
    for (const auto& [deg, elems] : basis) {
      if (deg == 0 || !basis.contains(deg + 1)) continue;
      std::map<std::pair<std::vector<int>, std::vector<std::size_t>>, std::size_t> pos;
      const auto& targets = basis[deg + 1];
      for (std::size_t t = 0; t < targets.size(); ++t) pos.emplace(targets[t], t);
      Matrix m(targets.size(), elems.size());
      for (std::size_t col = 0; col < elems.size(); ++col) {
        const auto& [beta, wedge] = elems[col];
        for (std::size_t q = 0; q < wedge.size(); ++q) {
          std::vector<std::size_t> rest = wedge;
          rest.erase(rest.begin() + static_cast<long>(q));
          const Rational sign = (q + 1) % 2 ? -1 : 1;
          for (const auto& [gamma, c] : partials[wedge[q]].terms) {
            std::vector<int> prod = beta;
            for (std::size_t i = 0; i < n; ++i) prod[i] += gamma[i];
            m(pos.at({prod, rest}), col) += sign * c;
          }
        }
      }
      diffs.emplace(deg, std::move(m));
    }
    const Complex c(std::move(objects), std::move(diffs));
    std::map<int, std::size_t> dims;
    for (int k = 0; k <= static_cast<int>(n); ++k) dims[-k] = reduced_cohomology(c, -k).dim();
    rep.h0_by_cutoff.push_back(dims[0]);
    rep.cohomology_by_cutoff.push_back(dims);
    if (cutoff == bound) rep.cohomology = dims;
  }

  if (bound >= 1 && rep.h0_by_cutoff[bound] == rep.h0_by_cutoff[bound - 1]) {
    SpanTracker ideal(mons.size());
    for (std::size_t s = 0; s < n; ++s)
      for (const auto& b : mons) {
        if (mdeg(b) + delta[s] > static_cast<int>(bound)) continue;
        std::vector<Rational> v(mons.size());
        for (const auto& [gamma, c] : partials[s].terms) {
          std::vector<int> prod = b;
          for (std::size_t i = 0; i < n; ++i) prod[i] += gamma[i];
          v[mon_pos.at(prod)] += c;
        }
        ideal.add(std::move(v));
      }
    rep.stabilized = true;
    for (const auto& b : monomials(n, static_cast<int>(bound) - 1)) {
      std::vector<Rational> v(mons.size());
      v[mon_pos.at(b)] = 1;
      if (!ideal.contains(std::move(v))) {
        rep.stabilized = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace qahom
