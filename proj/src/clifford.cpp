#include "gvm/clifford.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <stdexcept>

namespace gvm {

CliffordElement CliffordElement::scalar(int n, const Rat& c) {
  CliffordElement r(n);
  r.add_term(0, c);
  return r;
}

CliffordElement CliffordElement::blade(int n, std::uint32_t mask, const Rat& c) {
  if (mask >= (1u << n)) throw std::invalid_argument("blade index out of range");
  CliffordElement r(n);
  r.add_term(mask, c);
  return r;
}

CliffordElement CliffordElement::e(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
  return blade(n, 1u << (i - 1));
}

int CliffordElement::max_grade() const {
  int g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, std::popcount(m));
  return g;
}

void CliffordElement::add_term(std::uint32_t mask, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("clifford dimension mismatch");
  CliffordElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("clifford dimension mismatch");
  CliffordElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

CliffordElement CliffordElement::scaled(const Rat& c) const {
  CliffordElement r(n_);
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("clifford dimension mismatch");
  CliffordElement r(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      // Move each generator of mb through ma (counting anticommutations),
      // then contract repeats with e_i e_i = -1.
      int sign = 1;
      std::uint32_t b = mb;
      while (b) {
        std::uint32_t low = b & (~b + 1);
        int bit = std::countr_zero(low);
        std::uint32_t higher = ma >> (bit + 1);
        if (std::popcount(higher) % 2) sign = -sign;
        b ^= low;
      }
      int repeats = std::popcount(ma & mb);
      if (repeats % 2) sign = -sign;
      Rat prod = ca * cb;
      if (sign < 0) prod = -prod;
      r.add_term(ma ^ mb, prod);
    }
  }
  return r;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    if (m == 0) {
      mono = rat_str(c);
    } else {
      if (c == -1)
        mono = "-";
      else if (c != 1)
        mono = rat_str(c) + "*";
      mono += "e";
      for (int i = 0; i < 32; ++i)
        if (m & (1u << i)) mono += std::to_string(i + 1);
    }
    if (!first && mono[0] != '-') s += "+";
    s += mono;
    first = false;
  }
  return s;
}

PolyField PolyField::monomial(int k, int n, const std::vector<int>& exponents,
                              const CliffordElement& coeff) {
  PolyField f(k, n);
  if (static_cast<int>(exponents.size()) != k * n)
    throw std::invalid_argument("exponent vector has wrong length");
  f.add_term(exponents, coeff);
  return f;
}

int PolyField::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void PolyField::add_term(const std::vector<int>& expo, const CliffordElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyField PolyField::operator+(const PolyField& o) const {
  if (o.k_ != k_ || o.n_ != n_) throw std::invalid_argument("field shape mismatch");
  PolyField r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

PolyField PolyField::operator-(const PolyField& o) const {
  if (o.k_ != k_ || o.n_ != n_) throw std::invalid_argument("field shape mismatch");
  PolyField r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c.scaled(rat(-1)));
  return r;
}

PolyField PolyField::scaled(const Rat& c) const {
  PolyField r(k_, n_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x.scaled(c));
  return r;
}

PolyField PolyField::derivative(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > n_) throw std::out_of_range("variable index out of range");
  const int v = var_index(i, j);
  PolyField r(k_, n_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    auto de = e;
    de[v] -= 1;
    r.add_term(de, c.scaled(rat(e[v])));
  }
  return r;
}

PolyField PolyField::clifford_left(const CliffordElement& a) const {
  PolyField r(k_, n_);
  for (const auto& [e, c] : terms_) r.add_term(e, a * c);
  return r;
}

std::string PolyField::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (int i = 1; i <= k_; ++i)
      for (int j = 1; j <= n_; ++j) {
        int x = e[var_index(i, j)];
        if (!x) continue;
        s += "*x" + std::to_string(i) + std::to_string(j);
        if (x > 1) s += "^" + std::to_string(x);
      }
  }
  return s;
}

PolyField dirac(int i, const PolyField& f) {
  if (i < 1 || i > f.k()) throw std::out_of_range("dirac variable index out of range");
  PolyField r(f.k(), f.n());
  for (int j = 1; j <= f.n(); ++j)
    r = r + f.derivative(i, j).clifford_left(CliffordElement::e(f.n(), j));
  return r;
}

PolyField laplacian_identity(int i, const PolyField& f) {
  PolyField r = dirac(i, dirac(i, f));
  for (int j = 1; j <= f.n(); ++j) r = r + f.derivative(i, j).derivative(i, j);
  return r;
}

std::pair<PolyField, PolyField> sequence_stage1(const PolyField& f) {
  return {dirac(1, f), dirac(2, f)};
}

std::pair<PolyField, PolyField> sequence_stage2(const PolyField& g1, const PolyField& g2,
                                                const SequenceOptions& opt) {
  PolyField d1 = dirac(1, dirac(1, g2)) - dirac(2, dirac(1, g1));
  PolyField d2 = dirac(1, dirac(2, g2)) - dirac(2, dirac(2, g1));
  if (opt.mutate_stage2) d2 = dirac(1, dirac(2, g2)) + dirac(2, dirac(2, g1));
  if (opt.alt_signs) return {d2, d1.scaled(rat(-1))};
  return {d1, d2};
}

PolyField sequence_stage3(const PolyField& h1, const PolyField& h2, const SequenceOptions& opt) {
  // Alternative identification: stage 2 emits (d_2, -d_1), so the pairing
  // that produced D_1 h_2 - D_2 h_1 now reads the components the other way.
  if (opt.alt_signs) return dirac(1, h1) + dirac(2, h2);
  return dirac(1, h2) - dirac(2, h1);
}

namespace {
void check_input(const PolyField& f, const SequenceOptions& opt, ComplexReport& rep) {
  ++rep.inputs_checked;
  auto [g1, g2] = sequence_stage1(f);
  if (!g1.is_zero() || !g2.is_zero()) ++rep.nonzero_inputs;
  auto [h1, h2] = sequence_stage2(g1, g2, opt);
  PolyField third = sequence_stage3(h1, h2, opt);
  // stage3 o stage2 on the stage-1 image double-checks nothing unless
  // stage2 o stage1 already failed, so test the pairs (f, 0) and (0, f) too.
  bool bad = !h1.is_zero() || !h2.is_zero();
  auto [p1, p2] = sequence_stage2(f, PolyField(2, f.n()), opt);
  auto [q1, q2] = sequence_stage2(PolyField(2, f.n()), f, opt);
  PolyField r1 = sequence_stage3(p1, p2, opt);
  PolyField r2 = sequence_stage3(q1, q2, opt);
  bad = bad || !r1.is_zero() || !r2.is_zero();
  (void)third;
  if (!laplacian_identity(1, f).is_zero() || !laplacian_identity(2, f).is_zero())
    ++rep.laplacian_failures;
  if (bad) {
    ++rep.failures;
    if (rep.failure_notes.size() < 4) {
      std::string note = "input " + f.str() + ": ";
      if (!h1.is_zero() || !h2.is_zero())
        note += "stage2(stage1 f) = (" + h1.str() + ", " + h2.str() + ")";
      else
        note += "stage3(stage2 pair) = (" + r1.str() + ", " + r2.str() + ")";
      rep.failure_notes.push_back(note);
    }
  }
}
}  // namespace

ComplexReport verify_complex(int n, int max_degree, bool exhaustive, int trials,
                             const SequenceOptions& opt, int coeff_grade, unsigned seed) {
  if (n < 1 || n > 8 || max_degree < 0 || max_degree > 6)
    throw std::length_error("verify_complex guard: n <= 8, degree <= 6");
  const int k = 2;
  const int nvars = k * n;

  std::vector<std::uint32_t> blades;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) <= coeff_grade) blades.push_back(m);

  std::vector<std::vector<int>> monos;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == nvars) {
      monos.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[v] = d;
      rec(v + 1, left - d);
    }
    e[v] = 0;
  };
  rec(0, max_degree);

  ComplexReport rep;
  if (exhaustive) {
    for (const auto& mono : monos)
      for (auto blade : blades)
        check_input(PolyField::monomial(k, n, mono, CliffordElement::blade(n, blade)), opt, rep);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pm(0, monos.size() - 1);
    std::uniform_int_distribution<std::size_t> pb(0, blades.size() - 1);
    std::uniform_int_distribution<int> pc(-4, 4);
    for (int t = 0; t < trials; ++t) {
      PolyField f(k, n);
      for (int parts = 0; parts < 3; ++parts) {
        int c = pc(rng);
        if (!c) continue;
        f = f + PolyField::monomial(k, n, monos[pm(rng)],
                                    CliffordElement::blade(n, blades[pb(rng)], rat(c)));
      }
      check_input(f, opt, rep);
    }
  }
  return rep;
}

}  // namespace gvm
