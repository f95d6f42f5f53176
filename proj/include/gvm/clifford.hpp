#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gvm/rational.hpp"

namespace gvm {

// Element of Cliff(n): e_i e_i = -1, e_i e_j = -e_j e_i. Basis blades are
// subsets of {1..n} stored as bitmasks.
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int n) : n_(n) {}
  static CliffordElement scalar(int n, const Rat& c);
  static CliffordElement blade(int n, std::uint32_t mask, const Rat& c = Rat(1));
  static CliffordElement e(int n, int i);  // 1-based generator

  int dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, Rat>& terms() const { return terms_; }
  int max_grade() const;

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement scaled(const Rat& c) const;
  bool operator==(const CliffordElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  void add_term(std::uint32_t mask, const Rat& c);
  int n_ = 0;
  std::map<std::uint32_t, Rat> terms_;
};

// Polynomial in k*n commuting variables x_{ij} (i <= k vector slots, j <= n
// coordinates) with Clifford coefficients.
class PolyField {
 public:
  PolyField() = default;
  PolyField(int k, int n) : k_(k), n_(n) {}
  static PolyField monomial(int k, int n, const std::vector<int>& exponents,
                            const CliffordElement& coeff);

  int vars() const { return k_ * n_; }
  int k() const { return k_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;  // max total degree, -1 when zero

  PolyField operator+(const PolyField& o) const;
  PolyField operator-(const PolyField& o) const;
  PolyField scaled(const Rat& c) const;
  bool operator==(const PolyField& o) const {
    return k_ == o.k_ && n_ == o.n_ && terms_ == o.terms_;
  }

  PolyField derivative(int i, int j) const;       // d/dx_{ij}, 1-based
  PolyField clifford_left(const CliffordElement& a) const;

  std::string str() const;

 private:
  void add_term(const std::vector<int>& expo, const CliffordElement& c);
  int var_index(int i, int j) const { return (i - 1) * n_ + (j - 1); }
  int k_ = 0, n_ = 0;
  std::map<std::vector<int>, CliffordElement> terms_;
};

// D_i f = sum_j e_j . df/dx_{ij}
PolyField dirac(int i, const PolyField& f);

// D_i(D_i f) + sum_j d^2 f / dx_{ij}^2; identically zero.
PolyField laplacian_identity(int i, const PolyField& f);

// The k = 2 operator sequence. Stage 1: f -> (D_1 f, D_2 f).
// Stage 2: (g_1,g_2) -> (D_1 D_1 g_2 - D_2 D_1 g_1, D_1 D_2 g_2 - D_2 D_2 g_1).
// Stage 3: (h_1,h_2) -> D_1 h_2 - D_2 h_1.
// alt_signs selects the dual identification: stage2' = (stage2_2, -stage2_1),
// stage3' = D_1 h_2 + D_2 h_1.
// mutate_stage2 flips one stage-2 sign (negative control for the checker).
struct SequenceOptions {
  bool alt_signs = false;
  bool mutate_stage2 = false;
};

std::pair<PolyField, PolyField> sequence_stage1(const PolyField& f);
std::pair<PolyField, PolyField> sequence_stage2(const PolyField& g1, const PolyField& g2,
                                                const SequenceOptions& opt = {});
PolyField sequence_stage3(const PolyField& h1, const PolyField& h2,
                          const SequenceOptions& opt = {});

struct ComplexReport {
  long long inputs_checked = 0;
  long long nonzero_inputs = 0;   // inputs whose stage-1 image is nonzero
  long long failures = 0;         // inputs with a nonzero composite residual
  long long laplacian_failures = 0;
  std::vector<std::string> failure_notes;  // exact residuals for the first few

  bool ok() const { return failures == 0 && laplacian_failures == 0; }
};

// Runs both composites (stage2 o stage1 and stage3 o stage2) over monomial
// fields of total degree <= max_degree with Clifford coefficients of grade <=
// coeff_grade, exhaustively ("random" mode samples `trials` of them).
ComplexReport verify_complex(int n, int max_degree, bool exhaustive, int trials,
                             const SequenceOptions& opt = {}, int coeff_grade = 2,
                             unsigned seed = 12021);

}  // namespace gvm
