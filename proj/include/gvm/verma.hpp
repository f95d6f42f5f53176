#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gvm/parabolic.hpp"

namespace gvm {

// Canonical PBW term inside M_p(lambda) = U(g_-) (x) L(lambda): a sorted
// monomial in g_- letters and a sorted monomial in g_0-lowering letters
// applied to the highest weight vector. Letters are stored as ranks in the
// context's fixed order (grading degree first, g_{-2} leftmost, then (i,j)
// lexicographically descending), so lexicographic comparison of rank vectors
// is the canonical term order.
struct PBWTerm {
  std::vector<int> y;  // ranks into gminus letters
  std::vector<int> Y;  // ranks into gzero lowering letters

  bool operator<(const PBWTerm& o) const {
    if (y != o.y) return y < o.y;
    return Y < o.Y;
  }
  bool operator==(const PBWTerm& o) const { return y == o.y && Y == o.Y; }
};

class VermaContext;

// Finite linear combination of PBW terms of a single weight; the L-part of
// every term is a basis monomial of its L(lambda) weight space.
class VermaVector {
 public:
  VermaVector() = default;
  explicit VermaVector(Weight lambda) : lambda_(std::move(lambda)) {}

  const Weight& lambda() const { return lambda_; }
  const std::map<PBWTerm, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const PBWTerm& t, const Rat& c);
  VermaVector operator+(const VermaVector& o) const;
  VermaVector operator-(const VermaVector& o) const;
  VermaVector scaled(const Rat& c) const;
  bool operator==(const VermaVector& o) const {
    return lambda_ == o.lambda_ && terms_ == o.terms_;
  }

 private:
  Weight lambda_;
  std::map<PBWTerm, Rat> terms_;
};

// Weight space L(lambda)_nu of the inducing module, presented as the weight
// space of the g_0^ss Verma module modulo the submodule generated by the
// vectors Y_alpha^{<lambda,H_alpha>+1} v_lambda (alpha uncrossed simple).
struct LWeightSpace {
  Weight nu;
  std::vector<std::vector<int>> monomials;       // canonical Y-rank monomials
  std::map<std::vector<int>, int> mono_index;
  std::vector<int> basis;                        // monomial indices spanning the quotient
  std::vector<std::vector<Rat>> reduce;          // monomial -> coordinates over basis

  int dim() const { return static_cast<int>(basis.size()); }
};

struct ExtremalSolution {
  Weight lambda;
  Weight mu;
  std::vector<VermaVector> basis;  // normalized: leading coordinate 1

  int dim() const { return static_cast<int>(basis.size()); }
};

// Computation in M_p(lambda) for a fixed parabolic and p-dominant p-integral
// highest weight. All operations are exact; the L weight-space cache is
// internally synchronized.
class VermaContext {
 public:
  VermaContext(const Parabolic& par, Weight lambda);

  const Parabolic& parabolic() const { return *par_; }
  const Algebra& algebra() const { return *alg_; }
  const Weight& lambda() const { return lambda_; }

  int num_gminus() const { return static_cast<int>(gminus_.size()); }
  int num_gzero_lower() const { return static_cast<int>(gzero_low_.size()); }
  int gminus_handle(int rank) const { return gminus_[rank]; }
  int gzero_lower_handle(int rank) const { return gzero_low_[rank]; }
  const GeneratorId& gminus_gen(int rank) const { return alg_->gen(gminus_[rank]); }
  const GeneratorId& gzero_lower_gen(int rank) const { return alg_->gen(gzero_low_[rank]); }

  Weight term_weight(const PBWTerm& t) const;

  const LWeightSpace& l_weight_space(const Weight& nu) const;

  VermaVector highest_vector() const;
  VermaVector act(int handle, const VermaVector& v) const;
  VermaVector act(const GeneratorId& g, const VermaVector& v) const {
    return act(alg_->handle(g), v);
  }
  VermaVector act(const GenCombo& c, const VermaVector& v) const;
  // Applies a product of generators, rightmost letter first.
  VermaVector act_word(const std::vector<int>& handles, const VermaVector& v) const;

  std::vector<VermaVector> weight_space_basis(const Weight& mu) const;
  ExtremalSolution extremal_vectors(const Weight& mu) const;

  std::string to_text(const VermaVector& v) const;

 private:
  friend struct StraightenEngine;
  VermaVector finish(std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> raw) const;
  const GenCombo& bracket_combo(int a, int b) const;
  void enumerate_y_monomials(const Weight& target,
                             std::vector<std::vector<int>>& out) const;
  void enumerate_Y_monomials(const Weight& target,
                             std::vector<std::vector<int>>& out) const;

  const Parabolic* par_;
  const Algebra* alg_;
  Weight lambda_;
  std::vector<int> gminus_;     // handles in canonical letter order
  std::vector<int> gzero_low_;  // handles in canonical letter order
  std::vector<int> order_;      // handle -> total letter order
  std::vector<int> rank_of_;    // handle -> rank within its class (-1 otherwise)
  enum class LClass { YMinus, YZero, Cartan, Raise };
  std::vector<LClass> cls_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, GenCombo> brackets_;
  mutable std::map<std::vector<long long>, std::unique_ptr<LWeightSpace>> lspaces_;
};

// Applies u (a product in U(g_-) U(g_0^-), leftmost factor acting last) to an
// extremal vector of a homomorphism into M_p(lambda).
VermaVector hom_apply(const VermaContext& ctx, const VermaVector& extremal,
                      const std::vector<GeneratorId>& u);

// outer: extremal vector of M_p(mu) -> M_p(lambda) inside ctx (over lambda);
// inner: extremal vector of M_p(nu) -> M_p(mu). Returns the image of the
// highest weight vector of M_p(nu) under the composition.
VermaVector compose(const VermaContext& ctx, const VermaVector& outer,
                    const VermaVector& inner);
bool compose_is_zero(const VermaContext& ctx, const VermaVector& outer,
                     const VermaVector& inner);

}  // namespace gvm
