#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "gvm/liealg.hpp"
#include "gvm/weight.hpp"

namespace gvm {

// Element of the Weyl group of type B/D as a signed permutation of the
// coordinates. Acting on a weight: result[i] = signs[i] * mu[perm^{-1}(i)]
// (0-based internally; the convention round-trips with root reflections,
// see reflection_as_element).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  static SignedPermutation identity(std::size_t m);
  // perm maps source position -> target position; signs applied at the target.
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  std::size_t rank() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  int minus_count() const;

  Weight apply(const Weight& mu) const;
  SignedPermutation compose(const SignedPermutation& o) const;  // this after o
  SignedPermutation inverse() const;

  bool operator==(const SignedPermutation& o) const {
    return perm_ == o.perm_ && signs_ == o.signs_;
  }
  bool operator<(const SignedPermutation& o) const {
    if (perm_ != o.perm_) return perm_ < o.perm_;
    return signs_ < o.signs_;
  }

 private:
  std::vector<int> perm_;   // perm_[s] = target of source s
  std::vector<int> signs_;  // +-1 per target coordinate
};

// s_gamma(mu) = mu - <mu,H_gamma> gamma; gamma must be a root of alg.
Weight reflect(const Algebra& alg, const Weight& gamma, const Weight& mu);

// w . mu = w(mu + delta) - delta
Weight affine_apply(const Algebra& alg, const SignedPermutation& w, const Weight& mu);
Weight affine_reflect(const Algebra& alg, const Weight& gamma, const Weight& mu);

// s_gamma as a group element.
SignedPermutation reflection_as_element(const Algebra& alg, const Weight& gamma);

// Number of positive roots sent to negative ones.
int length(const Algebra& alg, const SignedPermutation& w);

// Closure of mu under simple reflections.
std::vector<Weight> orbit(const Algebra& alg, const Weight& mu);

// All of W; guarded at rank <= 7 (|W| <= 645120).
std::vector<SignedPermutation> enumerate_group(const Algebra& alg);

// Positive root gamma with s_gamma(mu) = nu, first in the fixed positive-root
// order; none when mu == nu.
std::optional<Weight> reflection_connecting(const Algebra& alg, const Weight& mu,
                                            const Weight& nu);

// Unique w in W(series) with w(src) == dst, when the entries of src are
// distinct in absolute value; the sign on a zero coordinate is chosen to fix
// the D-series parity. Returns nullopt if no group element works.
std::optional<SignedPermutation> element_taking(const Algebra& alg, const Weight& src,
                                                const Weight& dst);

}  // namespace gvm
