#include "gvm/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace gvm {

SignedPermutation SignedPermutation::identity(std::size_t m) {
  std::vector<int> p(m), s(m, 1);
  for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<int>(i);
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw std::invalid_argument("perm/signs size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (int t : perm_) {
    if (t < 0 || t >= static_cast<int>(perm_.size()) || seen[t])
      throw std::invalid_argument("not a permutation");
    seen[t] = true;
  }
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");
}

int SignedPermutation::minus_count() const {
  int c = 0;
  for (int s : signs_)
    if (s < 0) ++c;
  return c;
}

Weight SignedPermutation::apply(const Weight& mu) const {
  if (mu.rank() != perm_.size()) throw std::invalid_argument("rank mismatch in Weyl action");
  Weight r(mu.rank());
  for (std::size_t s = 0; s < perm_.size(); ++s)
    r.dbl(perm_[s]) = signs_[perm_[s]] * mu.dbl(s);
  return r;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("rank mismatch in composition");
  // (this o o): first o, then this. perm: s -> perm_[o.perm_[s]];
  // sign at target t: signs_[t] * o.signs_[perm^{-1}(t)].
  std::vector<int> p(rank()), s(rank());
  for (std::size_t src = 0; src < rank(); ++src) p[src] = perm_[o.perm_[src]];
  std::vector<int> inv(rank());
  for (std::size_t src = 0; src < rank(); ++src) inv[perm_[src]] = static_cast<int>(src);
  for (std::size_t t = 0; t < rank(); ++t) s[t] = signs_[t] * o.signs_[inv[t]];
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> p(rank()), s(rank());
  for (std::size_t src = 0; src < rank(); ++src) p[perm_[src]] = static_cast<int>(src);
  for (std::size_t t = 0; t < rank(); ++t) s[p[t]] = signs_[t];
  return SignedPermutation(std::move(p), std::move(s));
}

Weight reflect(const Algebra& alg, const Weight& gamma, const Weight& mu) {
  if (!alg.is_root(gamma)) throw std::invalid_argument("reflection vector is not a root");
  Rat p = coroot_pairing(mu, gamma);
  Weight r(mu.rank());
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    Rat v = rat(mu.dbl(i)) - p * rat(gamma.dbl(i));  // doubled coordinates
    if (!is_integer(v)) throw std::domain_error("reflection leaves the half-integer lattice");
    r.dbl(i) = to_long(v);
  }
  return r;
}

Weight affine_apply(const Algebra& alg, const SignedPermutation& w, const Weight& mu) {
  return w.apply(mu + alg.delta()) - alg.delta();
}

Weight affine_reflect(const Algebra& alg, const Weight& gamma, const Weight& mu) {
  return reflect(alg, gamma, mu + alg.delta()) - alg.delta();
}

SignedPermutation reflection_as_element(const Algebra& alg, const Weight& gamma) {
  if (!alg.is_root(gamma)) throw std::invalid_argument("not a root");
  const std::size_t m = gamma.rank();
  std::vector<int> nz;
  for (std::size_t i = 0; i < m; ++i)
    if (gamma.dbl(i) != 0) nz.push_back(static_cast<int>(i));
  auto id = SignedPermutation::identity(m);
  std::vector<int> p = id.perm(), s = id.signs();
  if (nz.size() == 1) {
    s[nz[0]] = -1;  // eps_i
  } else {
    int i = nz[0], j = nz[1];
    p[i] = j;
    p[j] = i;
    bool same_sign = (gamma.dbl(i) > 0) == (gamma.dbl(j) > 0);
    if (same_sign) {  // eps_i + eps_j: swap and negate
      s[i] = -1;
      s[j] = -1;
    }
  }
  return SignedPermutation(std::move(p), std::move(s));
}

int length(const Algebra& alg, const SignedPermutation& w) {
  // Count positive roots sent to negative ones. On the B/D root systems a
  // root is negative exactly when its first nonzero coordinate is.
  int l = 0;
  for (const auto& g : alg.positive_roots()) {
    Weight img = w.apply(g);
    for (std::size_t i = 0; i < img.rank(); ++i) {
      if (img.dbl(i) > 0) break;
      if (img.dbl(i) < 0) {
        ++l;
        break;
      }
    }
  }
  return l;
}

std::vector<Weight> orbit(const Algebra& alg, const Weight& mu) {
  if (alg.rank() > 7) throw std::length_error("orbit enumeration guarded at rank <= 7");
  std::unordered_set<Weight, WeightHash> seen;
  std::deque<Weight> queue{mu};
  seen.insert(mu);
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (const auto& a : alg.simple_roots()) {
      Weight img = reflect(alg, a, w);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

std::vector<SignedPermutation> enumerate_group(const Algebra& alg) {
  const int m = alg.rank();
  if (m > 7) throw std::length_error("full Weyl group enumeration guarded at rank <= 7");
  std::vector<int> p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p[i] = i;
  std::vector<SignedPermutation> out;
  const bool even_only = alg.spec().series == Series::D;
  do {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (even_only && (__builtin_popcount(mask) % 2) != 0) continue;
      std::vector<int> s(static_cast<std::size_t>(m), 1);
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) s[i] = -1;
      out.emplace_back(p, s);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<Weight> reflection_connecting(const Algebra& alg, const Weight& mu,
                                            const Weight& nu) {
  if (mu == nu) return std::nullopt;
  for (const auto& g : alg.positive_roots())
    if (reflect(alg, g, mu) == nu) return g;
  return std::nullopt;
}

std::optional<SignedPermutation> element_taking(const Algebra& alg, const Weight& src,
                                                const Weight& dst) {
  const std::size_t m = src.rank();
  if (dst.rank() != m) return std::nullopt;
  std::vector<int> p(m, -1), s(m, 1);
  std::vector<bool> used(m, false);
  int zero_target = -1;
  for (std::size_t i = 0; i < m; ++i) {  // source position i
    long long v = src.dbl(i);
    bool found = false;
    for (std::size_t t = 0; t < m; ++t) {
      if (used[t]) continue;
      if (std::llabs(dst.dbl(t)) == std::llabs(v)) {
        used[t] = true;
        p[i] = static_cast<int>(t);
        if (v == 0)
          zero_target = static_cast<int>(t);
        else
          s[t] = (dst.dbl(t) == v) ? 1 : -1;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (alg.spec().series == Series::D) {
    int minuses = 0;
    for (int x : s)
      if (x < 0) ++minuses;
    if (minuses % 2 != 0) {
      if (zero_target < 0) return std::nullopt;
      s[zero_target] = -1;
    }
  }
  SignedPermutation w(std::move(p), std::move(s));
  if (!(w.apply(src) == dst)) return std::nullopt;
  return w;
}

}  // namespace gvm
