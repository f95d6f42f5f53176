#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gvm/liealg.hpp"
#include "gvm/weyl.hpp"

namespace gvm {

// Parabolic subalgebra with a single crossed node alpha_k, 1 <= k <= rank.
struct ParabolicSpec {
  AlgebraSpec algebra;
  int cross = 1;  // k

  int k() const { return cross; }
  bool operator==(const ParabolicSpec& o) const {
    return algebra == o.algebra && cross == o.cross;
  }
};

enum class EdgeKind { Standard, Nonstandard, Conjectural, Hasse };

struct GraphEdge {
  int from = 0;
  int to = 0;
  // (from - to)(E); a positive integer on every in-scope arrow, but singular
  // Hasse arrows on non-integral orbits can carry a non-integer drop, flagged
  // by order_known = false.
  long long order = 0;
  bool order_known = true;
  EdgeKind kind = EdgeKind::Hasse;
};

struct GraphVertex {
  Weight weight;       // the highest weight mu (affine form)
  std::string label;   // display: mu and mu+delta
};

struct LabeledGraph {
  ParabolicSpec spec;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  int vertex_index(const Weight& w) const;
  std::vector<std::vector<int>> adjacency() const;
  int connected_components() const;  // undirected
};

class Parabolic {
 public:
  Parabolic(const Algebra& alg, int cross);

  const Algebra& algebra() const { return *alg_; }
  ParabolicSpec spec() const { return ParabolicSpec{alg_->spec(), k_}; }
  int k() const { return k_; }
  int n() const { return alg_->rank() - k_; }

  const std::vector<Weight>& uncrossed_simple_roots() const { return uncrossed_; }
  const Weight& crossed_simple_root() const { return crossed_; }

  // E = diag(1^k, 0^{N-2k}, -1^k), the unique element with [E, g_i] = i g_i.
  MatrixElement grading_element() const;

  bool is_p_dominant(const Weight& mu) const;
  bool is_strictly_p_dominant(const Weight& mu) const;
  bool is_p_integral(const Weight& mu) const;

  Rat eval_E(const Weight& mu) const { return mu.eval_E(static_cast<std::size_t>(k_)); }

  // Minimal-length coset representatives, enumerated combinatorially from the
  // strictly p-dominant signed arrangements of delta.
  const std::vector<SignedPermutation>& wp_elements() const;

  LabeledGraph regular_hasse_graph() const;
  LabeledGraph singular_hasse_graph(const Weight& lambda) const;

  // Dominant representative of v on its W-orbit (abs-sort descending, D-series
  // parity carried by the sign of the last coordinate).
  Weight dominant_representative(const Weight& v) const;

  // BGG criterion: chain of affine reflections lambda -> ... -> mu with
  // nonnegative-integer coroot pairings at every step.
  bool true_verma_hom_exists(const Weight& mu, const Weight& lambda) const;

  // Zero iff the true-Verma image lands in some M(s_alpha . lambda), alpha
  // uncrossed simple.
  bool standard_map_is_zero(const Weight& mu, const Weight& lambda) const;

  Rat operator_order(const Weight& lambda, const Weight& mu) const {
    return eval_E(lambda) - eval_E(mu);
  }

  // confirm_nonstandard(lambda, mu): nonzero-extremal-vector oracle supplied
  // by the verma module; empty function keeps candidate arrows conjectural.
  using NonstandardOracle = std::function<bool(const Weight& lambda, const Weight& mu)>;
  LabeledGraph bgg_graph(const Weight& lambda,
                         const NonstandardOracle& confirm_nonstandard = {}) const;

 private:
  std::vector<Weight> orbit_vertices(const Weight& lambda_tilde_plus_delta) const;
  const Algebra* alg_;
  int k_;
  std::vector<Weight> uncrossed_;
  Weight crossed_;
  mutable std::vector<SignedPermutation> wp_cache_;
};

}  // namespace gvm
