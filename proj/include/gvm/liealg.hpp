#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvm/rational.hpp"
#include "gvm/weight.hpp"

namespace gvm {

enum class Series { B, D };

struct AlgebraSpec {
  Series series = Series::D;
  int rank = 0;  // m; matrix size N = 2m (D) or 2m+1 (B)

  int matrix_size() const { return series == Series::D ? 2 * rank : 2 * rank + 1; }
  std::string name() const { return (series == Series::B ? "B" : "D") + std::to_string(rank); }
  bool operator==(const AlgebraSpec& o) const { return series == o.series && rank == o.rank; }
};

enum class GenKind { Lower, Raise, Cartan };

// 1-based (i,j) matching the matrix pictures: raise at i<j, lower at i>j,
// cartan at i=j<=m.
struct GeneratorId {
  GenKind kind = GenKind::Cartan;
  int i = 0;
  int j = 0;

  bool operator==(const GeneratorId& o) const { return kind == o.kind && i == o.i && j == o.j; }
  bool operator<(const GeneratorId& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
  std::string str() const;
};

// Dense N x N matrix of exact rationals, antisymmetric with respect to the
// anti-diagonal: A[i][j] = -A[N+1-j][N+1-i] (1-based).
class MatrixElement {
 public:
  MatrixElement() = default;
  explicit MatrixElement(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rat(0)) {}

  int size() const { return n_; }
  // 1-based access, matching the paper's pictures.
  const Rat& at(int i, int j) const { return a_[idx(i, j)]; }
  Rat& at(int i, int j) { return a_[idx(i, j)]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }
  bool anti_transpose_symmetric() const;

  MatrixElement operator*(const MatrixElement& o) const;
  MatrixElement operator+(const MatrixElement& o) const;
  MatrixElement operator-(const MatrixElement& o) const;
  MatrixElement scaled(const Rat& c) const;
  bool operator==(const MatrixElement& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }
  int n_ = 0;
  std::vector<Rat> a_;
};

// ab - ba; sizes must agree.
MatrixElement bracket(const MatrixElement& a, const MatrixElement& b);

// A linear combination of generators: root-space parts plus a diagonal
// (Cartan) part given by coefficients of h_1..h_m.
struct GenCombo {
  std::vector<std::pair<GeneratorId, Rat>> terms;  // Lower/Raise only
  std::vector<Rat> cartan;                         // coefficient of h_i, size m

  bool is_zero() const {
    if (!terms.empty()) return false;
    for (const auto& c : cartan)
      if (c != 0) return false;
    return true;
  }
};

// Matrix realization of so(2m) / so(2m+1) with the bilinear form
// sum_j x_j y_{N+1-j}: generator tables, roots, brackets, gradings.
class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  int matrix_size() const { return n_; }

  const std::vector<GeneratorId>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  int handle(const GeneratorId& g) const;  // dense index into generators()
  const GeneratorId& gen(int handle) const { return gens_[handle]; }
  const MatrixElement& matrix(int handle) const { return mats_[handle]; }
  const MatrixElement& matrix(const GeneratorId& g) const { return mats_[handle(g)]; }
  // Root of a root-space generator; throws on cartan.
  const Weight& root_of(int handle) const;
  const Weight& root_of(const GeneratorId& g) const { return root_of(handle(g)); }

  // Generator whose root space is the given root, if any.
  std::optional<GeneratorId> generator_for_root(const Weight& root) const;

  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
  const Weight& delta() const { return delta_; }
  bool is_root(const Weight& w) const;

  // Exact decomposition of a matrix in the generator basis; throws if the
  // matrix is not in the algebra (round-trips with the generator matrices).
  GenCombo decompose(const MatrixElement& m) const;
  MatrixElement realize(const GenCombo& c) const;

  // lambda(h) for the diagonal element with coefficients c_i of h_i.
  static Rat eval_on_cartan(const Weight& lambda, const std::vector<Rat>& cartan);

  // Grading for the parabolic with single crossed node alpha_k:
  // degree of a generator = root(E) with E = diag(1^k, 0.., -1^k); cartan -> 0.
  int grading_degree(int handle, int k) const;
  int grading_degree(const GeneratorId& g, int k) const { return grading_degree(handle(g), k); }

  // Coordinates of w in the simple-root basis (triangular solve); the basis
  // for the weight ordering mu <= lambda.
  std::vector<Rat> simple_root_coords(const Weight& w) const;
  // lambda - mu a nonnegative-integer combination of simple roots.
  bool weight_leq(const Weight& mu, const Weight& lambda) const;

 private:
  void build();
  AlgebraSpec spec_;
  int n_ = 0;
  std::vector<GeneratorId> gens_;
  std::vector<MatrixElement> mats_;
  std::vector<Weight> roots_;  // per handle; zero Weight for cartan
  std::map<GeneratorId, int> handle_;
  std::map<std::vector<long long>, int> root_to_handle_;
  std::vector<Weight> pos_roots_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> fundamental_;
  Weight delta_;
};

}  // namespace gvm
