#include "gvm/liealg.hpp"

#include <algorithm>

namespace gvm {

std::string GeneratorId::str() const {
  switch (kind) {
    case GenKind::Cartan:
      return "h" + std::to_string(i);
    case GenKind::Raise:
      return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case GenKind::Lower:
      return "y[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  return "?";
}

bool MatrixElement::anti_transpose_symmetric() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) != -at(n_ + 1 - j, n_ + 1 - i)) return false;
  return true;
}

MatrixElement MatrixElement::operator*(const MatrixElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  MatrixElement r(n_);
  for (int i = 1; i <= n_; ++i)
    for (int l = 1; l <= n_; ++l) {
      const Rat& x = at(i, l);
      if (x == 0) continue;
      for (int j = 1; j <= n_; ++j) {
        const Rat& y = o.at(l, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

MatrixElement MatrixElement::operator+(const MatrixElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  MatrixElement r = *this;
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] += o.a_[t];
  return r;
}

MatrixElement MatrixElement::operator-(const MatrixElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  MatrixElement r = *this;
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] -= o.a_[t];
  return r;
}

MatrixElement MatrixElement::scaled(const Rat& c) const {
  MatrixElement r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

MatrixElement bracket(const MatrixElement& a, const MatrixElement& b) {
  return a * b - b * a;
}

Algebra::Algebra(AlgebraSpec spec) : spec_(spec), n_(spec.matrix_size()) {
  const int min_rank = spec_.series == Series::D ? 2 : 1;
  if (spec_.rank < min_rank) throw std::invalid_argument("rank out of range for series");
  build();
}

void Algebra::build() {
  const int m = spec_.rank;
  const int N = n_;

  auto root_of_raise = [&](int i, int j) {
    Weight r(static_cast<std::size_t>(m));
    if (j <= m) {
      r.dbl(i - 1) += 2;
      r.dbl(j - 1) -= 2;  // eps_i - eps_j
    } else if (spec_.series == Series::B && j == m + 1) {
      r.dbl(i - 1) += 2;  // eps_i
    } else {
      r.dbl(i - 1) += 2;
      r.dbl(N - j) += 2;  // eps_i + eps_{N+1-j}
    }
    return r;
  };
  auto make_matrix = [&](GenKind kind, int i, int j) {
    MatrixElement e(N);
    if (kind == GenKind::Cartan) {
      e.at(i, i) = 1;
      e.at(N + 1 - i, N + 1 - i) = -1;
    } else {
      e.at(i, j) = 1;
      e.at(N + 1 - j, N + 1 - i) = -1;
    }
    return e;
  };
  auto add = [&](GenKind kind, int i, int j, const Weight& root) {
    GeneratorId g{kind, i, j};
    handle_[g] = static_cast<int>(gens_.size());
    gens_.push_back(g);
    mats_.push_back(make_matrix(kind, i, j));
    roots_.push_back(root);
    if (kind != GenKind::Cartan) root_to_handle_[root.doubled()] = handle_[g];
  };

  for (int i = 1; i <= m; ++i) add(GenKind::Cartan, i, i, Weight(static_cast<std::size_t>(m)));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      if (i + j >= N + 1) continue;  // anti-diagonal and below: dependent cells
      Weight r = root_of_raise(i, j);
      add(GenKind::Raise, i, j, r);
      add(GenKind::Lower, j, i, -r);
    }

  for (std::size_t h = 0; h < gens_.size(); ++h)
    if (gens_[h].kind == GenKind::Raise) pos_roots_.push_back(roots_[h]);

  simple_roots_.clear();
  for (int i = 1; i < m; ++i) {
    Weight a(static_cast<std::size_t>(m));
    a.dbl(i - 1) = 2;
    a.dbl(i) = -2;
    simple_roots_.push_back(a);  // eps_i - eps_{i+1}
  }
  Weight last(static_cast<std::size_t>(m));
  if (spec_.series == Series::D) {
    last.dbl(m - 2) = 2;
    last.dbl(m - 1) = 2;  // eps_{m-1} + eps_m
  } else {
    last.dbl(m - 1) = 2;  // eps_m
  }
  simple_roots_.push_back(last);

  fundamental_.clear();
  for (int j = 1; j <= m; ++j) {
    Weight w(static_cast<std::size_t>(m));
    if (spec_.series == Series::D && j >= m - 1) {
      for (int i = 0; i < m; ++i) w.dbl(i) = 1;
      if (j == m) w.dbl(m - 1) = -1;  // varpi_m = [1,..,1,-1]/2, varpi_{m-1} = [1,..,1]/2
    } else if (spec_.series == Series::B && j == m) {
      for (int i = 0; i < m; ++i) w.dbl(i) = 1;
    } else {
      for (int i = 0; i < j; ++i) w.dbl(i) = 2;
    }
    fundamental_.push_back(w);
  }

  delta_ = Weight(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    delta_.dbl(i) = spec_.series == Series::D ? 2 * (m - 1 - i) : 2 * (m - i) - 1;
}

int Algebra::handle(const GeneratorId& g) const {
  auto it = handle_.find(g);
  if (it == handle_.end()) throw std::invalid_argument("unknown generator " + g.str());
  return it->second;
}

const Weight& Algebra::root_of(int h) const {
  if (gens_[h].kind == GenKind::Cartan) throw std::invalid_argument("cartan generator has no root");
  return roots_[h];
}

std::optional<GeneratorId> Algebra::generator_for_root(const Weight& root) const {
  auto it = root_to_handle_.find(root.doubled());
  if (it == root_to_handle_.end()) return std::nullopt;
  return gens_[it->second];
}

bool Algebra::is_root(const Weight& w) const {
  return root_to_handle_.count(w.doubled()) != 0;
}

GenCombo Algebra::decompose(const MatrixElement& mat) const {
  if (mat.size() != n_) throw std::invalid_argument("matrix size mismatch");
  GenCombo c;
  c.cartan.assign(static_cast<std::size_t>(spec_.rank), Rat(0));
  for (std::size_t h = 0; h < gens_.size(); ++h) {
    const auto& g = gens_[h];
    const Rat& v = mat.at(g.i, g.j);
    if (v == 0) continue;
    if (g.kind == GenKind::Cartan)
      c.cartan[g.i - 1] = v;
    else
      c.terms.emplace_back(g, v);
  }
  if (!(realize(c) == mat)) throw std::invalid_argument("matrix not in the algebra span");
  return c;
}

MatrixElement Algebra::realize(const GenCombo& c) const {
  MatrixElement r(n_);
  for (const auto& [g, coef] : c.terms) r = r + matrix(g).scaled(coef);
  for (std::size_t i = 0; i < c.cartan.size(); ++i)
    if (c.cartan[i] != 0)
      r = r + matrix(GeneratorId{GenKind::Cartan, static_cast<int>(i + 1),
                                 static_cast<int>(i + 1)})
                  .scaled(c.cartan[i]);
  return r;
}

Rat Algebra::eval_on_cartan(const Weight& lambda, const std::vector<Rat>& cartan) {
  Rat s = 0;
  for (std::size_t i = 0; i < cartan.size() && i < lambda.rank(); ++i)
    s += cartan[i] * rat(lambda.dbl(i), 2);
  return s;
}

int Algebra::grading_degree(int h, int k) const {
  if (gens_[h].kind == GenKind::Cartan) return 0;
  Rat d = roots_[h].eval_E(static_cast<std::size_t>(k));
  return static_cast<int>(to_long(d));
}

std::vector<Rat> Algebra::simple_root_coords(const Weight& w) const {
  const int m = spec_.rank;
  // partial sums s_i = w_1 + .. + w_i
  std::vector<Rat> s(static_cast<std::size_t>(m));
  Rat acc = 0;
  for (int i = 0; i < m; ++i) {
    acc += rat(w.dbl(i), 2);
    s[i] = acc;
  }
  std::vector<Rat> c(static_cast<std::size_t>(m));
  if (spec_.series == Series::B) {
    for (int i = 0; i < m; ++i) c[i] = s[i];
  } else {
    for (int i = 0; i + 2 < m; ++i) c[i] = s[i];
    c[m - 1] = s[m - 1] / 2;
    c[m - 2] = s[m - 2] - s[m - 1] / 2;
  }
  return c;
}

bool Algebra::weight_leq(const Weight& mu, const Weight& lambda) const {
  auto c = simple_root_coords(lambda - mu);
  for (const auto& x : c)
    if (!is_integer(x) || x < 0) return false;
  return true;
}

}  // namespace gvm
