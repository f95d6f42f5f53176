#include "gvm/verma.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace gvm {

void VermaVector::add(const PBWTerm& t, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VermaVector VermaVector::operator+(const VermaVector& o) const {
  if (lambda_.rank() == 0) return o;
  if (o.lambda_.rank() == 0) return *this;
  if (!(lambda_ == o.lambda_))
    throw std::invalid_argument("verma vectors live in different modules");
  VermaVector r = *this;
  for (const auto& [t, c] : o.terms_) r.add(t, c);
  return r;
}

VermaVector VermaVector::operator-(const VermaVector& o) const {
  return *this + o.scaled(rat(-1));
}

VermaVector VermaVector::scaled(const Rat& c) const {
  VermaVector r(lambda_);
  if (c == 0) return r;
  for (const auto& [t, x] : terms_) r.terms_.emplace(t, x * c);
  return r;
}

VermaContext::VermaContext(const Parabolic& par, Weight lambda)
    : par_(&par), alg_(&par.algebra()), lambda_(std::move(lambda)) {
  if (lambda_.rank() != static_cast<std::size_t>(alg_->rank()))
    throw std::invalid_argument("lambda rank mismatch");
  if (!par_->is_p_dominant(lambda_) || !par_->is_p_integral(lambda_))
    throw std::invalid_argument("lambda must be p-dominant and p-integral");

  const int k = par_->k();
  const int ng = alg_->num_generators();
  cls_.resize(static_cast<std::size_t>(ng));
  order_.assign(static_cast<std::size_t>(ng), 0);
  rank_of_.assign(static_cast<std::size_t>(ng), -1);

  // letter order key: class, then grading degree ascending, then (i,j)
  // lexicographically descending
  struct Key {
    int cls, deg, i, j, handle;
  };
  std::vector<Key> keys;
  for (int h = 0; h < ng; ++h) {
    const GeneratorId& g = alg_->gen(h);
    int deg = alg_->grading_degree(h, k);
    LClass c;
    if (g.kind == GenKind::Cartan)
      c = LClass::Cartan;
    else if (g.kind == GenKind::Raise)
      c = LClass::Raise;
    else
      c = deg < 0 ? LClass::YMinus : LClass::YZero;
    cls_[h] = c;
    int cord = c == LClass::YMinus ? 0 : c == LClass::YZero ? 1 : c == LClass::Cartan ? 2 : 3;
    keys.push_back({cord, deg, -g.i, -g.j, h});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  for (int pos = 0; pos < ng; ++pos) {
    order_[keys[pos].handle] = pos;
    if (cls_[keys[pos].handle] == LClass::YMinus) {
      rank_of_[keys[pos].handle] = static_cast<int>(gminus_.size());
      gminus_.push_back(keys[pos].handle);
    } else if (cls_[keys[pos].handle] == LClass::YZero) {
      rank_of_[keys[pos].handle] = static_cast<int>(gzero_low_.size());
      gzero_low_.push_back(keys[pos].handle);
    }
  }
}

Weight VermaContext::term_weight(const PBWTerm& t) const {
  Weight w = lambda_;
  for (int r : t.y) w = w + alg_->root_of(gminus_[r]);
  for (int r : t.Y) w = w + alg_->root_of(gzero_low_[r]);
  return w;
}

const GenCombo& VermaContext::bracket_combo(int a, int b) const {
  std::scoped_lock lock(mu_);
  auto it = brackets_.find({a, b});
  if (it != brackets_.end()) return it->second;
  GenCombo c = alg_->decompose(bracket(alg_->matrix(a), alg_->matrix(b)));
  return brackets_.emplace(std::pair{a, b}, std::move(c)).first->second;
}

// Straightens arbitrary words in U(g) applied to v_lambda into canonical
// (g_- monomial, g_0^- monomial) pairs: out-of-order adjacent letters are
// swapped with a commutator correction, trailing Cartan letters evaluate to
// lambda(h), trailing raising letters annihilate v_lambda.
struct StraightenEngine {
  const VermaContext& ctx;
  const Algebra& alg;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> out;

  void run(std::vector<int> word, Rat coeff) {
    std::deque<std::pair<std::vector<int>, Rat>> work;
    work.emplace_back(std::move(word), std::move(coeff));
    while (!work.empty()) {
      auto [w, c] = std::move(work.front());
      work.pop_front();
      if (c == 0) continue;

      // trailing Cartan / raising letters hit v_lambda
      bool dead = false;
      while (!w.empty()) {
        int h = w.back();
        auto cl = ctx.cls_[h];
        if (cl == VermaContext::LClass::Cartan) {
          c *= rat(ctx.lambda_.dbl(alg.gen(h).i - 1), 2);
          w.pop_back();
          if (c == 0) {
            dead = true;
            break;
          }
        } else if (cl == VermaContext::LClass::Raise) {
          dead = true;
          break;
        } else {
          break;
        }
      }
      if (dead) continue;

      // leftmost out-of-order adjacent pair
      int viol = -1;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (ctx.order_[w[i]] > ctx.order_[w[i + 1]]) {
          viol = static_cast<int>(i);
          break;
        }
      }
      if (viol < 0) {
        std::vector<int> y, Y;
        for (int h : w) {
          if (ctx.cls_[h] == VermaContext::LClass::YMinus)
            y.push_back(h);
          else
            Y.push_back(h);
        }
        auto key = std::pair{std::move(y), std::move(Y)};
        auto it = out.find(key);
        if (it == out.end())
          out.emplace(std::move(key), c);
        else {
          it->second += c;
          if (it->second == 0) out.erase(it);
        }
        continue;
      }

      int a = w[viol], b = w[viol + 1];
      std::vector<int> swapped = w;
      std::swap(swapped[viol], swapped[viol + 1]);
      work.emplace_back(std::move(swapped), c);
      const GenCombo& br = ctx.bracket_combo(a, b);
      auto substituted = [&](int handle) {
        std::vector<int> nw;
        nw.reserve(w.size() - 1);
        nw.insert(nw.end(), w.begin(), w.begin() + viol);
        nw.push_back(handle);
        nw.insert(nw.end(), w.begin() + viol + 2, w.end());
        return nw;
      };
      for (const auto& [g, coef] : br.terms)
        work.emplace_back(substituted(alg.handle(g)), c * coef);
      for (std::size_t i = 0; i < br.cartan.size(); ++i) {
        if (br.cartan[i] == 0) continue;
        GeneratorId h{GenKind::Cartan, static_cast<int>(i + 1), static_cast<int>(i + 1)};
        work.emplace_back(substituted(alg.handle(h)), c * br.cartan[i]);
      }
    }
  }
};

VermaVector VermaContext::finish(
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> raw) const {
  VermaVector v(lambda_);
  for (const auto& [key, c] : raw) {
    const auto& [yh, Yh] = key;
    PBWTerm t;
    t.y.reserve(yh.size());
    for (int h : yh) t.y.push_back(rank_of_[h]);
    // reduce the L-part against the kernel of M(lambda) -> L(lambda)
    Weight nu = lambda_;
    for (int h : Yh) nu = nu + alg_->root_of(h);
    const LWeightSpace& lws = l_weight_space(nu);
    std::vector<int> Yranks;
    Yranks.reserve(Yh.size());
    for (int h : Yh) Yranks.push_back(rank_of_[h]);
    auto it = lws.mono_index.find(Yranks);
    if (it == lws.mono_index.end())
      throw std::logic_error("straightened L-monomial missing from its weight space");
    const auto& coords = lws.reduce[it->second];
    for (int bpos = 0; bpos < lws.dim(); ++bpos) {
      if (coords[bpos] == 0) continue;
      PBWTerm tt = t;
      tt.Y = lws.monomials[lws.basis[bpos]];
      v.add(tt, c * coords[bpos]);
    }
  }
  return v;
}

VermaVector VermaContext::highest_vector() const {
  VermaVector v(lambda_);
  v.add(PBWTerm{}, rat(1));
  return v;
}

VermaVector VermaContext::act(int handle, const VermaVector& v) const {
  StraightenEngine eng{*this, *alg_, {}};
  for (const auto& [t, c] : v.terms()) {
    std::vector<int> word;
    word.reserve(1 + t.y.size() + t.Y.size());
    word.push_back(handle);
    for (int r : t.y) word.push_back(gminus_[r]);
    for (int r : t.Y) word.push_back(gzero_low_[r]);
    eng.run(std::move(word), c);
  }
  return finish(std::move(eng.out));
}

VermaVector VermaContext::act(const GenCombo& c, const VermaVector& v) const {
  VermaVector r(lambda_);
  for (const auto& [g, coef] : c.terms) r = r + act(g, v).scaled(coef);
  for (std::size_t i = 0; i < c.cartan.size(); ++i) {
    if (c.cartan[i] == 0) continue;
    GeneratorId h{GenKind::Cartan, static_cast<int>(i + 1), static_cast<int>(i + 1)};
    r = r + act(h, v).scaled(c.cartan[i]);
  }
  return r;
}

VermaVector VermaContext::act_word(const std::vector<int>& handles, const VermaVector& v) const {
  VermaVector r = v;
  for (auto it = handles.rbegin(); it != handles.rend(); ++it) r = act(*it, r);
  return r;
}

const LWeightSpace& VermaContext::l_weight_space(const Weight& nu) const {
  {
    std::scoped_lock lock(mu_);
    auto it = lspaces_.find(nu.doubled());
    if (it != lspaces_.end()) return *it->second;
  }
  auto space = std::make_unique<LWeightSpace>();
  space->nu = nu;
  enumerate_Y_monomials(nu - lambda_, space->monomials);
  for (std::size_t i = 0; i < space->monomials.size(); ++i)
    space->mono_index[space->monomials[i]] = static_cast<int>(i);
  const int nm = static_cast<int>(space->monomials.size());

  // spanning set of the kernel: u . Y_alpha^{p+1} v_lambda
  std::vector<std::vector<Rat>> rows;
  for (const auto& alpha : par_->uncrossed_simple_roots()) {
    Rat p = coroot_pairing(lambda_, alpha);
    if (!is_integer(p) || p < 0)
      throw std::logic_error("lambda is not p-dominant p-integral");
    long reps = to_long(p) + 1;
    auto gen = alg_->generator_for_root(-alpha);
    if (!gen) throw std::logic_error("missing lowering generator for simple root");
    int head = alg_->handle(*gen);
    Weight head_weight = lambda_;
    for (long r = 0; r < reps; ++r) head_weight = head_weight - alpha;
    Weight u_target = nu - head_weight;  // sum of roots of u
    std::vector<std::vector<int>> umonos;
    enumerate_Y_monomials(u_target, umonos);
    for (const auto& u : umonos) {
      StraightenEngine eng{*this, *alg_, {}};
      std::vector<int> word;
      for (int r : u) word.push_back(gzero_low_[r]);
      for (long t = 0; t < reps; ++t) word.push_back(head);
      eng.run(std::move(word), rat(1));
      std::vector<Rat> row(static_cast<std::size_t>(nm), Rat(0));
      bool nonzero = false;
      for (const auto& [key, c] : eng.out) {
        if (!key.first.empty())
          throw std::logic_error("g_0 straightening escaped into g_-");
        std::vector<int> ranks;
        for (int h : key.second) ranks.push_back(rank_of_[h]);
        auto it = space->mono_index.find(ranks);
        if (it == space->mono_index.end())
          throw std::logic_error("kernel row leaves the weight space");
        row[it->second] = c;
        if (c != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  // row echelon; pivot columns span K, the rest are the quotient basis
  std::vector<int> pivot_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(nm), false);
  std::size_t rrow = 0;
  for (int col = 0; col < nm && rrow < rows.size(); ++col) {
    std::size_t sel = rrow;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rrow], rows[sel]);
    Rat inv = 1 / rows[rrow][col];
    for (int c2 = col; c2 < nm; ++c2) rows[rrow][c2] *= inv;
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == rrow || rows[r2][col] == 0) continue;
      Rat f = rows[r2][col];
      for (int c2 = col; c2 < nm; ++c2) rows[r2][c2] -= f * rows[rrow][c2];
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++rrow;
  }
  rows.resize(rrow);
  for (int i = 0; i < nm; ++i)
    if (!is_pivot[i]) space->basis.push_back(i);
  std::vector<int> basis_pos(static_cast<std::size_t>(nm), -1);
  for (int b = 0; b < space->dim(); ++b) basis_pos[space->basis[b]] = b;

  space->reduce.assign(static_cast<std::size_t>(nm), std::vector<Rat>());
  for (int i = 0; i < nm; ++i) {
    std::vector<Rat> coords(static_cast<std::size_t>(space->dim()), Rat(0));
    if (!is_pivot[i]) {
      coords[basis_pos[i]] = 1;
    } else {
      // pivot monomial = -(sum of non-pivot entries of its row)
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (pivot_of_row[r] != i) continue;
        for (int c2 = 0; c2 < nm; ++c2)
          if (!is_pivot[c2] && rows[r][c2] != 0) coords[basis_pos[c2]] -= rows[r][c2];
        break;
      }
    }
    space->reduce[i] = std::move(coords);
  }

  std::scoped_lock lock(mu_);
  auto [it, inserted] = lspaces_.emplace(nu.doubled(), std::move(space));
  return *it->second;
}

void VermaContext::enumerate_Y_monomials(const Weight& target,
                                         std::vector<std::vector<int>>& out) const {
  // multisets of g_0 lowering letters whose roots sum to target, canonical
  // order; pruned by the height of the remainder in simple-root coordinates
  auto coords = alg_->simple_root_coords(-target);
  Rat height = 0;
  for (const auto& c : coords) {
    if (!is_integer(c) || c < 0) return;
    height += c;
  }
  std::vector<int> cur;
  std::function<void(int, Weight, long)> rec = [&](int rank, Weight rem, long hleft) {
    if (rem.is_zero()) {
      out.push_back(cur);
      return;
    }
    if (hleft <= 0) return;
    for (int r = rank; r < num_gzero_lower(); ++r) {
      const Weight& root = alg_->root_of(gzero_low_[r]);
      Weight next = rem - root;
      auto c = alg_->simple_root_coords(-next);
      bool ok = true;
      long h2 = 0;
      for (const auto& x : c) {
        if (!is_integer(x) || x < 0) {
          ok = false;
          break;
        }
        h2 += to_long(x);
      }
      if (!ok) continue;
      cur.push_back(r);
      rec(r, next, h2);
      cur.pop_back();
    }
  };
  rec(0, target, to_long(height));
}

void VermaContext::enumerate_y_monomials(const Weight& target,
                                         std::vector<std::vector<int>>& out) const {
  const int k = par_->k();
  Rat budget = target.eval_E(static_cast<std::size_t>(k));
  if (!is_integer(budget) || budget > 0) return;
  std::vector<int> cur;
  std::function<void(int, long)> rec = [&](int rank, long left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int r = rank; r < num_gminus(); ++r) {
      int deg = alg_->grading_degree(gminus_[r], k);
      if (-deg > left) continue;
      cur.push_back(r);
      rec(r, left + deg);
      cur.pop_back();
    }
  };
  rec(0, -to_long(budget));
}

std::vector<VermaVector> VermaContext::weight_space_basis(const Weight& mu) const {
  std::vector<VermaVector> out;
  Weight diff = mu - lambda_;
  {
    auto coords = alg_->simple_root_coords(-diff);
    for (const auto& c : coords)
      if (!is_integer(c) || c < 0) return out;
  }
  std::vector<std::vector<int>> ymonos;
  enumerate_y_monomials(diff, ymonos);
  for (const auto& ym : ymonos) {
    Weight rem = diff;
    for (int r : ym) rem = rem - alg_->root_of(gminus_[r]);
    // remainder must be a sum of g_0 roots: reachable inside L(lambda)
    const LWeightSpace& lws = l_weight_space(lambda_ + rem);
    for (int b = 0; b < lws.dim(); ++b) {
      VermaVector v(lambda_);
      PBWTerm t;
      t.y = ym;
      t.Y = lws.monomials[lws.basis[b]];
      v.add(t, rat(1));
      out.push_back(std::move(v));
    }
  }
  return out;
}

ExtremalSolution VermaContext::extremal_vectors(const Weight& mu) const {
  ExtremalSolution sol;
  sol.lambda = lambda_;
  sol.mu = mu;
  std::vector<VermaVector> basis = weight_space_basis(mu);
  const int dim = static_cast<int>(basis.size());
  if (dim == 0) return sol;

  // raising generators for the simple roots generate n^+
  std::vector<int> simple_raises;
  for (const auto& alpha : alg_->simple_roots()) {
    auto g = alg_->generator_for_root(alpha);
    if (!g) throw std::logic_error("missing raising generator for simple root");
    simple_raises.push_back(alg_->handle(*g));
  }

  std::vector<std::vector<Rat>> rows;
  for (int s : simple_raises) {
    // index the target weight space
    Weight target = mu + alg_->root_of(s);
    std::vector<VermaVector> tbasis = weight_space_basis(target);
    std::map<PBWTerm, int> tindex;
    for (std::size_t i = 0; i < tbasis.size(); ++i)
      tindex[tbasis[i].terms().begin()->first] = static_cast<int>(i);
    std::vector<std::vector<Rat>> block(tbasis.size(),
                                        std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0)));
    for (int j = 0; j < dim; ++j) {
      VermaVector img = act(s, basis[j]);
      for (const auto& [t, c] : img.terms()) {
        auto it = tindex.find(t);
        if (it == tindex.end())
          throw std::logic_error("action left the expected weight space");
        block[it->second][j] = c;
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }

  // nullspace of the stacked system, reduced so each solution has leading 1
  std::vector<int> pivot_col;
  std::size_t rrow = 0;
  for (int col = 0; col < dim && rrow < rows.size(); ++col) {
    std::size_t sel = rrow;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rrow], rows[sel]);
    Rat inv = 1 / rows[rrow][col];
    for (int c2 = 0; c2 < dim; ++c2) rows[rrow][c2] *= inv;
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == rrow || rows[r2][col] == 0) continue;
      Rat f = rows[r2][col];
      for (int c2 = 0; c2 < dim; ++c2) rows[r2][c2] -= f * rows[rrow][c2];
    }
    pivot_col.push_back(col);
    ++rrow;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (int c : pivot_col) is_pivot[c] = true;

  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(static_cast<std::size_t>(dim), Rat(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -rows[r][free];
    // normalize: first nonzero coordinate = 1
    int lead = 0;
    while (x[lead] == 0) ++lead;
    Rat inv = 1 / x[lead];
    VermaVector v(lambda_);
    for (int j = 0; j < dim; ++j)
      if (x[j] != 0) v.add(basis[j].terms().begin()->first, x[j] * inv);
    sol.basis.push_back(std::move(v));
  }

  // post-check: annihilated by every positive root space, not only the
  // simple ones used in solving
  for (const auto& v : sol.basis) {
    for (const auto& g : alg_->generators()) {
      if (g.kind != GenKind::Raise) continue;
      if (!act(g, v).is_zero())
        throw std::logic_error("extremal solution fails the full annihilation check");
    }
  }
  return sol;
}

std::string VermaContext::to_text(const VermaVector& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : v.terms()) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) s += "- ";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int r : t.y) {
      if (!mono.empty()) mono += "*";
      const GeneratorId& g = gminus_gen(r);
      mono += "y[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    }
    for (int r : t.Y) {
      if (!mono.empty()) mono += "*";
      const GeneratorId& g = gzero_lower_gen(r);
      mono += "Y[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    }
    if (a != 1) s += rat_str(a) + (mono.empty() ? "" : "*");
    s += mono;
    s += mono.empty() ? "v" : " v";
  }
  return s;
}

VermaVector hom_apply(const VermaContext& ctx, const VermaVector& extremal,
                      const std::vector<GeneratorId>& u) {
  std::vector<int> handles;
  handles.reserve(u.size());
  for (const auto& g : u) handles.push_back(ctx.algebra().handle(g));
  return ctx.act_word(handles, extremal);
}

VermaVector compose(const VermaContext& ctx, const VermaVector& outer,
                    const VermaVector& inner) {
  VermaVector r(ctx.lambda());
  for (const auto& [t, c] : inner.terms()) {
    std::vector<int> word;
    for (int rk : t.y) word.push_back(ctx.gminus_handle(rk));
    for (int rk : t.Y) word.push_back(ctx.gzero_lower_handle(rk));
    r = r + ctx.act_word(word, outer).scaled(c);
  }
  return r;
}

bool compose_is_zero(const VermaContext& ctx, const VermaVector& outer,
                     const VermaVector& inner) {
  return compose(ctx, outer, inner).is_zero();
}

}  // namespace gvm
