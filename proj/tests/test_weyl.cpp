#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gvm/weyl.hpp"

using namespace gvm;

namespace {
Weight w(std::vector<long long> doubled) { return Weight::from_doubled(std::move(doubled)); }

SignedPermutation random_element(const Algebra& alg, std::mt19937& rng) {
  const int m = alg.rank();
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<int> s(m, 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < m; ++i) s[i] = coin(rng) ? 1 : -1;
  if (alg.spec().series == Series::D) {
    int minus = 0;
    for (int x : s)
      if (x < 0) ++minus;
    if (minus % 2) s[0] = -s[0];
  }
  return SignedPermutation(p, s);
}
}  // namespace

TEST_CASE("apply: identity, sign flips, swaps") {
  Algebra d4({Series::D, 4});
  Weight mu = w({1, 5, 3, 1});
  CHECK(SignedPermutation::identity(4).apply(mu) == mu);

  SignedPermutation flip14({0, 1, 2, 3}, {-1, 1, 1, -1});
  CHECK(flip14.apply(mu) == w({-1, 5, 3, -1}));

  SignedPermutation swap12({1, 0, 2, 3}, {1, 1, 1, 1});
  CHECK(swap12.apply(w({6, 4, 2, 0})) == w({4, 6, 2, 0}));
}

TEST_CASE("reflect") {
  Algebra d4({Series::D, 4});
  CHECK(reflect(d4, w({2, 0, 0, 2}), w({-1, 5, 3, -1})) == w({1, 5, 3, 1}));
  Weight mu = w({3, 1, 5, -7});
  for (const auto& g : d4.positive_roots()) CHECK(reflect(d4, g, reflect(d4, g, mu)) == mu);
  CHECK(reflect(d4, w({2, -2, 0, 0}), w({6, 4, 2, 0})) == w({4, 6, 2, 0}));
  CHECK_THROWS(reflect(d4, w({2, 2, 2, 0}), mu));  // not a root
}

TEST_CASE("reflections preserve the inner product") {
  Algebra b3({Series::B, 3});
  Weight a = w({3, -1, 5}), b = w({0, 2, 4});
  for (const auto& g : b3.positive_roots())
    CHECK(reflect(b3, g, a).inner(reflect(b3, g, b)) == a.inner(b));
}

TEST_CASE("affine action") {
  Algebra d4({Series::D, 4});
  Weight lam = w({-5, 1, 1, 1});
  CHECK(affine_apply(d4, SignedPermutation::identity(4), lam) == lam);
  CHECK(affine_reflect(d4, w({2, 0, 0, 2}), lam) == w({-7, 1, 1, -1}));

  // B_{n+1}: s_{eps_1} . [-n | 1/2..] = [-n-1 | 1/2..] (n = 2)
  Algebra b3({Series::B, 3});
  Weight lam_b = w({-4, 1, 1});
  Weight g = w({2, 0, 0});
  CHECK(affine_reflect(b3, g, lam_b) == w({-6, 1, 1}));
}

TEST_CASE("length") {
  Algebra d4({Series::D, 4});
  CHECK(length(d4, SignedPermutation::identity(4)) == 0);
  for (const auto& a : d4.simple_roots()) CHECK(length(d4, reflection_as_element(d4, a)) == 1);
  // longest element of D_4: all signs flipped (even count), identity permutation
  SignedPermutation w0({0, 1, 2, 3}, {-1, -1, -1, -1});
  CHECK(length(d4, w0) == 12);
}

TEST_CASE("group laws and action compatibility") {
  std::mt19937 rng(7351);
  for (auto spec : {AlgebraSpec{Series::D, 4}, AlgebraSpec{Series::B, 3}}) {
    Algebra alg(spec);
    for (int t = 0; t < 40; ++t) {
      auto u = random_element(alg, rng);
      auto v = random_element(alg, rng);
      Weight mu = w(std::vector<long long>(alg.rank()));
      for (std::size_t i = 0; i < mu.rank(); ++i)
        mu.dbl(i) = std::uniform_int_distribution<long long>(-9, 9)(rng);
      CHECK(u.compose(v).apply(mu) == u.apply(v.apply(mu)));
      CHECK(u.inverse().apply(u.apply(mu)) == mu);
      // l(s_gamma w) - l(w) is odd
      const auto& roots = alg.positive_roots();
      const Weight& g = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
      auto sg = reflection_as_element(alg, g);
      CHECK(((length(alg, sg.compose(u)) - length(alg, u)) % 2 + 2) % 2 == 1);
    }
  }
}

TEST_CASE("reflection_as_element matches reflect") {
  for (auto spec : {AlgebraSpec{Series::D, 4}, AlgebraSpec{Series::B, 3}}) {
    Algebra alg(spec);
    Weight mu = w(std::vector<long long>(alg.rank()));
    for (std::size_t i = 0; i < mu.rank(); ++i) mu.dbl(i) = 2 * static_cast<long long>(i) + 1;
    for (const auto& g : alg.positive_roots())
      CHECK(reflection_as_element(alg, g).apply(mu) == reflect(alg, g, mu));
  }
}

TEST_CASE("orbits") {
  Algebra d4({Series::D, 4});
  CHECK(orbit(d4, w({2, 0, 0, 0})).size() == 8);
  CHECK(orbit(d4, d4.delta()).size() == 192);  // |W(D_4)| = 2^3 * 4!
  CHECK(orbit(d4, Weight(4)).size() == 1);
}

TEST_CASE("group enumeration") {
  Algebra d4({Series::D, 4});
  auto all = enumerate_group(d4);
  CHECK(all.size() == 192);
  std::set<SignedPermutation> uniq(all.begin(), all.end());
  CHECK(uniq.size() == all.size());

  Algebra b2({Series::B, 2});
  CHECK(enumerate_group(b2).size() == 8);
}

TEST_CASE("reflection_connecting") {
  Algebra d4({Series::D, 4});
  auto g = reflection_connecting(d4, w({1, 5, 3, 1}), w({-1, 5, 3, -1}));
  REQUIRE(g.has_value());
  CHECK(*g == w({2, 0, 0, 2}));

  CHECK(!reflection_connecting(d4, w({1, 5, 3, 1}), w({1, 5, 3, 1})).has_value());

  auto t = reflection_connecting(d4, w({6, 4, 2, 0}), w({4, 6, 2, 0}));
  REQUIRE(t.has_value());
  CHECK(*t == w({2, -2, 0, 0}));
}

TEST_CASE("element_taking reconstructs group elements") {
  std::mt19937 rng(99);
  for (auto spec : {AlgebraSpec{Series::D, 4}, AlgebraSpec{Series::B, 3}}) {
    Algebra alg(spec);
    Weight delta = alg.delta();
    for (int t = 0; t < 50; ++t) {
      auto u = random_element(alg, rng);
      auto back = element_taking(alg, delta, u.apply(delta));
      REQUIRE(back.has_value());
      CHECK(back->apply(delta) == u.apply(delta));
      if (alg.spec().series == Series::D) CHECK(back->minus_count() % 2 == 0);
    }
  }
}

TEST_CASE("lemma W2lieh, exhaustive for small ranks") {
  for (auto spec : {AlgebraSpec{Series::D, 3}, AlgebraSpec{Series::D, 4}, AlgebraSpec{Series::B, 2},
                    AlgebraSpec{Series::B, 3}}) {
    Algebra alg(spec);
    const Weight lam = alg.delta();  // strictly dominant
    for (const auto& u : enumerate_group(alg)) {
      int lu = length(alg, u);
      for (const auto& g : alg.positive_roots()) {
        auto sg = reflection_as_element(alg, g);
        int lsu = length(alg, sg.compose(u));
        bool longer = lsu > lu;
        bool positive_pairing = coroot_pairing(u.apply(lam), g) > 0;
        CHECK(longer == positive_pairing);
      }
    }
  }
}

TEST_CASE("full-group enumeration guard") {
  Algebra d8({Series::D, 8});
  CHECK_THROWS_AS(enumerate_group(d8), std::length_error);
}
