#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gvm/liealg.hpp"

using namespace gvm;

namespace {
Weight w(std::vector<long long> doubled) { return Weight::from_doubled(std::move(doubled)); }
}  // namespace

TEST_CASE("generator matrices and roots, D series") {
  Algebra d3({Series::D, 3});
  // y_41 = E_{4,1} - E_{6,3}, root -(eps_1 + eps_3)
  MatrixElement expect(6);
  expect.at(4, 1) = 1;
  expect.at(6, 3) = -1;
  GeneratorId y41{GenKind::Lower, 4, 1};
  CHECK(d3.matrix(y41) == expect);
  CHECK(d3.root_of(y41) == w({-2, 0, -2}));

  Algebra d4({Series::D, 4});
  CHECK(d4.root_of(GeneratorId{GenKind::Lower, 5, 1}) == w({-2, 0, 0, -2}));
  CHECK(d4.matrix_size() == 8);
}

TEST_CASE("positive root counts") {
  Algebra b1({Series::B, 1});
  CHECK(b1.positive_roots().size() == 1);
  CHECK(b1.positive_roots()[0] == w({2}));

  Algebra d4({Series::D, 4});
  CHECK(d4.positive_roots().size() == 12);  // m(m-1)
  int raises = 0;
  for (const auto& g : d4.generators())
    if (g.kind == GenKind::Raise) ++raises;
  CHECK(raises == 12);

  Algebra b3({Series::B, 3});
  CHECK(b3.positive_roots().size() == 9);  // m^2
}

TEST_CASE("brackets by matrix commutator") {
  Algebra d4({Series::D, 4});
  auto mat = [&](GenKind k, int i, int j) { return d4.matrix(GeneratorId{k, i, j}); };

  // [x_12, y_21] = h_1 - h_2
  MatrixElement h12 = mat(GenKind::Cartan, 1, 1) - mat(GenKind::Cartan, 2, 2);
  CHECK(bracket(mat(GenKind::Raise, 1, 2), mat(GenKind::Lower, 2, 1)) == h12);

  // cartan elements commute
  CHECK(bracket(mat(GenKind::Cartan, 1, 1), mat(GenKind::Cartan, 3, 3)).is_zero());

  // [x_12, y_51] = -y_52 (the Sigma={alpha_1} layout names it X_12, same matrix)
  MatrixElement m = bracket(mat(GenKind::Raise, 1, 2), mat(GenKind::Lower, 5, 1));
  CHECK(m == mat(GenKind::Lower, 5, 2).scaled(rat(-1)));

  // results stay anti-diagonal antisymmetric
  CHECK(m.anti_transpose_symmetric());
}

TEST_CASE("decompose round-trips and is linear") {
  Algebra d4({Series::D, 4});
  auto mat = [&](GenKind k, int i, int j) { return d4.matrix(GeneratorId{k, i, j}); };

  MatrixElement h12 = mat(GenKind::Cartan, 1, 1) - mat(GenKind::Cartan, 2, 2);
  GenCombo c = d4.decompose(h12);
  CHECK(c.terms.empty());
  CHECK(c.cartan[0] == 1);
  CHECK(c.cartan[1] == -1);
  CHECK(c.cartan[2] == 0);

  CHECK(d4.decompose(MatrixElement(8)).is_zero());

  GenCombo b = d4.decompose(bracket(mat(GenKind::Raise, 1, 2), mat(GenKind::Lower, 5, 1)));
  REQUIRE(b.terms.size() == 1);
  CHECK(b.terms[0].first == GeneratorId{GenKind::Lower, 5, 2});
  CHECK(b.terms[0].second == -1);

  for (const auto& g : d4.generators()) CHECK(d4.decompose(d4.matrix(g)).terms.size() <= 1);

  MatrixElement bad(8);
  bad.at(1, 2) = 1;  // missing the mirrored entry
  CHECK_THROWS(d4.decompose(bad));
}

TEST_CASE("coroot pairing") {
  Algebra d4({Series::D, 4});
  // <delta, H_alpha> = 1 for each simple root
  for (const auto& a : d4.simple_roots()) CHECK(coroot_pairing(d4.delta(), a) == 1);

  CHECK(coroot_pairing(w({1, 5, 3, 1}), w({2, 0, 0, 2})) == 1);

  Algebra b3({Series::B, 3});
  for (const auto& a : b3.simple_roots()) CHECK(coroot_pairing(b3.delta(), a) == 1);
  CHECK(coroot_pairing(w({0, 0, 2}), w({0, 0, 2})) == 2);  // short-root normalization

  CHECK_THROWS(coroot_pairing(w({2, 0, 0, 0}), w({0, 0, 0, 0})));
}

TEST_CASE("delta and fundamental weights") {
  Algebra d4({Series::D, 4});
  CHECK(d4.delta() == w({6, 4, 2, 0}));
  CHECK(d4.fundamental_weights()[3] == w({1, 1, 1, -1}));
  CHECK(d4.fundamental_weights()[2] == w({1, 1, 1, 1}));
  CHECK(d4.fundamental_weights()[0] == w({2, 0, 0, 0}));

  Algebra b3({Series::B, 3});
  CHECK(b3.delta() == w({5, 3, 1}));
  CHECK(b3.fundamental_weights()[2] == w({1, 1, 1}));
}

TEST_CASE("grading element and degrees") {
  Algebra d4({Series::D, 4});
  // [1/2 | 5/2, 3/2, 1/2](E) = 1/2 for Sigma={alpha_1}
  CHECK(w({1, 5, 3, 1}).eval_E(1) == rat(1, 2));
  CHECK(Weight(4).eval_E(2) == 0);

  // Sigma={alpha_2}: y_71 sits in g_{-2}
  CHECK(d4.grading_degree(GeneratorId{GenKind::Lower, 7, 1}, 2) == -2);
  CHECK(d4.grading_degree(GeneratorId{GenKind::Cartan, 1, 1}, 2) == 0);
  // Sigma={alpha_1}: y_51 sits in g_{-1}
  CHECK(d4.grading_degree(GeneratorId{GenKind::Lower, 5, 1}, 1) == -1);
}

TEST_CASE("bracket of root vectors lands in the root-sum space") {
  Algebra d4({Series::D, 4});
  for (const auto& a : d4.generators()) {
    if (a.kind == GenKind::Cartan) continue;
    for (const auto& b : d4.generators()) {
      if (b.kind == GenKind::Cartan) continue;
      MatrixElement m = bracket(d4.matrix(a), d4.matrix(b));
      if (m.is_zero()) continue;
      Weight sum = d4.root_of(a) + d4.root_of(b);
      GenCombo c = d4.decompose(m);
      if (sum.is_zero()) {
        CHECK(c.terms.empty());  // cartan part only
      } else {
        REQUIRE(c.terms.size() == 1);
        CHECK(d4.root_of(c.terms[0].first) == sum);
      }
    }
  }
}

TEST_CASE("grading element is diagonal with [E,g] = deg(g) g") {
  for (auto spec : {AlgebraSpec{Series::D, 4}, AlgebraSpec{Series::B, 3}}) {
    Algebra alg(spec);
    const int N = alg.matrix_size();
    for (int k = 1; k <= alg.rank(); ++k) {
      MatrixElement E(N);
      for (int i = 1; i <= k; ++i) {
        E.at(i, i) = 1;
        E.at(N + 1 - i, N + 1 - i) = -1;
      }
      for (const auto& g : alg.generators()) {
        MatrixElement lhs = bracket(E, alg.matrix(g));
        int d = alg.grading_degree(g, k);
        CHECK(lhs == alg.matrix(g).scaled(rat(d)));
      }
    }
  }
}

TEST_CASE("jacobi identity on random generator triples") {
  Algebra d4({Series::D, 4});
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> pick(0, d4.num_generators() - 1);
  for (int t = 0; t < 60; ++t) {
    const auto& a = d4.matrix(pick(rng));
    const auto& b = d4.matrix(pick(rng));
    const auto& c = d4.matrix(pick(rng));
    MatrixElement j =
        bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("weight ordering via simple-root coordinates") {
  Algebra d4({Series::D, 4});
  Weight lam = w({-5, 1, 1, 1});
  Weight mu = w({-7, 1, 1, -1});
  CHECK(d4.weight_leq(mu, lam));   // mu = lam - (eps_1 + eps_4)
  CHECK(!d4.weight_leq(lam, mu));
  CHECK(d4.weight_leq(lam, lam));

  Algebra b3({Series::B, 3});
  CHECK(b3.weight_leq(w({0, 0, 0}), w({2, 0, 0})));   // eps_1 = sum of simples
  CHECK(!b3.weight_leq(w({2, 0, 0}), w({0, 0, 0})));
  CHECK(!b3.weight_leq(w({1, 0, 0}), w({2, 0, 0})));  // non-integral gap
}

TEST_CASE("rank guards") {
  CHECK_THROWS(Algebra({Series::D, 1}));
  CHECK_THROWS(Algebra({Series::B, 0}));
}

TEST_CASE("decompose round-trips every generator and is linear") {
  Algebra b3({Series::B, 3});
  for (const auto& g : b3.generators()) {
    GenCombo c = b3.decompose(b3.matrix(g));
    if (g.kind == GenKind::Cartan) {
      CHECK(c.terms.empty());
      CHECK(c.cartan[g.i - 1] == 1);
    } else {
      REQUIRE(c.terms.size() == 1);
      CHECK(c.terms[0].first == g);
      CHECK(c.terms[0].second == 1);
    }
  }
  // linearity on a random combination
  MatrixElement m = b3.matrix(GeneratorId{GenKind::Raise, 1, 3}).scaled(rat(5, 2)) -
                    b3.matrix(GeneratorId{GenKind::Lower, 4, 2}).scaled(rat(7)) +
                    b3.matrix(GeneratorId{GenKind::Cartan, 2, 2}).scaled(rat(-1, 2));
  GenCombo c = b3.decompose(m);
  CHECK(b3.realize(c) == m);
  CHECK(c.terms.size() == 2);
  CHECK(c.cartan[1] == rat(-1, 2));
}

TEST_CASE("bracket antisymmetry") {
  Algebra d4({Series::D, 4});
  for (int a = 0; a < d4.num_generators(); a += 3)
    for (int b = 0; b < d4.num_generators(); b += 3)
      CHECK(bracket(d4.matrix(a), d4.matrix(b)) ==
            bracket(d4.matrix(b), d4.matrix(a)).scaled(rat(-1)));
}
