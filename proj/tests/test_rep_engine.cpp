#include <doctest.h>

#include <random>

#include "freecoset/double_coset.hpp"
#include "freecoset/errors.hpp"
#include "freecoset/rep_engine.hpp"
#include "oracles.hpp"

using namespace freecoset;

namespace {

std::vector<std::vector<Letter>> first_images(const Automorphism& g, GenIndex m) {
  std::vector<std::vector<Letter>> out;
  for (GenIndex i = 1; i <= m; ++i) out.push_back(oracle::letters_of(g.image(i)));
  return out;
}

}  // namespace

TEST_CASE("eval_word") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  std::vector<Element> p{1, 2};
  CHECK(eval_word(c3, Word{}, p) == c3.unit());
  CHECK(eval_word(c3, Word{gen(1), gen(2)}, p) == 0);
  FiniteGroup s3 = FiniteGroup::symmetric3();
  for (Element a = 0; a < 6; ++a) {
    std::vector<Element> q{a};
    CHECK(eval_word(s3, Word{gen(1), gen_inv(1)}, q) == s3.unit());
  }
  CHECK_THROWS_AS(eval_word(c3, Word{gen(3)}, p), DomainError);
}

TEST_CASE("action_map") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  auto id = action_map(c2, Automorphism::identity(), 3);
  for (std::uint64_t i = 0; i < id.size(); ++i) CHECK(id[i] == i);

  auto shear = action_map(c2, nielsen_right_mult(1, 2), 2);
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b) CHECK(shear[a * 2 + b] == ((a + b) % 2) * 2 + b);

  CHECK_THROWS_AS(action_map(c2, nielsen_right_mult(1, 3), 2), DomainError);
}

TEST_CASE("property: action maps compose contravariantly and invert") {
  // g(k)_i = g(x_i)(k), so the map of compose(g, h) applies g's map first and
  // then h's.
  std::mt19937_64 rng(71);
  for (const FiniteGroup& k : {FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
    for (int i = 0; i < 15; ++i) {
      Automorphism g = random_automorphism(0, 3, 10, rng());
      Automorphism h = random_automorphism(0, 3, 10, rng());
      auto mg = action_map(k, g, 3), mh = action_map(k, h, 3), mgh = action_map(k, compose(g, h), 3);
      auto minv = action_map(k, invert(g), 3);
      const auto points = oracle::all_points(k.order(), 3);
      for (std::uint64_t p = 0; p < mg.size(); ++p) {
        CHECK(mgh[p] == mh[mg[p]]);
        CHECK(minv[mg[p]] == p);
        std::vector<Element> target;
        for (GenIndex c = 1; c <= 3; ++c)
          target.push_back(oracle::naive_eval(k, oracle::letters_of(g.image(c)), points[p]));
        CHECK(mg[p] == oracle::lex_index(k.order(), target));
      }
    }
  }
}

TEST_CASE("projection_P") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  CHECK(projection_P(c2, 2, 2) == RationalMatrix::identity(4));
  RationalMatrix half = projection_P(c2, 0, 1);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(half(r, c) == Rational(1, 2));
  RationalMatrix P = projection_P(c2, 1, 3);
  CHECK(P * P == P);
  CHECK(P.transpose() == P);
  CHECK(P(0, 3) == Rational(1, 4));
  CHECK(P(0, 4).is_zero());
  CHECK_THROWS_AS(projection_P(c2, 3, 2), DomainError);
}

TEST_CASE("markov_matrix examples") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  CHECK(markov_matrix(c2, Automorphism::identity(), 2) == RationalMatrix::identity(4));

  Automorphism g = nielsen_right_mult(1, 2);
  RationalMatrix M = markov_matrix(c2, g, 1);
  CHECK(M == oracle::brute_markov(c2, first_images(g, 1), 1, 2));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(M(r, c) == Rational(1, 2));

  for (GenIndex j = 0; j < 3; ++j) CHECK(markov_matrix(FiniteGroup::symmetric3(), theta(1, j), 1) == RationalMatrix::identity(6));
  CHECK(markov_matrix(c2, nielsen_invert(1), 0) == RationalMatrix::identity(1));
}

TEST_CASE("property: markov_matrix agrees with brute force, is doubly stochastic and N-stable") {
  std::mt19937_64 rng(72);
  const std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3(),
                                        FiniteGroup::quaternion8()};
  for (int i = 0; i < 24; ++i) {
    const FiniteGroup& k = groups[static_cast<std::size_t>(i) % groups.size()];
    const GenIndex m = 1 + static_cast<GenIndex>(i % 2);
    Automorphism g = random_automorphism(0, m + 2, 10, rng());
    const GenIndex N = std::max(g.support_bound(), m);
    RationalMatrix M = markov_matrix(k, g, m);
    CHECK(M == oracle::brute_markov(k, first_images(g, m), m, N));
    CHECK(M.is_doubly_stochastic());
    CHECK(markov_matrix_at(k, g, m, N + 1) == M);
    // Two-sided invariance under H.
    Automorphism a = random_automorphism(m, m + 2, 8, rng()), b = random_automorphism(m, m + 2, 8, rng());
    CHECK(markov_matrix(k, compose(a, compose(g, b)), m) == M);
  }
  CHECK_THROWS_AS(markov_matrix_at(groups[0], nielsen_right_mult(1, 3), 1, 2), DomainError);
}

TEST_CASE("property: homomorphism on coset products") {
  std::mt19937_64 rng(73);
  for (const FiniteGroup& k : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
    for (int i = 0; i < 6; ++i) {
      Automorphism g = random_automorphism(0, 3, 10, rng()), h = random_automorphism(0, 3, 10, rng());
      RationalMatrix lhs = markov_matrix(k, coset_product(1, g, h).rep, 1);
      CHECK(lhs == markov_matrix(k, g, 1) * markov_matrix(k, h, 1));
    }
  }
}

TEST_CASE("compress_to_invariants") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  Subgroup whole = Subgroup::whole(s3);
  Subgroup trivial = Subgroup::trivial(s3);

  Automorphism g = compose(nielsen_right_mult(1, 2), nielsen_right_mult(2, 1));
  RationalMatrix M = markov_matrix(s3, g, 1);
  CHECK(compress_to_invariants(s3, trivial, 1, M) == M);
  CHECK(conjugation_orbits(s3, whole, 1).orbits.size() == 3);
  CHECK(compress_to_invariants(s3, whole, 1, RationalMatrix::identity(6)) == RationalMatrix::identity(3));
  // Burnside: (36 + 3 * 2^2 + 2 * 3^2) / 6.
  CHECK(conjugation_orbits(s3, whole, 2).orbits.size() == 11);

  RationalMatrix C = compress_to_invariants(s3, whole, 1, M);
  CHECK(C.is_row_stochastic());

  // A matrix that ignores conjugation symmetry is rejected.
  RationalMatrix bad(6, 6);
  for (std::size_t r = 0; r < 6; ++r) bad(r, 1) = 1;
  CHECK_THROWS_AS(compress_to_invariants(s3, whole, 1, bad), DomainError);
  CHECK_THROWS_AS(compress_to_invariants(s3, whole, 2, M), DomainError);
}

TEST_CASE("cylinder inner products") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  auto one = CylinderFunction::constant(c2, 2, Rational(1));
  CHECK(cylinder_inner_product(c2, 3, one, one) == Rational(1));
  auto d0 = CylinderFunction::delta(c2, std::vector<Element>{0});
  CHECK(cylinder_inner_product(c2, 1, d0, d0) == Rational(1, 2));

  FiniteGroup c3 = FiniteGroup::cyclic(3);
  std::mt19937_64 rng(74);
  for (int i = 0; i < 10; ++i) {
    CylinderFunction f{2, std::vector<Rational>(9)}, g{1, std::vector<Rational>(3)};
    for (auto& v : f.values) v = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    for (auto& v : g.values) v = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    CHECK(cylinder_inner_product(c3, 2, f, g) == cylinder_inner_product(c3, 4, f, g));
    // P is self-adjoint.
    CHECK(cylinder_inner_product(c3, 3, project(c3, 1, f), g) == cylinder_inner_product(c3, 3, f, project(c3, 1, g)));
    CHECK(project(c3, 1, project(c3, 1, f)).values == project(c3, 1, f).values);
  }
  CHECK_THROWS_AS(cylinder_inner_product(c2, 1, one, one), DomainError);
}

TEST_CASE("weak_limit_check") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  for (GenIndex j = 0; j < 4; ++j) CHECK(weak_limit_check(c2, 1, 0, j));

  // Exhaustive oracle for m = 1, one cylinder coordinate, j = 1 on K^3:
  // f = f' = delta at (0, 0); T(theta_1) f (k) = f(k1, k3).
  Rational lhs, rhs_self;
  for (const auto& k : oracle::all_points(2, 3)) {
    if (k[0] == 0 && k[2] == 0 && k[1] == 0) lhs += Rational(1, 8);
    if (k[0] == 0 && k[1] == 0) rhs_self += Rational(1, 8);
  }
  CHECK(lhs == Rational(1, 8));
  CHECK(rhs_self == Rational(1, 4));

  auto f = CylinderFunction::delta(c2, std::vector<Element>{0, 0});
  auto moved = apply_T(c2, theta(1, 1), f, 3);
  CHECK(cylinder_inner_product(c2, 3, moved, f) == lhs);
  CHECK(cylinder_inner_product(c2, 3, project(c2, 1, f), project(c2, 1, f)) == Rational(1, 8));
  CHECK(cylinder_inner_product(c2, 2, f, f) == rhs_self);

  CHECK(weak_limit_check(c2, 1, 1, 1));
  CHECK_FALSE(weak_limit_check(c2, 1, 1, 0));
  CHECK_FALSE(weak_limit_check(c2, 1, 2, 1));
  CHECK(weak_limit_check(c2, 1, 2, 2));
}

TEST_CASE("point budget") {
  EngineOptions tight;
  tight.max_points = 100;
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  CHECK_NOTHROW(markov_matrix_at(c3, Automorphism{}, 1, 4, tight));
  CHECK_THROWS_AS(markov_matrix_at(c3, Automorphism{}, 1, 5, tight), SizeError);
  CHECK_THROWS_AS(action_map(c3, Automorphism{}, 5, tight), SizeError);
  CHECK_THROWS_AS(projection_P(c3, 1, 3, tight), SizeError);
}
