#include <doctest.h>

#include <random>

#include "freecoset/automorphism.hpp"
#include "freecoset/double_coset.hpp"
#include "freecoset/errors.hpp"
#include "oracles.hpp"

using namespace freecoset;

namespace {

Endomorphism endo(ImageMap m) { return Endomorphism(std::move(m)); }

}  // namespace

TEST_CASE("identity entries are normalized away") {
  Endomorphism e = endo({{1, Word{gen(1)}}, {2, Word{gen(2), gen(1)}}});
  CHECK(e.images().size() == 1);
  CHECK(e.image(1) == Word{gen(1)});
  CHECK(e == endo({{2, Word{gen(2), gen(1)}}}));
}

TEST_CASE("compose applies the right factor first") {
  Endomorphism e = endo({{3, Word{gen(3), gen(1)}}});
  CHECK(compose(Endomorphism::identity(), e) == e);
  CHECK(compose(e, Endomorphism::identity()) == e);

  Endomorphism a = endo({{1, Word{gen(1), gen(2)}}});
  Endomorphism b = endo({{2, Word{gen(2), gen(1)}}});
  Endomorphism ab = compose(a, b);
  // Oracle: substitute a into b(x_i) letter by letter.
  for (GenIndex i = 1; i <= 3; ++i)
    CHECK(oracle::letters_of(ab.image(i)) ==
          oracle::naive_apply(a.images(), oracle::letters_of(b.image(i))));
  CHECK(ab.image(1) == Word{gen(1), gen(2)});
  CHECK(ab.image(2) == Word{gen(2), gen(1), gen(2)});
}

TEST_CASE("compose reproduces the forced-apart product pattern") {
  // g = (alpha, beta), h = (gamma, delta) on blocks x = 1, y = 2; theta_1 swaps 2 <-> 3.
  Automorphism g = nielsen_right_mult(1, 2);
  Automorphism h = compose(nielsen_right_mult(2, 1), nielsen_invert(1));
  Automorphism gth = compose(g, compose(theta(1, 1), h));
  // x -> gamma(alpha(x,y), z), y -> delta(alpha(x,y), z), z -> beta(x,y)
  ImageMap outer{{1, g.image(1)}, {2, Word::generator(3)}};
  CHECK(gth.image(1) == substitute(outer, h.image(1)));
  CHECK(gth.image(2) == substitute(outer, h.image(2)));
  CHECK(gth.image(3) == g.image(2));
}

TEST_CASE("verify_inverse_pair") {
  CHECK(verify_inverse_pair(Endomorphism::identity(), Endomorphism::identity()));
  CHECK(verify_inverse_pair(endo({{1, Word{gen(1), gen(2)}}}), endo({{1, Word{gen(1), gen_inv(2)}}})));
  // x1 -> x1x2 composed with x1 -> x2x1 gives x1 -> x2 x1 x2.
  Endomorphism f = endo({{1, Word{gen(1), gen(2)}}});
  Endomorphism g = endo({{1, Word{gen(2), gen(1)}}});
  CHECK(compose(f, g).image(1) == Word{gen(2), gen(1), gen(2)});
  CHECK_FALSE(verify_inverse_pair(f, g));
  CHECK_THROWS_AS(Automorphism::from_pair(f, g), DomainError);
  // Non-surjective endomorphism x1 -> x1^2 has no inverse.
  CHECK_FALSE(verify_inverse_pair(endo({{1, Word{gen(1), gen(1)}}}), Endomorphism::identity()));
}

TEST_CASE("Nielsen generators") {
  Automorphism i1 = nielsen_invert(1);
  CHECK(compose(i1, i1).is_identity());
  Automorphism rm = nielsen_right_mult(1, 2);
  CHECK(rm.inv().image(1) == Word{gen(1), gen_inv(2)});
  CHECK(invert(rm).fwd().image(1) == Word{gen(1), gen_inv(2)});
  CHECK_THROWS_AS(nielsen_right_mult(2, 2), DomainError);
  CHECK_THROWS_AS(nielsen_swap(2, 2), DomainError);
  CHECK_THROWS_AS(nielsen_invert(0), DomainError);
  CHECK(nielsen_swap(2, 3) == theta(1, 1));
  CHECK(nielsen_swap(2, 3).image(2) == Word{gen(3)});
}

TEST_CASE("permutation automorphisms") {
  CHECK(permutation_automorphism({}).is_identity());
  Automorphism p = permutation_automorphism({{2, 3}, {3, 2}});
  CHECK(p.image(2) == Word{gen(3)});
  CHECK(p.image(3) == Word{gen(2)});
  CHECK_THROWS_AS(permutation_automorphism({{1, 2}, {2, 2}}), DomainError);
  CHECK_THROWS_AS(permutation_automorphism({{1, 2}}), DomainError);

  // Functoriality: x_i -> x_{pi(i)} composes like pi o sigma.
  Permutation pi{{1, 2}, {2, 3}, {3, 1}};
  Permutation sigma{{1, 4}, {4, 1}};
  Permutation composed;
  for (GenIndex i = 1; i <= 4; ++i) {
    GenIndex s = sigma.contains(i) ? sigma.at(i) : i;
    GenIndex ps = pi.contains(s) ? pi.at(s) : s;
    if (ps != i) composed[i] = ps;
  }
  CHECK(compose(permutation_automorphism(pi), permutation_automorphism(sigma)) ==
        permutation_automorphism(composed));
}

TEST_CASE("invert") {
  CHECK(invert(Automorphism::identity()).is_identity());
  Automorphism a = random_automorphism(0, 4, 9, 5);
  CHECK(invert(invert(a)) == a);
  CHECK(compose(a, invert(a)).is_identity());
}

TEST_CASE("support_bound") {
  CHECK(support_bound(Endomorphism::identity()) == 0);
  CHECK(support_bound(endo({{1, Word{gen(1), gen(2)}}})) == 2);
  CHECK(support_bound(endo({{5, Word{gen_inv(5)}}})) == 5);
}

TEST_CASE("is_in_H") {
  CHECK(is_in_H(Automorphism::identity(), 0));
  CHECK(is_in_H(Automorphism::identity(), 7));
  CHECK_FALSE(is_in_H(nielsen_right_mult(1, 2), 1));
  CHECK(is_in_H(nielsen_right_mult(2, 1), 1));
  for (GenIndex m = 0; m <= 3; ++m)
    for (GenIndex j = 0; j <= 3; ++j) CHECK(is_in_H(theta(m, j), m));
}

TEST_CASE("random_automorphism") {
  CHECK(random_automorphism(0, 3, 0, 1).is_identity());
  CHECK(random_automorphism(2, 5, 10, 99) == random_automorphism(2, 5, 10, 99));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Automorphism a = random_automorphism(1, 4, 12, seed);
    CHECK(is_in_H(a, 1));
    CHECK(a.support_bound() <= 4);
    CHECK(verify_inverse_pair(a.fwd(), a.inv()));
  }
  CHECK_THROWS_AS(random_automorphism(3, 3, 1, 0), DomainError);
}

TEST_CASE("property: associativity, supports and inverse certificates") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Automorphism a = random_automorphism(0, 5, 8, rng());
    Automorphism b = random_automorphism(0, 5, 8, rng());
    Automorphism c = random_automorphism(0, 5, 8, rng());
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(compose(a.fwd(), b.fwd()), c.fwd()) == compose(a.fwd(), compose(b.fwd(), c.fwd())));
    Automorphism ab = compose(a, b);
    CHECK(verify_inverse_pair(ab.fwd(), ab.inv()));
    GenIndex bound = std::max(a.support_bound(), b.support_bound());
    for (GenIndex k = bound + 1; k <= bound + 3; ++k) CHECK(ab.image(k) == Word::generator(k));
    CHECK(a.fwd().support_bound() == a.inv().support_bound());
  }
}
