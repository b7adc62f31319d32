#include "freecoset/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "freecoset/double_coset.hpp"
#include "freecoset/errors.hpp"

namespace freecoset {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

namespace {

// Runs `body(rng, case_index)` for `cases` iterations; a false return or an
// exception counts as a failure.
CheckResult run_check(std::string name, std::size_t cases, std::mt19937_64& rng,
                      const std::function<bool(std::mt19937_64&, std::size_t)>& body) {
  CheckResult r{std::move(name), cases, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    bool ok = false;
    std::string why = "case " + std::to_string(i);
    try {
      ok = body(rng, i);
    } catch (const std::exception& e) {
      why += ": " + std::string(e.what());
    }
    if (!ok) {
      if (r.failures == 0) r.first_failure = why;
      ++r.failures;
    }
  }
  return r;
}

std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t max_len, GenIndex max_gen) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenIndex> g(1, max_gen);
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = {g(rng), neg(rng) ? Sign::Minus : Sign::Plus};
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].cancels(w[i])) return false;
  return true;
}

Automorphism draw(std::mt19937_64& rng, GenIndex m_fix, GenIndex max_index, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return random_automorphism(m_fix, max_index, len(rng), rng());
}

void words_suite(std::mt19937_64& rng, SuiteReport& rep) {
  rep.checks.push_back(run_check("reduce is reduced and idempotent", 2000, rng, [](auto& r, std::size_t) {
    Word w = reduce(random_letters(r, 64, 4));
    return is_reduced(w) && reduce(w.letters()) == w;
  }));
  rep.checks.push_back(run_check("concat/invert group axioms", 2000, rng, [](auto& r, std::size_t) {
    Word a = reduce(random_letters(r, 32, 4)), b = reduce(random_letters(r, 32, 4)),
         c = reduce(random_letters(r, 32, 4));
    return concat(a, invert_word(a)).empty() && invert_word(invert_word(a)) == a &&
           concat(concat(a, b), c) == concat(a, concat(b, c)) && concat(a, Word{}) == a;
  }));
  rep.checks.push_back(run_check("substitute is a homomorphism", 500, rng, [](auto& r, std::size_t) {
    ImageMap images;
    for (GenIndex i = 1; i <= 4; ++i) images[i] = reduce(random_letters(r, 6, 5));
    Word a = reduce(random_letters(r, 16, 4)), b = reduce(random_letters(r, 16, 4));
    return substitute(images, concat(a, b)) == concat(substitute(images, a), substitute(images, b)) &&
           substitute({}, a) == a;
  }));
  rep.checks.push_back(run_check("format/parse round trip", 500, rng, [](auto& r, std::size_t) {
    Word w = reduce(random_letters(r, 24, 12));
    return parse_word(format_word(w)) == w;
  }));
}

void automorphisms_suite(std::mt19937_64& rng, SuiteReport& rep) {
  rep.checks.push_back(run_check("constructed inverses verify", 200, rng, [](auto& r, std::size_t) {
    Automorphism a = draw(r, 0, 5, 12);
    return verify_inverse_pair(a.fwd(), a.inv());
  }));
  rep.checks.push_back(run_check("compose is associative", 200, rng, [](auto& r, std::size_t) {
    Automorphism a = draw(r, 0, 4, 8), b = draw(r, 0, 4, 8), c = draw(r, 0, 4, 8);
    return compose(compose(a, b), c) == compose(a, compose(b, c));
  }));
  rep.checks.push_back(run_check("compose fixes indices above both supports", 200, rng, [](auto& r, std::size_t) {
    Automorphism a = draw(r, 0, 5, 10), b = draw(r, 0, 5, 10);
    GenIndex bound = std::max(a.support_bound(), b.support_bound());
    Automorphism ab = compose(a, b);
    for (GenIndex i = bound + 1; i <= bound + 3; ++i)
      if (ab.image(i) != Word::generator(i)) return false;
    return ab.support_bound() <= bound;
  }));
  rep.checks.push_back(run_check("H-sampling fixes x1..m", 200, rng, [](auto& r, std::size_t) {
    GenIndex m = std::uniform_int_distribution<GenIndex>(1, 3)(r);
    return is_in_H(draw(r, m, m + 3, 12), m);
  }));
}

void cosets_suite(std::mt19937_64& rng, SuiteReport& rep) {
  rep.checks.push_back(run_check("coset_product matches block formula", 100, rng, [](auto& r, std::size_t) {
    GenIndex m = std::uniform_int_distribution<GenIndex>(1, 2)(r);
    Automorphism g = draw(r, 0, m + 3, 12), h = draw(r, 0, m + 3, 12);
    DoubleCosetRep c = coset_product(m, g, h);
    return c.rep == product_formula_direct(m, c.N, g, h);
  }));
  rep.checks.push_back(run_check("left and right H-witnesses", 60, rng, [](auto& r, std::size_t) {
    GenIndex m = std::uniform_int_distribution<GenIndex>(1, 2)(r);
    Automorphism g = draw(r, 0, m + 2, 10), h = draw(r, 0, m + 2, 10);
    Automorphism q = draw(r, m, m + 2, 10), s = draw(r, m, m + 2, 10);
    GenIndex N = canonical_block(m, {&g, &h, &q, &s});
    Automorphism t = theta(m, N);
    Automorphism base = compose(g, compose(t, h));
    Automorphism left = witness_left(m, N, s, g, h);
    Automorphism right = witness_right(m, N, q, g, h);
    return is_in_H(left, m) && is_in_H(right, m) &&
           compose(g, compose(t, compose(s, h))) == compose(left, base) &&
           compose(g, compose(q, compose(t, h))) == compose(base, invert(right));
  }));
  rep.checks.push_back(run_check("product independent of N", 60, rng, [](auto& r, std::size_t) {
    GenIndex m = std::uniform_int_distribution<GenIndex>(1, 2)(r);
    GenIndex p = std::uniform_int_distribution<GenIndex>(1, 2)(r);
    Automorphism g = draw(r, 0, m + 2, 10), h = draw(r, 0, m + 2, 10);
    GenIndex N = canonical_block(m, {&g, &h});
    StabilityWitness w = stability_witness(m, N, p, g, h);
    Automorphism wide = compose(g, compose(theta(m, N + p), h));
    return is_in_H(w.renumber, m) && is_in_H(w.swap, m) &&
           compose(w.renumber, compose(compose(wide, w.swap), invert(w.renumber))) ==
               compose(g, compose(theta(m, N), h));
  }));
  rep.checks.push_back(run_check("star product equals pair product", 100, rng, [](auto& r, std::size_t) {
    GenIndex m = std::uniform_int_distribution<GenIndex>(1, 2)(r);
    return star_vs_pair_check(m, draw(r, 0, m + 2, 10), draw(r, 0, m + 2, 10));
  }));
  rep.checks.push_back(run_check("invertible elements compose as Aut(F_m)", 100, rng, [](auto& r, std::size_t) {
    GenIndex m = std::uniform_int_distribution<GenIndex>(2, 3)(r);
    Automorphism g = draw(r, 0, m, 10), h = draw(r, 0, m, 10);
    return coset_product(m, g, h).rep == compose(g, h);
  }));
}

void representation_suite(std::mt19937_64& rng, SuiteReport& rep, const EngineOptions& opts) {
  const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()};
  rep.checks.push_back(run_check("T(g o h) = T(g) T(h)", 30, rng, [&](auto& r, std::size_t i) {
    const FiniteGroup& k = groups[i % groups.size()];
    GenIndex m = 1;
    Automorphism g = draw(r, 0, m + 2, 10), h = draw(r, 0, m + 2, 10);
    RationalMatrix tg = markov_matrix(k, g, m, opts), th = markov_matrix(k, h, m, opts);
    RationalMatrix tgh = markov_matrix(k, coset_product(m, g, h).rep, m, opts);
    Subgroup whole = Subgroup::whole(k);
    return tg.is_doubly_stochastic() && tgh.is_doubly_stochastic() && tgh == tg * th &&
           compress_to_invariants(k, whole, m, tgh) ==
               compress_to_invariants(k, whole, m, tg) * compress_to_invariants(k, whole, m, th);
  }));
  rep.checks.push_back(run_check("markov matrix independent of N", 30, rng, [&](auto& r, std::size_t i) {
    const FiniteGroup& k = groups[i % groups.size()];
    Automorphism g = draw(r, 0, 3, 10);
    GenIndex N = std::max<GenIndex>(g.support_bound(), 1);
    return markov_matrix_at(k, g, 1, N, opts) == markov_matrix_at(k, g, 1, N + 1, opts);
  }));
  rep.checks.push_back(run_check("action map is a bijection", 30, rng, [&](auto& r, std::size_t i) {
    const FiniteGroup& k = groups[i % groups.size()];
    Automorphism g = draw(r, 0, 4, 10);
    auto fwd = action_map(k, g, 4, opts);
    auto back = action_map(k, invert(g), 4, opts);
    for (std::uint64_t p = 0; p < fwd.size(); ++p)
      if (back[fwd[p]] != p) return false;
    return true;
  }));
  rep.checks.push_back(run_check("weak limit of theta_j", 4, rng, [&](auto&, std::size_t i) {
    const FiniteGroup k = FiniteGroup::cyclic(2);
    GenIndex cyl = 1 + static_cast<GenIndex>(i % 2);
    bool ok = !weak_limit_check(k, 1, cyl, 0, opts);
    for (GenIndex j = cyl; j <= cyl + 1; ++j) ok = ok && weak_limit_check(k, 1, cyl, j, opts);
    return ok;
  }));
}

}  // namespace

SuiteReport run_suite(std::string_view suite, std::uint64_t seed, const EngineOptions& opts) {
  const bool all = suite == "all";
  if (!all && suite != "words" && suite != "automorphisms" && suite != "cosets" && suite != "representation")
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  SuiteReport rep{std::string(suite), seed, {}};
  std::mt19937_64 rng(seed);
  if (all || suite == "words") words_suite(rng, rep);
  if (all || suite == "automorphisms") automorphisms_suite(rng, rep);
  if (all || suite == "cosets") cosets_suite(rng, rep);
  if (all || suite == "representation") representation_suite(rng, rep, opts);
  return rep;
}

}  // namespace freecoset
