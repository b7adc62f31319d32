#pragma once

// Deliberately naive reference implementations used as test oracles. None of
// these go through WordBuilder, compose(), the kernels or TupleIndex.

#include <cstdint>
#include <random>
#include <vector>

#include "freecoset/finite_group.hpp"
#include "freecoset/rational.hpp"
#include "freecoset/word.hpp"

namespace oracle {

using namespace freecoset;

// Removes the leftmost cancelling pair until none is left.
inline std::vector<Letter> naive_reduce(std::vector<Letter> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].gen == s[i + 1].gen && s[i].sign != s[i + 1].sign) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

inline std::vector<Letter> letters_of(const Word& w) { return {w.begin(), w.end()}; }

// Letterwise replacement followed by naive_reduce.
inline std::vector<Letter> naive_apply(const ImageMap& images, const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (Letter l : w) {
    auto it = images.find(l.gen);
    std::vector<Letter> img = it == images.end() ? std::vector<Letter>{{l.gen, Sign::Plus}} : letters_of(it->second);
    if (l.sign == Sign::Minus) {
      std::vector<Letter> rev;
      for (auto r = img.rbegin(); r != img.rend(); ++r)
        rev.push_back({r->gen, r->sign == Sign::Plus ? Sign::Minus : Sign::Plus});
      img = rev;
    }
    out.insert(out.end(), img.begin(), img.end());
  }
  return naive_reduce(out);
}

inline Element naive_eval(const FiniteGroup& k, const std::vector<Letter>& w, const std::vector<Element>& point) {
  Element acc = k.unit();
  for (Letter l : w) {
    Element e = point.at(l.gen - 1);
    if (l.sign == Sign::Minus) {
      for (Element c = 0; c < k.order(); ++c)
        if (k.mul(e, c) == k.unit()) {
          e = c;
          break;
        }
    }
    acc = k.mul(acc, e);
  }
  return acc;
}

// All points of K^d in lexicographic order (coordinate 1 slowest).
inline std::vector<std::vector<Element>> all_points(std::uint32_t n, std::uint32_t d) {
  std::vector<std::vector<Element>> out{{}};
  for (std::uint32_t i = 0; i < d; ++i) {
    std::vector<std::vector<Element>> next;
    for (const auto& p : out)
      for (Element e = 0; e < n; ++e) {
        auto q = p;
        q.push_back(e);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

inline std::size_t lex_index(std::uint32_t n, const std::vector<Element>& p) {
  std::size_t idx = 0;
  for (Element e : p) idx = idx * n + e;
  return idx;
}

// Brute-force matrix of P T(g) on K^m computed on K^N from the images of
// x_1..x_m.
inline RationalMatrix brute_markov(const FiniteGroup& k, const std::vector<std::vector<Letter>>& images_1_to_m,
                                   std::uint32_t m, std::uint32_t N) {
  const std::uint32_t n = k.order();
  const auto rows = all_points(n, m);
  const auto tails = all_points(n, N - m);
  RationalMatrix M(rows.size(), rows.size());
  const Rational w(1, static_cast<long>(tails.size()));
  for (const auto& head : rows) {
    for (const auto& tail : tails) {
      std::vector<Element> point = head;
      point.insert(point.end(), tail.begin(), tail.end());
      std::vector<Element> target;
      for (const auto& img : images_1_to_m) target.push_back(naive_eval(k, img, point));
      M(lex_index(n, head), lex_index(n, target)) += w;
    }
  }
  return M;
}

inline std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t max_len, GenIndex max_gen) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenIndex> g(1, max_gen);
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = {g(rng), neg(rng) ? Sign::Minus : Sign::Plus};
  return out;
}

}  // namespace oracle
