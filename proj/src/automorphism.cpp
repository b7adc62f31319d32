#include "freecoset/automorphism.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "freecoset/errors.hpp"

namespace freecoset {

Endomorphism::Endomorphism(ImageMap images) {
  for (auto& [g, w] : images) {
    if (g == 0) throw DomainError("generator index must be >= 1");
    if (w.size() == 1 && w[0] == gen(g)) continue;
    images_.emplace(g, std::move(w));
  }
}

Word Endomorphism::image(GenIndex i) const {
  auto it = images_.find(i);
  return it == images_.end() ? Word::generator(i) : it->second;
}

GenIndex Endomorphism::support_bound() const {
  GenIndex b = 0;
  for (const auto& [g, w] : images_) b = std::max({b, g, w.max_index()});
  return b;
}

Endomorphism compose(const Endomorphism& a, const Endomorphism& b) {
  ImageMap out;
  for (const auto& [g, w] : b.images()) out.emplace(g, a.apply(w));
  for (const auto& [g, w] : a.images())
    if (!b.images().contains(g)) out.emplace(g, w);
  return Endomorphism(std::move(out));
}

bool verify_inverse_pair(const Endomorphism& f, const Endomorphism& g) {
  GenIndex bound = std::max(f.support_bound(), g.support_bound());
  for (GenIndex i = 1; i <= bound; ++i) {
    Word xi = Word::generator(i);
    if (f.apply(g.image(i)) != xi) return false;
    if (g.apply(f.image(i)) != xi) return false;
  }
  return true;
}

Automorphism Automorphism::from_pair(Endomorphism fwd, Endomorphism inv) {
  if (!verify_inverse_pair(fwd, inv)) throw DomainError("inverse_images is not a two-sided inverse of images");
  return Automorphism(std::move(fwd), std::move(inv));
}

GenIndex Automorphism::support_bound() const { return std::max(fwd_.support_bound(), inv_.support_bound()); }

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  return Automorphism(compose(a.fwd_, b.fwd_), compose(b.inv_, a.inv_));
}

Automorphism invert(const Automorphism& a) { return Automorphism(a.inv_, a.fwd_); }

Automorphism nielsen_swap(GenIndex i, GenIndex j) {
  if (i == 0 || j == 0) throw DomainError("generator index must be >= 1");
  if (i == j) throw DomainError("nielsen_swap needs two distinct indices");
  return permutation_automorphism({{i, j}, {j, i}});
}

Automorphism nielsen_invert(GenIndex i) {
  if (i == 0) throw DomainError("generator index must be >= 1");
  Endomorphism e(ImageMap{{i, Word{gen_inv(i)}}});
  return Automorphism::from_pair(e, e);
}

Automorphism nielsen_right_mult(GenIndex i, GenIndex j) {
  if (i == 0 || j == 0) throw DomainError("generator index must be >= 1");
  if (i == j) throw DomainError("nielsen_right_mult needs two distinct indices");
  return Automorphism::from_pair(Endomorphism(ImageMap{{i, Word{gen(i), gen(j)}}}),
                                 Endomorphism(ImageMap{{i, Word{gen(i), gen_inv(j)}}}));
}

Automorphism permutation_automorphism(const Permutation& pi) {
  std::set<GenIndex> domain, range;
  for (auto [from, to] : pi) {
    if (from == 0 || to == 0) throw DomainError("permutation entries must be >= 1");
    domain.insert(from);
    if (!range.insert(to).second) throw DomainError("permutation is not injective");
  }
  if (domain != range) throw DomainError("permutation does not map its support onto itself");
  ImageMap fwd, inv;
  for (auto [from, to] : pi) {
    fwd.emplace(from, Word::generator(to));
    inv.emplace(to, Word::generator(from));
  }
  return Automorphism::from_pair(Endomorphism(std::move(fwd)), Endomorphism(std::move(inv)));
}

bool is_in_H(const Automorphism& a, GenIndex m) {
  for (GenIndex i = 1; i <= m; ++i)
    if (a.fwd().images().contains(i)) return false;
  return true;
}

Automorphism random_automorphism(GenIndex m_fix, GenIndex max_index, std::size_t length, std::uint64_t seed) {
  if (max_index <= m_fix) throw DomainError("random_automorphism needs max_index > m_fix");
  std::mt19937_64 rng(seed);
  const GenIndex lo = m_fix + 1;
  std::uniform_int_distribution<GenIndex> moved(lo, max_index);
  std::uniform_int_distribution<GenIndex> any(1, max_index);
  std::uniform_int_distribution<int> kind(0, 2);

  Automorphism acc;
  for (std::size_t step = 0; step < length; ++step) {
    GenIndex i = moved(rng);
    Automorphism move;
    switch (kind(rng)) {
      case 0:
        if (max_index > lo) {
          GenIndex j = moved(rng);
          while (j == i) j = moved(rng);
          move = nielsen_swap(i, j);
          break;
        }
        [[fallthrough]];
      case 1:
        move = nielsen_invert(i);
        break;
      default:
        if (max_index > 1) {
          GenIndex j = any(rng);
          while (j == i) j = any(rng);
          move = nielsen_right_mult(i, j);
        } else {
          move = nielsen_invert(i);
        }
        break;
    }
    acc = compose(acc, move);
  }
  return acc;
}

}  // namespace freecoset
