#pragma once

// Finitely supported endomorphisms and automorphisms of the free group on
// countably many generators.
//
// Composition convention: compose(a, b) sends x_i to a(b(x_i)), so the string
// product "a b" applies b first and then rewrites the result through a.

#include <cstdint>
#include <map>

#include "freecoset/word.hpp"

namespace freecoset {

class Endomorphism {
 public:
  Endomorphism() = default;
  // Entries mapping a generator to itself are dropped.
  explicit Endomorphism(ImageMap images);

  static Endomorphism identity() { return {}; }

  const ImageMap& images() const { return images_; }
  Word image(GenIndex i) const;
  Word apply(const Word& w) const { return substitute(images_, w); }
  bool is_identity() const { return images_.empty(); }

  // Smallest B such that every generator above B is fixed and no stored
  // image mentions an index above B.
  GenIndex support_bound() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  ImageMap images_;
};

Endomorphism compose(const Endomorphism& a, const Endomorphism& b);
bool verify_inverse_pair(const Endomorphism& f, const Endomorphism& g);
inline GenIndex support_bound(const Endomorphism& e) { return e.support_bound(); }

/// An endomorphism together with a certified two-sided inverse.
class Automorphism {
 public:
  Automorphism() = default;

  // Throws DomainError unless verify_inverse_pair(fwd, inv) holds.
  static Automorphism from_pair(Endomorphism fwd, Endomorphism inv);

  static Automorphism identity() { return {}; }

  const Endomorphism& fwd() const { return fwd_; }
  const Endomorphism& inv() const { return inv_; }
  Word image(GenIndex i) const { return fwd_.image(i); }
  Word apply(const Word& w) const { return fwd_.apply(w); }
  bool is_identity() const { return fwd_.is_identity(); }
  GenIndex support_bound() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

  friend Automorphism compose(const Automorphism& a, const Automorphism& b);
  friend Automorphism invert(const Automorphism& a);

 private:
  Automorphism(Endomorphism fwd, Endomorphism inv) : fwd_(std::move(fwd)), inv_(std::move(inv)) {}

  Endomorphism fwd_;
  Endomorphism inv_;
};

Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism invert(const Automorphism& a);
inline GenIndex support_bound(const Automorphism& a) { return a.support_bound(); }

// Nielsen generators.
Automorphism nielsen_swap(GenIndex i, GenIndex j);
Automorphism nielsen_invert(GenIndex i);
// x_i -> x_i x_j
Automorphism nielsen_right_mult(GenIndex i, GenIndex j);

// Finitely supported permutation, stored as its moved points i -> pi(i).
using Permutation = std::map<GenIndex, GenIndex>;

// x_i -> x_{pi(i)}. Throws DomainError if pi is not a bijection of its
// support.
Automorphism permutation_automorphism(const Permutation& pi);

// True iff a fixes x_1, ..., x_m.
bool is_in_H(const Automorphism& a, GenIndex m);

// Composes `length` random Nielsen generators. When m_fix > 0 the moved
// generator is drawn from (m_fix, max_index] and the result fixes
// x_1..x_m_fix; multipliers may be any index in [1, max_index].
Automorphism random_automorphism(GenIndex m_fix, GenIndex max_index, std::size_t length, std::uint64_t seed);

}  // namespace freecoset
