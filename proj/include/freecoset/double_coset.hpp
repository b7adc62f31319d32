#pragma once

// Products on H\G/H, on the conjugacy classes G//H and on H\G^k/H, where G
// is the automorphism group of the free group on countably many generators
// and H the stabiliser of x_1..x_m.
//
// Generator blocks relative to (m, N):
//   x = 1..m, y = m+1..m+N, z = m+N+1..m+2N, u = everything above.
//
// Representatives are compared as automorphisms. Equal representatives imply
// equal cosets; the converse is not decided here.

#include <cstdint>
#include <vector>

#include "freecoset/automorphism.hpp"

namespace freecoset {

struct DoubleCosetRep {
  GenIndex m = 0;
  GenIndex N = 0;
  Automorphism rep;

  friend bool operator==(const DoubleCosetRep&, const DoubleCosetRep&) = default;
};

struct ConjClassRep {
  GenIndex m = 0;
  GenIndex N = 0;
  Automorphism rep;

  friend bool operator==(const ConjClassRep&, const ConjClassRep&) = default;
};

struct TupleRep {
  GenIndex m = 0;
  GenIndex N = 0;
  std::vector<Automorphism> reps;

  friend bool operator==(const TupleRep&, const TupleRep&) = default;
};

// Fixes 1..m and swaps m+k <-> m+j+k for k = 1..j. An involution.
Automorphism theta(GenIndex m, GenIndex j);

// Smallest N such that every given automorphism fixes all indices > m+N.
GenIndex canonical_block(GenIndex m, std::initializer_list<const Automorphism*> factors);

// g theta_N h with N = canonical_block(m, {g, h}).
DoubleCosetRep coset_product(GenIndex m, const Automorphism& g, const Automorphism& h);

// Builds g theta_N h by block substitution:
//   x -> gamma(alpha(x,y), z), y -> delta(alpha(x,y), z), z -> beta(x,y),
// where g = (alpha, beta) and h = (gamma, delta) on the (x, y) blocks.
// Throws DomainError if g or h moves an index above m+N.
Automorphism product_formula_direct(GenIndex m, GenIndex N, const Automorphism& g, const Automorphism& h);

// For r in H supported on the x, y blocks returns the automorphism
//   x -> x, y -> y, z -> sigma(alpha(x,y), z)
// with g theta_N r h = witness * (g theta_N h).
Automorphism witness_left(GenIndex m, GenIndex N, const Automorphism& r, const Automorphism& g,
                          const Automorphism& h);

// For q in H supported on the x, y blocks returns w in H with
//   g q theta_N h = (g theta_N h) * w^-1.
Automorphism witness_right(GenIndex m, GenIndex N, const Automorphism& q, const Automorphism& g,
                           const Automorphism& h);

struct StabilityWitness {
  // Renumbering x, y, y', z, z' -> x, y, z, y', z'.
  Automorphism renumber;
  // Exchange of the y' and z' blocks.
  Automorphism swap;
};

// Witnesses that theta_{N+p} gives the same product as theta_N:
//   renumber * (g theta_{N+p} h) * swap * renumber^-1 = g theta_N h.
StabilityWitness stability_witness(GenIndex m, GenIndex N, GenIndex p, const Automorphism& g,
                                   const Automorphism& h);

// g theta h theta with the canonical N.
ConjClassRep star_product(GenIndex m, const Automorphism& g, const Automorphism& h);

// Componentwise gs[i] theta_N hs[i] with one N shared across the tuple.
TupleRep tuple_product(GenIndex m, const std::vector<Automorphism>& gs, const std::vector<Automorphism>& hs);

// Compares star_product with the pair product of (g, id) and (h, id) under
// (a, b) -> a b^-1.
bool star_vs_pair_check(GenIndex m, const Automorphism& g, const Automorphism& h);

// Product of g, h, f after moving their auxiliary blocks apart (g onto u,
// h onto z, f stays on y), evaluated as a plain composition:
//   x -> phi(gamma(alpha(x,u),z),y), y -> psi(gamma(alpha(x,u),z),y),
//   z -> delta(alpha(x,u),z),         u -> beta(x,u).
// Here y, z, u are consecutive blocks of size N = canonical_block(m, {g,h,f}).
Automorphism triple_product_disjoint(GenIndex m, const Automorphism& g, const Automorphism& h, const Automorphism& f);

// Conjugates a by the permutation exchanging blocks [a0, a0+len) and [b0, b0+len).
Automorphism swap_blocks(const Automorphism& a, GenIndex a0, GenIndex b0, GenIndex len);

}  // namespace freecoset
