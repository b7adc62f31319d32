#pragma once

// Finite truncation of the action of automorphisms on K^N for a finite group
// K with normalized counting measure.
//
// Functions on K^d are vectors over the delta basis, indexed by TupleIndex
// (coordinate 1 most significant). The operator T(g) acts by
// (T(g)f)(k) = f(g(k)) where g(k)_i is the word g(x_i) evaluated at k.
//
// markov_matrix(K, g, m) is the matrix of P T(g) restricted to functions of
// the first m coordinates:
//   M[row k', col k] = |K|^-(N-m) * #{ w in K^(N-m) : g(k', w)_{1..m} = k }.

#include <cstdint>
#include <span>
#include <vector>

#include "freecoset/automorphism.hpp"
#include "freecoset/finite_group.hpp"
#include "freecoset/kernels/word_eval.hpp"
#include "freecoset/rational.hpp"

namespace freecoset {

inline constexpr std::uint64_t kDefaultMaxPoints = 10'000'000;

struct EngineOptions {
  // Enumerations over more than this many points throw SizeError.
  std::uint64_t max_points = kDefaultMaxPoints;
  kernels::Isa isa = kernels::best_isa();
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

Element eval_word(const FiniteGroup& k, const Word& w, std::span<const Element> point);

// Index map of k -> g(k) on K^N. Throws DomainError if g moves generators
// above N or if the map is not a bijection.
std::vector<std::uint64_t> action_map(const FiniteGroup& k, const Automorphism& g, GenIndex N,
                                      const EngineOptions& opts = {});

// Averaging over coordinates m+1..N as a |K|^N square matrix.
RationalMatrix projection_P(const FiniteGroup& k, GenIndex m, GenIndex N, const EngineOptions& opts = {});

// Uses N = max(support_bound(g), m).
RationalMatrix markov_matrix(const FiniteGroup& k, const Automorphism& g, GenIndex m, const EngineOptions& opts = {});
// Same operator computed on K^N for an explicit N >= max(support_bound(g), m).
RationalMatrix markov_matrix_at(const FiniteGroup& k, const Automorphism& g, GenIndex m, GenIndex N,
                                const EngineOptions& opts = {});

struct OrbitDecomposition {
  // orbit_of[i] is the orbit number of tuple i; orbits are numbered by their
  // smallest member and list members in increasing order.
  std::vector<std::size_t> orbit_of;
  std::vector<std::vector<std::uint64_t>> orbits;
};

// Orbits of simultaneous conjugation (k_1..k_m) -> (u k_1 u^-1, ...).
OrbitDecomposition conjugation_orbits(const FiniteGroup& k, const Subgroup& u, GenIndex m);

// Restriction of M to U-invariant functions, written in the basis of orbit
// indicators: C[O', O] = sum_{k in O} M[rep(O'), k]. This is similar to the
// matrix in the orthonormal basis via the diagonal of orbit sizes. Throws
// DomainError if M does not commute with the conjugation action.
RationalMatrix compress_to_invariants(const FiniteGroup& k, const Subgroup& u, GenIndex m, const RationalMatrix& M);

/// Function on K^arity depending only on the first `arity` coordinates.
struct CylinderFunction {
  GenIndex arity = 0;
  std::vector<Rational> values;

  static CylinderFunction constant(const FiniteGroup& k, GenIndex arity, const Rational& c);
  static CylinderFunction delta(const FiniteGroup& k, std::span<const Element> point);
};

// |K|^-N sum over K^N of f * g, both extended cylindrically.
Rational cylinder_inner_product(const FiniteGroup& k, GenIndex N, const CylinderFunction& f,
                                const CylinderFunction& g, const EngineOptions& opts = {});

// T(a) f as a function of the first N coordinates. Needs the images of
// x_1..x_arity to mention only indices <= N.
CylinderFunction apply_T(const FiniteGroup& k, const Automorphism& a, const CylinderFunction& f, GenIndex N,
                         const EngineOptions& opts = {});

// P f: average over coordinates above m.
CylinderFunction project(const FiniteGroup& k, GenIndex m, const CylinderFunction& f);

// Checks <T(theta_j) f, f'> = <P f, P f'> for all delta functions f, f' on the
// first m + cylinder coordinates, evaluated on K^(m + j + cylinder).
bool weak_limit_check(const FiniteGroup& k, GenIndex m, GenIndex cylinder, GenIndex j,
                      const EngineOptions& opts = {});

}  // namespace freecoset
