#include "freecoset/double_coset.hpp"

#include <algorithm>
#include <string>

#include "freecoset/errors.hpp"

namespace freecoset {

namespace {

void require_support(const Automorphism& a, GenIndex bound, const char* what) {
  if (a.support_bound() > bound)
    throw DomainError(std::string(what) + " moves generators above index " + std::to_string(bound));
}

void require_in_H(const Automorphism& a, GenIndex m, const char* what) {
  if (!is_in_H(a, m)) throw DomainError(std::string(what) + " does not fix x1..x" + std::to_string(m));
}

Automorphism gtheta_h(GenIndex m, GenIndex N, const Automorphism& g, const Automorphism& h) {
  return compose(g, compose(theta(m, N), h));
}

}  // namespace

Automorphism theta(GenIndex m, GenIndex j) {
  Permutation pi;
  for (GenIndex k = 1; k <= j; ++k) {
    pi[m + k] = m + j + k;
    pi[m + j + k] = m + k;
  }
  return permutation_automorphism(pi);
}

GenIndex canonical_block(GenIndex m, std::initializer_list<const Automorphism*> factors) {
  GenIndex b = m;
  for (const Automorphism* a : factors) b = std::max(b, a->support_bound());
  return b - m;
}

DoubleCosetRep coset_product(GenIndex m, const Automorphism& g, const Automorphism& h) {
  GenIndex N = canonical_block(m, {&g, &h});
  return {m, N, gtheta_h(m, N, g, h)};
}

Automorphism product_formula_direct(GenIndex m, GenIndex N, const Automorphism& g, const Automorphism& h) {
  require_support(g, m + N, "g");
  require_support(h, m + N, "h");

  // (x, y) -> (alpha(x, y), z)
  auto outer = [m, N](const Endomorphism& e) {
    ImageMap sub;
    for (GenIndex a = 1; a <= m; ++a) sub[a] = e.image(a);
    for (GenIndex b = 1; b <= N; ++b) sub[m + b] = Word::generator(m + N + b);
    return sub;
  };
  auto build = [&](const Endomorphism& first, const Endomorphism& second) {
    ImageMap sub = outer(first);
    ImageMap out;
    for (GenIndex i = 1; i <= m + N; ++i) out[i] = substitute(sub, second.image(i));
    for (GenIndex b = 1; b <= N; ++b) out[m + N + b] = first.image(m + b);
    return Endomorphism(std::move(out));
  };
  // The inverse h^-1 theta g^-1 has the same shape with the roles exchanged.
  return Automorphism::from_pair(build(g.fwd(), h.fwd()), build(h.inv(), g.inv()));
}

Automorphism witness_left(GenIndex m, GenIndex N, const Automorphism& r, const Automorphism& g,
                          const Automorphism& h) {
  require_in_H(r, m, "r");
  require_support(r, m + N, "r");
  require_support(g, m + N, "g");
  require_support(h, m + N, "h");

  ImageMap sub;
  for (GenIndex a = 1; a <= m; ++a) sub[a] = g.image(a);
  for (GenIndex b = 1; b <= N; ++b) sub[m + b] = Word::generator(m + N + b);

  ImageMap fwd, inv;
  for (GenIndex b = 1; b <= N; ++b) {
    fwd[m + N + b] = substitute(sub, r.fwd().image(m + b));
    inv[m + N + b] = substitute(sub, r.inv().image(m + b));
  }
  return Automorphism::from_pair(Endomorphism(std::move(fwd)), Endomorphism(std::move(inv)));
}

Automorphism witness_right(GenIndex m, GenIndex N, const Automorphism& q, const Automorphism& g,
                           const Automorphism& h) {
  // (g q theta h)^-1 = h^-1 theta q^-1 g^-1, which is the left case.
  return witness_left(m, N, invert(q), invert(h), invert(g));
}

StabilityWitness stability_witness(GenIndex m, GenIndex N, GenIndex p, const Automorphism& g,
                                   const Automorphism& h) {
  require_support(g, m + N, "g");
  require_support(h, m + N, "h");

  // Layout for theta_{N+p}: x | y (N) | y' (p) | z (N) | z' (p)
  const GenIndex y_prime = m + N;
  const GenIndex z = m + N + p;
  const GenIndex z_prime = m + 2 * N + p;

  Permutation swap;
  Permutation renumber;
  for (GenIndex c = 1; c <= p; ++c) {
    swap[y_prime + c] = z_prime + c;
    swap[z_prime + c] = y_prime + c;
    renumber[y_prime + c] = m + 2 * N + c;
  }
  for (GenIndex b = 1; b <= N; ++b) renumber[z + b] = m + N + b;
  // Drop fixed points so the map is a bijection of its support.
  std::erase_if(renumber, [](const auto& kv) { return kv.first == kv.second; });

  return {permutation_automorphism(renumber), permutation_automorphism(swap)};
}

ConjClassRep star_product(GenIndex m, const Automorphism& g, const Automorphism& h) {
  GenIndex N = canonical_block(m, {&g, &h});
  Automorphism t = theta(m, N);
  return {m, N, compose(g, compose(t, compose(h, t)))};
}

TupleRep tuple_product(GenIndex m, const std::vector<Automorphism>& gs, const std::vector<Automorphism>& hs) {
  if (gs.empty() || gs.size() != hs.size())
    throw DomainError("tuple_product needs two tuples of the same positive length");
  GenIndex bound = m;
  for (const auto& a : gs) bound = std::max(bound, a.support_bound());
  for (const auto& a : hs) bound = std::max(bound, a.support_bound());
  const GenIndex N = bound - m;

  TupleRep out{m, N, {}};
  out.reps.reserve(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) out.reps.push_back(gtheta_h(m, N, gs[i], hs[i]));
  return out;
}

bool star_vs_pair_check(GenIndex m, const Automorphism& g, const Automorphism& h) {
  TupleRep pair = tuple_product(m, {g, Automorphism::identity()}, {h, Automorphism::identity()});
  const Automorphism& a = pair.reps[0];
  const Automorphism& b = pair.reps[1];
  if (!is_in_H(b, m)) return false;
  return compose(a, invert(b)) == star_product(m, g, h).rep;
}

Automorphism swap_blocks(const Automorphism& a, GenIndex a0, GenIndex b0, GenIndex len) {
  if (len == 0 || a0 == b0) return a;
  Permutation pi;
  for (GenIndex k = 0; k < len; ++k) {
    pi[a0 + k] = b0 + k;
    pi[b0 + k] = a0 + k;
  }
  Automorphism s = permutation_automorphism(pi);
  return compose(s, compose(a, s));
}

Automorphism triple_product_disjoint(GenIndex m, const Automorphism& g, const Automorphism& h,
                                     const Automorphism& f) {
  const GenIndex N = canonical_block(m, {&g, &h, &f});
  const GenIndex y = m + 1, z = m + N + 1, u = m + 2 * N + 1;
  Automorphism g_moved = swap_blocks(g, y, u, N);
  Automorphism h_moved = swap_blocks(h, y, z, N);
  return compose(g_moved, compose(h_moved, f));
}

}  // namespace freecoset
