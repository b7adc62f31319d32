#include "freecoset/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <map>

#include "freecoset/errors.hpp"

namespace freecoset {

FiniteGroup::FiniteGroup(std::uint32_t order, std::vector<Element> mul, Element unit, std::string name)
    : order_(order), mul_(std::move(mul)), inv_(order, order), unit_(unit), name_(std::move(name)) {
  if (order == 0) throw DomainError("group order must be positive");
  if (mul_.size() != std::size_t{order} * order) throw DomainError("multiplication table has wrong size");
  if (unit >= order) throw DomainError("unit out of range");
  for (Element e : mul_)
    if (e >= order) throw DomainError("multiplication table entry out of range");
  for (Element a = 0; a < order; ++a)
    if (this->mul(unit, a) != a || this->mul(a, unit) != a) throw DomainError("unit is not an identity element");
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      if (this->mul(a, b) == unit) {
        if (this->mul(b, a) != unit) throw DomainError("one-sided inverse in multiplication table");
        inv_[a] = b;
      }
    }
    if (inv_[a] == order) throw DomainError("element without inverse");
  }
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b)
      for (Element c = 0; c < order; ++c)
        if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
          throw DomainError("multiplication table is not associative");
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  std::vector<Element> mul(std::size_t{n} * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(mul), 0, "c" + std::to_string(n));
}

namespace {

// Builds the table of a permutation group given by its elements, which must
// include the identity at position 0 and be closed.
template <std::size_t Deg>
FiniteGroup from_permutations(const std::vector<std::array<int, Deg>>& elems, std::string name) {
  std::map<std::array<int, Deg>, Element> index;
  for (Element i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const auto n = static_cast<std::uint32_t>(elems.size());
  std::vector<Element> mul(std::size_t{n} * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      std::array<int, Deg> p{};
      for (std::size_t i = 0; i < Deg; ++i) p[i] = elems[a][static_cast<std::size_t>(elems[b][i])];
      mul[a * n + b] = index.at(p);
    }
  }
  return FiniteGroup(n, std::move(mul), 0, std::move(name));
}

}  // namespace

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> elems;
  std::array<int, 3> p{0, 1, 2};
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(elems, "s3");
}

FiniteGroup FiniteGroup::dihedral8() {
  // Symmetries of the square acting on its vertices 0..3.
  std::vector<std::array<int, 4>> elems;
  for (int k = 0; k < 4; ++k) elems.push_back({k % 4, (k + 1) % 4, (k + 2) % 4, (k + 3) % 4});
  for (int k = 0; k < 4; ++k) elems.push_back({(k + 4) % 4, (k + 3) % 4, (k + 2) % 4, (k + 1) % 4});
  return from_permutations(elems, "d8");
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements (s, q) = s * q with s in {+1, -1} and q in {1, i, j, k}; index 4*neg + q.
  // Unit-quaternion products: qtab[a][b] = (sign, result).
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> qtab{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<Element> mul(64);
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      auto [s, q] = qtab[a % 4][b % 4];
      int sign = s * ((a / 4) ? -1 : 1) * ((b / 4) ? -1 : 1);
      mul[a * 8 + b] = static_cast<Element>((sign < 0 ? 4 : 0) + q);
    }
  }
  return FiniteGroup(8, std::move(mul), 0, "q8");
}

FiniteGroup builtin_group(std::string_view name) {
  if (name == "s3" || name == "symmetric(3)") return FiniteGroup::symmetric3();
  if (name == "d8" || name == "dihedral(8)") return FiniteGroup::dihedral8();
  if (name == "q8" || name == "quaternion(8)") return FiniteGroup::quaternion8();
  std::string_view digits;
  if (name.starts_with("cyclic(") && name.ends_with(")"))
    digits = name.substr(7, name.size() - 8);
  else if (name.starts_with("c"))
    digits = name.substr(1);
  std::uint32_t n = 0;
  if (!digits.empty()) {
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n > 0) return FiniteGroup::cyclic(n);
  }
  throw DomainError("unknown group '" + std::string(name) + "'");
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element e : members_)
    if (e >= parent.order()) throw DomainError("subgroup element out of range");
  auto has = [&](Element e) { return std::binary_search(members_.begin(), members_.end(), e); };
  if (!has(parent.unit())) throw DomainError("subgroup must contain the unit");
  for (Element a : members_) {
    if (!has(parent.inv(a))) throw DomainError("subgroup not closed under inverses");
    for (Element b : members_)
      if (!has(parent.mul(a, b))) throw DomainError("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  for (Element i = 0; i < parent.order(); ++i) all[i] = i;
  return Subgroup(parent, std::move(all));
}

std::uint64_t checked_power(std::uint64_t radix, std::uint32_t dims) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < dims; ++i) {
    if (radix != 0 && out > std::numeric_limits<std::uint64_t>::max() / radix)
      return std::numeric_limits<std::uint64_t>::max();
    out *= radix;
  }
  return out;
}

TupleIndex::TupleIndex(std::uint32_t radix, std::uint32_t dims)
    : radix_(radix), dims_(dims), size_(checked_power(radix, dims)) {
  if (radix == 0) throw DomainError("radix must be positive");
  if (size_ == std::numeric_limits<std::uint64_t>::max()) throw SizeError("K^d too large to index");
}

std::uint64_t TupleIndex::encode(std::span<const Element> point) const {
  if (point.size() != dims_) throw DomainError("tuple has wrong length");
  std::uint64_t idx = 0;
  for (Element e : point) {
    if (e >= radix_) throw DomainError("tuple entry out of range");
    idx = idx * radix_ + e;
  }
  return idx;
}

void TupleIndex::decode_into(std::uint64_t index, std::span<Element> out) const {
  if (index >= size_) throw DomainError("tuple index out of range");
  for (std::uint32_t i = dims_; i-- > 0;) {
    out[i] = static_cast<Element>(index % radix_);
    index /= radix_;
  }
}

std::vector<Element> TupleIndex::decode(std::uint64_t index) const {
  std::vector<Element> out(dims_);
  decode_into(index, out);
  return out;
}

}  // namespace freecoset
