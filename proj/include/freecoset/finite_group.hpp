#pragma once

// Finite groups given by multiplication tables, subgroups, and mixed-radix
// indexing of K^d.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freecoset {

using Element = std::uint32_t;

class FiniteGroup {
 public:
  // mul is order*order, row-major: mul[a*order + b] = a*b. Throws DomainError
  // unless the table satisfies the group axioms.
  FiniteGroup(std::uint32_t order, std::vector<Element> mul, Element unit, std::string name = {});

  static FiniteGroup cyclic(std::uint32_t n);
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral8();
  static FiniteGroup quaternion8();

  std::uint32_t order() const { return order_; }
  Element unit() const { return unit_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element conj(Element u, Element k) const { return mul(mul(u, k), inv(u)); }
  std::span<const Element> table() const { return mul_; }
  const std::string& name() const { return name_; }

 private:
  std::uint32_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element unit_;
  std::string name_;
};

// Names: c<n> or cyclic(<n>), s3 or symmetric(3), d8 or dihedral(8),
// q8 or quaternion(8).
FiniteGroup builtin_group(std::string_view name);

class Subgroup {
 public:
  // Throws DomainError unless members contain the unit and are closed.
  Subgroup(const FiniteGroup& parent, std::vector<Element> members);

  static Subgroup trivial(const FiniteGroup& parent) { return Subgroup(parent, {parent.unit()}); }
  static Subgroup whole(const FiniteGroup& parent);

  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<Element> members_;
};

/// Bijection K^d <-> [0, n^d). Coordinate 1 is the most significant digit.
class TupleIndex {
 public:
  TupleIndex(std::uint32_t radix, std::uint32_t dims);

  std::uint64_t size() const { return size_; }
  std::uint32_t dims() const { return dims_; }
  std::uint64_t encode(std::span<const Element> point) const;
  std::vector<Element> decode(std::uint64_t index) const;
  void decode_into(std::uint64_t index, std::span<Element> out) const;

 private:
  std::uint32_t radix_;
  std::uint32_t dims_;
  std::uint64_t size_;
};

// radix^dims, or SIZE_MAX-like saturation when it would overflow.
std::uint64_t checked_power(std::uint64_t radix, std::uint32_t dims);

}  // namespace freecoset
