#pragma once

// Reduced words in the free group on generators x1, x2, ...

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freecoset {

using GenIndex = std::uint32_t;

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

struct Letter {
  GenIndex gen = 1;
  Sign sign = Sign::Plus;

  constexpr Letter inverse() const { return {gen, flip(sign)}; }
  constexpr bool cancels(Letter other) const { return gen == other.gen && sign != other.sign; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter gen(GenIndex i) { return {i, Sign::Plus}; }
constexpr Letter gen_inv(GenIndex i) { return {i, Sign::Minus}; }

/// A freely reduced word. Every constructor reduces, so two Words are equal
/// in the free group iff their letter sequences are equal.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word generator(GenIndex i) { return Word{gen(i)}; }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Largest generator index mentioned, 0 for the empty word.
  GenIndex max_index() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend class WordBuilder;
};

/// Accumulates letters with on-the-fly free reduction.
class WordBuilder {
 public:
  void push(Letter l);
  void append(const Word& w);
  void append_inverse(const Word& w);
  Word build() &&;

 private:
  std::vector<Letter> stack_;
};

using ImageMap = std::map<GenIndex, Word>;

Word reduce(std::span<const Letter> letters);
Word concat(const Word& a, const Word& b);
Word invert_word(const Word& a);

// Replaces x_i by images[x_i] and x_i^-1 by its inverse; generators absent
// from the map are fixed.
Word substitute(const ImageMap& images, const Word& w);

// Grammar: whitespace separated tokens "x<i>" or "x<i>^-1" with i >= 1.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace freecoset
