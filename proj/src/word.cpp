#include "freecoset/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "freecoset/errors.hpp"

namespace freecoset {

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word::Word(std::span<const Letter> letters) {
  WordBuilder b;
  for (Letter l : letters) b.push(l);
  *this = std::move(b).build();
}

GenIndex Word::max_index() const {
  GenIndex m = 0;
  for (Letter l : letters_) m = std::max(m, l.gen);
  return m;
}

void WordBuilder::push(Letter l) {
  if (!stack_.empty() && stack_.back().cancels(l))
    stack_.pop_back();
  else
    stack_.push_back(l);
}

void WordBuilder::append(const Word& w) {
  for (Letter l : w) push(l);
}

void WordBuilder::append_inverse(const Word& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(it->inverse());
}

Word WordBuilder::build() && { return Word(Word::Reduced{}, std::move(stack_)); }

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Word concat(const Word& a, const Word& b) {
  WordBuilder out;
  out.append(a);
  out.append(b);
  return std::move(out).build();
}

Word invert_word(const Word& a) {
  WordBuilder out;
  out.append_inverse(a);
  return std::move(out).build();
}

Word substitute(const ImageMap& images, const Word& w) {
  WordBuilder out;
  for (Letter l : w) {
    auto it = images.find(l.gen);
    if (it == images.end())
      out.push(l);
    else if (l.sign == Sign::Plus)
      out.append(it->second);
    else
      out.append_inverse(it->second);
  }
  return std::move(out).build();
}

namespace {

Letter parse_token(std::string_view tok) {
  auto fail = [&] { throw SyntaxError("malformed word token '" + std::string(tok) + "'"); };
  if (tok.size() < 2 || tok[0] != 'x') fail();
  std::string_view body = tok.substr(1);
  Sign sign = Sign::Plus;
  if (auto caret = body.find('^'); caret != std::string_view::npos) {
    if (body.substr(caret) != "^-1") fail();
    body = body.substr(0, caret);
    sign = Sign::Minus;
  }
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail();
  GenIndex idx = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), idx);
  if (ec != std::errc{} || ptr != body.data() + body.size()) fail();
  if (idx == 0) throw SyntaxError("generator index must be >= 1 in '" + std::string(tok) + "'");
  return {idx, sign};
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    if (pos > start) letters.push_back(parse_token(text.substr(start, pos - start)));
  }
  return reduce(letters);
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (Letter l : w) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << l.gen;
    if (l.sign == Sign::Minus) os << "^-1";
  }
  return os.str();
}

}  // namespace freecoset
