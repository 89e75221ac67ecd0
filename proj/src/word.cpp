#include "kleinbu/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "kleinbu/errors.hpp"

namespace kleinbu {

Word Word::gen(Gen g, std::int64_t exp) {
  Word w;
  w.push(g, exp);
  return w;
}

Word Word::from_letters(std::span<Letter const> letters) {
  Word w;
  for (auto const& l : letters) w.push(l.gen, l.exp);
  return w;
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t n = 0;
  for (auto const& l : runs_) n += static_cast<std::uint64_t>(std::llabs(l.exp));
  return n;
}

void Word::push(Gen g, std::int64_t exp) {
  if (exp == 0) return;
  if (!runs_.empty() && runs_.back().gen == g) {
    runs_.back().exp += exp;
    if (runs_.back().exp == 0) runs_.pop_back();
    return;
  }
  runs_.push_back({g, exp});
}

Word& Word::operator*=(Word const& rhs) {
  // Cancellation can only cascade through the junction, so pushing the
  // right-hand runs one at a time keeps the result reduced.
  auto it = rhs.runs_.begin();
  while (it != rhs.runs_.end() && !runs_.empty() && runs_.back().gen == it->gen) {
    runs_.back().exp += it->exp;
    if (runs_.back().exp != 0) {
      ++it;
      break;
    }
    runs_.pop_back();
    ++it;
  }
  runs_.insert(runs_.end(), it, rhs.runs_.end());
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
    w.runs_.push_back({it->gen, -it->exp});
  }
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || is_identity()) return {};
  if (runs_.size() == 1) return gen(runs_[0].gen, runs_[0].exp * n);
  Word base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Word result;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= Word(base);
  }
  return result;
}

Word mul(Word const& x, Word const& y) { return x * y; }
Word inv(Word const& x) { return x.inverse(); }
Word conj(Word const& t, Word const& x) { return t * x * t.inverse(); }
Word comm(Word const& x, Word const& y) { return x * y * x.inverse() * y.inverse(); }
Word pow(Word const& x, std::int64_t n) { return x.pow(n); }

Word const& big_b() {
  static Word const b = Word::u() * Word::v() * Word::u() * Word::v(-1);
  return b;
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    char const c = text[pos];
    if (c != 'u' && c != 'v' && c != 'B' && c != '1') {
      throw ParseError(std::string("unexpected character '") + c + "' in word", pos);
    }
    ++pos;
    std::int64_t exp = 1;
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space(text, pos);
      std::size_t num_start = pos;
      if (pos < text.size() && text[pos] == '+') num_start = ++pos;
      auto const* first = text.data() + num_start;
      auto const* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, exp);
      if (ec == std::errc::result_out_of_range) throw ParseError("exponent out of range", num_start);
      if (ec != std::errc()) throw ParseError("expected integer exponent", num_start);
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    switch (c) {
      case 'u': w.push(Gen::u, exp); break;
      case 'v': w.push(Gen::v, exp); break;
      case 'B': w *= big_b().pow(exp); break;
      default: break;  // "1", any power of it is the identity
    }
    skip_space(text, pos);
  }
  return w;
}

std::string format(Word const& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (auto const& l : w.runs()) {
    if (!out.empty()) out += ' ';
    out += l.gen == Gen::u ? 'u' : 'v';
    if (l.exp != 1) {
      out += '^';
      out += std::to_string(l.exp);
    }
  }
  return out;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto const& l : w.runs()) {
    auto const x = static_cast<std::uint64_t>(l.exp) * 2 + static_cast<std::uint64_t>(l.gen);
    h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace kleinbu
