#include "kleinbu/klein.hpp"

#include <cctype>
#include <charconv>

#include "kleinbu/errors.hpp"

namespace kleinbu {

KleinElt kpow(KleinElt a, std::int64_t k) noexcept {
  // a^2 = (m + eps(n) m, 2n), so odd-n elements square to (0, 2n).
  KleinElt base = k < 0 ? a.inverse() : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  KleinElt result{};
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    base = base * base;
  }
  return result;
}

std::string format(KleinElt a) {
  return "(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '+') start = ++pos_;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + text_.size(), value_);
    if (ec != std::errc()) throw ParseError("expected integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::int64_t value_ = 0;
};

}  // namespace

KleinElt parse_klein(std::string_view text) {
  Cursor cur(text);
  cur.expect('(');
  KleinElt a;
  a.m = cur.integer();
  cur.expect(',');
  a.n = cur.integer();
  cur.expect(')');
  if (!cur.at_end()) throw ParseError("trailing input after Klein element", cur.pos());
  return a;
}

}  // namespace kleinbu
