#pragma once

// Reduced words in the free group F(u, v), stored run-length encoded.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kleinbu {

enum class Gen : std::uint8_t { u = 0, v = 1 };

/// A maximal run gen^exp inside a reduced word; exp is never zero.
struct Letter {
  Gen gen;
  std::int64_t exp;

  friend bool operator==(Letter const&, Letter const&) = default;
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

/// An element of F(u, v) in fully reduced, maximally merged form: adjacent runs
/// always have distinct generators and no run has exponent zero. The empty word
/// is the identity. Two words are equal as group elements iff they compare
/// equal.
class Word {
 public:
  Word() = default;

  static Word gen(Gen g, std::int64_t exp = 1);
  static Word u(std::int64_t exp = 1) { return gen(Gen::u, exp); }
  static Word v(std::int64_t exp = 1) { return gen(Gen::v, exp); }

  /// Reduces an arbitrary letter sequence (zero exponents allowed).
  static Word from_letters(std::span<Letter const> letters);

  std::span<Letter const> runs() const noexcept { return runs_; }
  bool is_identity() const noexcept { return runs_.empty(); }
  std::size_t num_runs() const noexcept { return runs_.size(); }

  /// Number of letters u^{±1}, v^{±1} in the reduced word.
  std::uint64_t length() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t n) const;

  Word& operator*=(Word const& rhs);
  friend Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Appends gen^exp and reduces against the current tail.
  void push(Gen g, std::int64_t exp);

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<Letter> runs_;
};

Word mul(Word const& x, Word const& y);
Word inv(Word const& x);
/// t x t^-1
Word conj(Word const& t, Word const& x);
/// x y x^-1 y^-1
Word comm(Word const& x, Word const& y);
Word pow(Word const& x, std::int64_t n);

/// The word u v u v^-1.
Word const& big_b();

/// Parses `word := term* ; term := ("u"|"v"|"B"|"1") ("^" integer)?`.
/// Whitespace between terms is optional. Throws ParseError.
Word parse_word(std::string_view text);

/// Canonical form: runs separated by single spaces, exponent 1 omitted,
/// other exponents written with a caret ("u^2 v^-1"). The identity is "1".
std::string format(Word const& w);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

}  // namespace kleinbu
