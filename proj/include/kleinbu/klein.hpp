#pragma once

// The fundamental group of the Klein bottle, Z ⋊ Z, with product
// (m, n)(m', n') = (m + (-1)^n m', n + n'), and the integer gadgets used
// throughout the braid computations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace kleinbu {

/// 0 if n is even, 1 if n is odd.
constexpr std::int64_t delta(std::int64_t n) noexcept { return n % 2 == 0 ? 0 : 1; }
/// (-1)^n
constexpr std::int64_t eps(std::int64_t n) noexcept { return n % 2 == 0 ? 1 : -1; }
constexpr std::int64_t sign(std::int64_t l) noexcept { return (l > 0) - (l < 0); }
/// 1 if n == 0, else 0.
constexpr std::int64_t omega(std::int64_t n) noexcept { return n == 0 ? 1 : 0; }

/// Floor-mod into [0, modulus); modulus must be positive.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t modulus) noexcept {
  std::int64_t r = a % modulus;
  return r < 0 ? r + modulus : r;
}

struct KleinElt {
  std::int64_t m = 0;
  std::int64_t n = 0;

  KleinElt inverse() const noexcept { return {-eps(n) * m, -n}; }

  friend constexpr KleinElt operator*(KleinElt a, KleinElt b) noexcept {
    return {a.m + eps(a.n) * b.m, a.n + b.n};
  }
  friend bool operator==(KleinElt const&, KleinElt const&) = default;
  friend auto operator<=>(KleinElt const&, KleinElt const&) = default;
};

inline KleinElt kmul(KleinElt a, KleinElt b) noexcept { return a * b; }
inline KleinElt kinv(KleinElt a) noexcept { return a.inverse(); }
KleinElt kpow(KleinElt a, std::int64_t k) noexcept;

/// Inclusion Z ⊕ Z → Z ⋊ Z induced by the double cover: (p, q) ↦ (p, 2q).
constexpr KleinElt i2(std::int64_t p, std::int64_t q) noexcept { return {p, 2 * q}; }
/// The quotient Z ⋊ Z → Z_2, (m, n) ↦ n mod 2.
constexpr std::int64_t theta2(KleinElt a) noexcept { return delta(a.n); }

/// "(m,n)"
std::string format(KleinElt a);
/// Accepts "(m,n)" with optional whitespace. Throws ParseError.
KleinElt parse_klein(std::string_view text);

struct KleinHash {
  std::size_t operator()(KleinElt a) const noexcept {
    return static_cast<std::size_t>(a.m) * 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(a.n);
  }
};

}  // namespace kleinbu
