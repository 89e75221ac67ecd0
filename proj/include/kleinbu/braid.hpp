#pragma once

// The pure braid group P_2(K^2) realised as F(u, v) ⋊_θ (Z ⋊ Z).

#include <cstdint>
#include <string>
#include <string_view>

#include "kleinbu/klein.hpp"
#include "kleinbu/word.hpp"

namespace kleinbu {

/// The pure braid (w; m, n).
struct BraidElt {
  Word w;
  KleinElt t;

  friend bool operator==(BraidElt const&, BraidElt const&) = default;
};

/// The automorphism θ(m, n) of F(u, v):
///   u ↦ B^{m-δ_n} u^{ε_n} B^{-m+δ_n},
///   v ↦ B^m v u^{-2m} B^{-m+δ_n}.
/// Depends on n only through its parity.
Word theta(KleinElt t, Word const& w);

BraidElt bmul(BraidElt const& a, BraidElt const& b);
BraidElt binv(BraidElt const& a);
BraidElt bpow(BraidElt const& a, std::int64_t k);

inline BraidElt operator*(BraidElt const& a, BraidElt const& b) { return bmul(a, b); }

/// (B; 0, 0), the square of the Artin generator σ.
BraidElt sigma_squared();

/// Conjugation by σ. Evaluated run by run from the tabulated images of
/// (u^r; 0, 0), (v^s; 0, 0), (1; m, 0) and (1; 0, n), then multiplied out.
BraidElt lsigma(BraidElt const& a);

/// The homomorphism g: F(u, v) → Z ⋊ Z with g(u) = (1, 0), g(v) = (0, 1).
KleinElt gmap(Word const& w);

/// First component of lsigma((w; 0, 0)). Throws ConsistencyError if the second
/// component disagrees with gmap(w).
Word rho(Word const& w);

inline KleinElt p1(BraidElt const& a) { return a.t; }
inline Word const& p_f(BraidElt const& a) { return a.w; }

/// w = u^r v^s x with x ∈ ker g.
struct Decomposition {
  std::int64_t r = 0;
  std::int64_t s = 0;
  Word x;

  friend bool operator==(Decomposition const&, Decomposition const&) = default;
};

Decomposition decompose(Word const& w);

/// b·l_σ(a) evaluated from the normal forms of a and b by the closed formula
/// (not via lsigma on the full element).
BraidElt formula_b_lsigma_a(BraidElt const& a, BraidElt const& b);

/// a·b·l_σ(a) evaluated by the closed formula.
BraidElt formula_a_b_lsigma_a(BraidElt const& a, BraidElt const& b);

/// The exponents (a_1, a_2) of a's normal form forced by a·b·l_σ(a) = b:
///   a_1 = ε_{n_2} m_2 (ε_{n_1} - 1) - m_1 (1 + ε_{n_1+n_2}),  a_2 = -2 n_1.
struct ForcedExponents {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  friend bool operator==(ForcedExponents const&, ForcedExponents const&) = default;
};

ForcedExponents forced_exponents(BraidElt const& a, BraidElt const& b);

/// "(<word>;m,n)"
std::string format(BraidElt const& a);
/// Parses "(<word> ; m , n)". Throws ParseError.
BraidElt parse_braid(std::string_view text);

}  // namespace kleinbu
