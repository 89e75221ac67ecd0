#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the public value types they convert to and from.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "kleinbu/braid.hpp"
#include "kleinbu/classifier.hpp"
#include "kleinbu/kernel.hpp"

namespace oracle {

// Free group elements as plain letter lists: +1 = u, -1 = u^-1, +2 = v,
// -2 = v^-1. Reduction by a single stack pass.
using Letters = std::vector<int>;

inline Letters reduce(Letters const& in) {
  Letters out;
  for (int x : in) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

inline Letters concat(Letters a, Letters const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce(a);
}

inline Letters invert(Letters const& a) {
  Letters out;
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Letters power(Letters const& a, std::int64_t n) {
  Letters out;
  Letters const base = n < 0 ? invert(a) : a;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduce(out);
}

inline Letters from_word(kleinbu::Word const& w) {
  Letters out;
  for (auto const& r : w.runs()) {
    int const g = r.gen == kleinbu::Gen::u ? 1 : 2;
    for (std::int64_t i = 0; i < (r.exp < 0 ? -r.exp : r.exp); ++i) out.push_back(r.exp < 0 ? -g : g);
  }
  return out;
}

inline kleinbu::Word to_word(Letters const& a) {
  std::vector<kleinbu::Letter> ls;
  for (int x : a) ls.push_back({x == 1 || x == -1 ? kleinbu::Gen::u : kleinbu::Gen::v, x < 0 ? -1 : 1});
  return kleinbu::Word::from_letters(ls);
}

inline Letters U(std::int64_t e = 1) { return power({1}, e); }
inline Letters V(std::int64_t e = 1) { return power({2}, e); }
inline Letters B(std::int64_t e = 1) { return power({1, 2, 1, -2}, e); }

inline Letters random_letters(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  int const alphabet[] = {1, -1, 2, -2};
  Letters out;
  int const n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(alphabet[pick(rng)]);
  return out;
}

// Z ⋊ Z as pairs (affine map x ↦ m + (-1)^n x, integer n) composed directly.
struct Affine {
  std::int64_t m;
  std::int64_t n;
};

inline std::int64_t sgn_pow(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

inline Affine compose(Affine a, Affine b) {
  // (a ∘ b)(x) = a.m + s_a (b.m + s_b x)
  return {a.m + sgn_pow(a.n) * b.m, a.n + b.n};
}

inline Affine image_of_letters(Letters const& w) {
  Affine acc{0, 0};
  for (int x : w) {
    Affine step{0, 0};
    if (x == 1) step = {1, 0};
    if (x == -1) step = {-1, 0};
    if (x == 2) step = {0, 1};
    if (x == -2) step = {0, -1};
    acc = compose(acc, step);
  }
  return acc;
}

// θ(m, n) by substituting each letter with its generator image (or inverse).
inline Letters theta(std::int64_t m, std::int64_t n, Letters const& w) {
  std::int64_t const d = n % 2 == 0 ? 0 : 1;
  std::int64_t const e = d == 0 ? 1 : -1;
  Letters const u_img = concat(concat(B(m - d), U(e)), B(-m + d));
  Letters const v_img = concat(concat(concat(B(m), V()), U(-2 * m)), B(-m + d));
  Letters out;
  for (int x : w) {
    Letters const& img = (x == 1 || x == -1) ? u_img : v_img;
    out = concat(out, x > 0 ? img : invert(img));
  }
  return out;
}

struct Braid {
  Letters w;
  std::int64_t m;
  std::int64_t n;
};

inline Braid mul(Braid const& a, Braid const& b) {
  Affine const t = compose({a.m, a.n}, {b.m, b.n});
  return {concat(a.w, theta(a.m, a.n, b.w)), t.m, t.n};
}

// l_σ letter by letter from the single-letter rows of its table:
// u ↦ (B u^-1 B^-1; 1, 0), v ↦ ((uv)^-1 u B; 0, 1), (1; m, 0) fixed,
// (1; 0, n) ↦ (B^{δ_n}; 0, n). Inverse letters map to inverse images.
inline Braid inverse(Braid const& a) {
  Affine const ti{-sgn_pow(a.n) * a.m, -a.n};
  return {theta(ti.m, ti.n, invert(a.w)), ti.m, ti.n};
}

inline Braid lsigma(Braid const& a) {
  Braid const lu{concat(concat(B(), U(-1)), B(-1)), 1, 0};
  Braid const lv{concat(invert(concat(U(), V())), concat(U(), B())), 0, 1};
  Braid acc{{}, 0, 0};
  for (int x : a.w) {
    Braid const& img = (x == 1 || x == -1) ? lu : lv;
    acc = mul(acc, x > 0 ? img : inverse(img));
  }
  acc = mul(acc, Braid{{}, a.m, 0});
  acc = mul(acc, Braid{B(a.n % 2 == 0 ? 0 : 1), 0, a.n});
  return acc;
}

inline kleinbu::BraidElt to_braid(Braid const& b) { return {to_word(b.w), {b.m, b.n}}; }
inline Braid from_braid(kleinbu::BraidElt const& b) { return {from_word(b.w), b.t.m, b.t.n}; }

// A kernel word built as a product of conjugates g B^±1 g^-1 together with
// its abelianised class: g ≡ v^n u^{ε_n m} modulo ker g when g(g) = (m, n),
// so the conjugate contributes ±B_{n, ε_n m}.
struct KernelSample {
  kleinbu::Word word;
  kleinbu::KernelVector expected;
};

inline KernelSample random_kernel_word(std::mt19937_64& rng, int factors, int conj_len) {
  Letters w;
  kleinbu::KernelVector v;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < factors; ++i) {
    Letters const g = reduce(random_letters(rng, conj_len));
    int const s = coin(rng) == 0 ? 1 : -1;
    w = concat(w, concat(concat(g, B(s)), invert(g)));
    Affine const t = image_of_letters(g);
    v.add(t.n, sgn_pow(t.n) * t.m, s);
  }
  return {to_word(w), v};
}

// The listed representative with these images, if any.
inline std::optional<kleinbu::HomClass> as_representative(kleinbu::HomDescriptor const& h) {
  auto const [m1, n1] = h.img10;
  auto const [m2, n2] = h.img01;
  auto odd = [](std::int64_t x) { return x % 2 != 0; };
  auto half = [](std::int64_t x) { return x / 2; };
  if (odd(n1) && !odd(n2) && (m1 == 0 || m1 == 1) && m2 == 0) return kleinbu::HomClass::type1(m1, half(n1 - 1), half(n2));
  if (odd(n1) && odd(n2) && (m1 == 0 || m1 == 1) && m2 == m1) return kleinbu::HomClass::type2(m1, half(n1 - 1), half(n2 - 1));
  if (!odd(n1) && odd(n2) && m1 == 0 && (m2 == 0 || m2 == 1)) return kleinbu::HomClass::type3(m2, half(n1), half(n2 - 1));
  if (!odd(n1) && !odd(n2) && m1 >= 0 && (m1 > 0 || m2 >= 0)) return kleinbu::HomClass::type4(m1, m2, half(n1), half(n2));
  return std::nullopt;
}

// All representatives among the conjugates of h by (a, b), |a|, |b| <= R.
inline std::vector<kleinbu::HomClass> conjugate_representatives(kleinbu::HomDescriptor const& h, std::int64_t R) {
  std::vector<kleinbu::HomClass> out;
  for (std::int64_t a = -R; a <= R; ++a) {
    for (std::int64_t b = -R; b <= R; ++b) {
      Affine const g{a, b};
      Affine const gi{-sgn_pow(b) * a, -b};
      auto conj = [&](kleinbu::KleinElt x) {
        Affine const r = compose(compose(g, {x.m, x.n}), gi);
        return kleinbu::KleinElt{r.m, r.n};
      };
      if (auto c = as_representative({conj(h.img10), conj(h.img01)})) {
        if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
      }
    }
  }
  return out;
}

}  // namespace oracle
