#include "kleinbu/braid.hpp"

#include <cctype>
#include <charconv>

#include "kleinbu/errors.hpp"

namespace kleinbu {

namespace {

Word const& bb() { return big_b(); }

// θ(t) applied to the single run g^e.
Word theta_run(KleinElt t, Gen g, std::int64_t e) {
  std::int64_t const d = delta(t.n);
  if (g == Gen::u) {
    // B^{m-δ} u^{ε e} B^{-(m-δ)}
    Word const c = bb().pow(t.m - d);
    return c * Word::u(eps(t.n) * e) * c.inverse();
  }
  // (B^m v u^{-2m} B^{-m+δ})^e = B^m (v u^{-2m} B^δ)^e B^{-m}
  Word core = Word::v() * Word::u(-2 * t.m) * bb().pow(d);
  Word const c = bb().pow(t.m);
  return c * core.pow(e) * c.inverse();
}

// l_σ(u^r; 0, 0) = ((B u^-1)^r B^-r; r, 0)
BraidElt lsigma_u_run(std::int64_t r) {
  return {(bb() * Word::u(-1)).pow(r) * bb().pow(-r), {r, 0}};
}

// l_σ(v^s; 0, 0) = ((u v)^-s (u B)^{δ_s}; 0, s)
BraidElt lsigma_v_run(std::int64_t s) {
  return {(Word::u() * Word::v()).pow(-s) * (Word::u() * bb()).pow(delta(s)), {0, s}};
}

// Accumulates a left-to-right product of braids without materialising each
// partial product twice.
class BraidProduct {
 public:
  BraidProduct& operator*=(BraidElt const& f) {
    acc_.w *= theta(acc_.t, f.w);
    acc_.t = acc_.t * f.t;
    return *this;
  }
  BraidElt const& value() const { return acc_; }

 private:
  BraidElt acc_;
};

}  // namespace

Word theta(KleinElt t, Word const& w) {
  if (t.m == 0 && delta(t.n) == 0) return w;
  Word out;
  for (auto const& l : w.runs()) out *= theta_run(t, l.gen, l.exp);
  return out;
}

BraidElt bmul(BraidElt const& a, BraidElt const& b) {
  return {a.w * theta(a.t, b.w), a.t * b.t};
}

BraidElt binv(BraidElt const& a) {
  KleinElt const ti = a.t.inverse();
  return {theta(ti, a.w.inverse()), ti};
}

BraidElt bpow(BraidElt const& a, std::int64_t k) {
  BraidElt base = k < 0 ? binv(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  BraidElt result;
  while (e != 0) {
    if (e & 1U) result = bmul(result, base);
    e >>= 1U;
    if (e != 0) base = bmul(base, base);
  }
  return result;
}

BraidElt sigma_squared() { return {bb(), {0, 0}}; }

BraidElt lsigma(BraidElt const& a) {
  BraidProduct prod;
  for (auto const& l : a.w.runs()) {
    prod *= l.gen == Gen::u ? lsigma_u_run(l.exp) : lsigma_v_run(l.exp);
  }
  // (1; m, n) = (1; m, 0)(1; 0, n); l_σ fixes the first and sends the second
  // to (B^{δ_n}; 0, n).
  prod *= BraidElt{Word{}, {a.t.m, 0}};
  prod *= BraidElt{bb().pow(delta(a.t.n)), {0, a.t.n}};
  return prod.value();
}

KleinElt gmap(Word const& w) {
  KleinElt t;
  for (auto const& l : w.runs()) {
    t = t * (l.gen == Gen::u ? KleinElt{l.exp, 0} : KleinElt{0, l.exp});
  }
  return t;
}

Word rho(Word const& w) {
  BraidElt img = lsigma({w, {0, 0}});
  if (img.t != gmap(w)) {
    throw ConsistencyError("l_sigma twist " + format(img.t) + " differs from g(w) = " +
                           format(gmap(w)) + " for w = " + format(w));
  }
  return std::move(img.w);
}

Decomposition decompose(Word const& w) {
  KleinElt const g = gmap(w);
  return {g.m, g.n, Word::v(-g.n) * Word::u(-g.m) * w};
}

namespace {

struct NormalForm {
  std::int64_t e1;  // exponent of u
  std::int64_t e2;  // exponent of v
  Word rest;        // kernel part
  std::int64_t m;
  std::int64_t n;
};

NormalForm normal_form(BraidElt const& a) {
  Decomposition d = decompose(a.w);
  return {d.r, d.s, std::move(d.x), a.t.m, a.t.n};
}

Word u_pow(std::int64_t e) { return Word::u(e); }
Word v_pow(std::int64_t e) { return Word::v(e); }

// (B u^-1)^{a1} B^{-a1}
Word u_image_word(std::int64_t a1) { return (bb() * Word::u(-1)).pow(a1) * bb().pow(-a1); }
// (u v)^{-a2} (u B)^{δ_{a2}}
Word v_image_word(std::int64_t a2) {
  return (Word::u() * Word::v()).pow(-a2) * (Word::u() * bb()).pow(delta(a2));
}

}  // namespace

BraidElt formula_b_lsigma_a(BraidElt const& a, BraidElt const& b) {
  NormalForm const A = normal_form(a);
  NormalForm const B = normal_form(b);
  std::int64_t const shifted = B.m + eps(B.n) * A.e1;
  Word w = u_pow(B.e1) * v_pow(B.e2) * B.rest;
  w *= theta({B.m, delta(B.n)}, u_image_word(A.e1));
  w *= theta({shifted, delta(B.n)}, v_image_word(A.e2));
  w *= theta({shifted, delta(B.n) + delta(A.e2)}, rho(A.rest) * bb().pow(delta(A.n)));
  return {std::move(w),
          {B.m + eps(B.n) * (A.e1 + eps(delta(A.e2)) * A.m), A.e2 + A.n + B.n}};
}

BraidElt formula_a_b_lsigma_a(BraidElt const& a, BraidElt const& b) {
  NormalForm const A = normal_form(a);
  NormalForm const B = normal_form(b);
  Word inner = v_image_word(A.e2) * theta({0, delta(A.e2)}, rho(A.rest) * bb().pow(delta(A.n)));
  inner = u_image_word(A.e1) * theta({A.e1, 0}, inner);
  Word w = u_pow(A.e1) * v_pow(A.e2) * A.rest;
  w *= theta({A.m, delta(A.n)}, u_pow(B.e1) * v_pow(B.e2) * B.rest);
  w *= theta({A.m + eps(A.n) * B.m, delta(A.n + B.n)}, inner);
  return {std::move(w),
          {A.m + eps(A.n) * B.m + eps(A.n + B.n) * (A.e1 + eps(A.e2) * A.m),
           2 * A.n + B.n + A.e2}};
}

ForcedExponents forced_exponents(BraidElt const& a, BraidElt const& b) {
  auto const [m1, n1] = a.t;
  auto const [m2, n2] = b.t;
  return {eps(n2) * m2 * (eps(n1) - 1) - m1 * (1 + eps(n1 + n2)), -2 * n1};
}

std::string format(BraidElt const& a) {
  return "(" + format(a.w) + ";" + std::to_string(a.t.m) + "," + std::to_string(a.t.n) + ")";
}

BraidElt parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto integer = [&] {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '+') start = ++pos;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected integer", start);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  expect('(');
  std::size_t const semi = text.find(';', pos);
  if (semi == std::string_view::npos) throw ParseError("expected ';'", text.size());
  BraidElt out;
  try {
    out.w = parse_word(text.substr(pos, semi - pos));
  } catch (ParseError const& e) {
    throw ParseError("invalid word in braid: " + e.detail(), pos + e.position());
  }
  pos = semi + 1;
  out.t.m = integer();
  expect(',');
  out.t.n = integer();
  expect(')');
  skip();
  if (pos != text.size()) throw ParseError("trailing input after braid", pos);
  return out;
}

}  // namespace kleinbu
