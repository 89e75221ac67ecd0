#include "kleinbu/kernel.hpp"

#include <cctype>
#include <charconv>

#include "kleinbu/braid.hpp"
#include "kleinbu/errors.hpp"

namespace kleinbu {

// ---------------------------------------------------------------------------
// KernelVector

KernelVector KernelVector::unit(std::int64_t k, std::int64_t l, std::int64_t c) {
  KernelVector v;
  v.add(k, l, c);
  return v;
}

void KernelVector::add(BasisIndex b, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

std::int64_t KernelVector::coefficient(std::int64_t k, std::int64_t l) const {
  auto it = coeffs_.find({k, l});
  return it == coeffs_.end() ? 0 : it->second;
}

KernelVector& KernelVector::operator+=(KernelVector const& rhs) {
  for (auto const& [b, c] : rhs.coeffs_) add(b, c);
  return *this;
}

KernelVector& KernelVector::operator-=(KernelVector const& rhs) {
  for (auto const& [b, c] : rhs.coeffs_) add(b, -c);
  return *this;
}

KernelVector& KernelVector::operator*=(std::int64_t s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [b, c] : coeffs_) c *= s;
  return *this;
}

std::string format(KernelVector const& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (auto const& [b, c] : v) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(b.k) + "," + std::to_string(b.l) + "):" + std::to_string(c);
  }
  return out;
}

KernelVector parse_kernel_vector(std::string_view text) {
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

  KernelVector v;
  skip();
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("trailing input after zero vector", pos);
    return v;
  }
  while (true) {
    skip();
    if (pos == text.size()) break;
    expect('(');
    std::int64_t const k = integer();
    expect(',');
    std::int64_t const l = integer();
    expect(')');
    expect(':');
    v.add(k, l, integer());
  }
  return v;
}

// ---------------------------------------------------------------------------
// LinearOp

LinearOp LinearOp::identity() {
  return LinearOp([](BasisIndex b) { return KernelVector::unit(b.k, b.l); });
}

LinearOp LinearOp::zero() {
  return LinearOp([](BasisIndex) { return KernelVector{}; });
}

KernelVector LinearOp::operator()(KernelVector const& v) const {
  KernelVector out;
  for (auto const& [b, c] : v) out += c * on_basis_(b);
  return out;
}

LinearOp operator+(LinearOp const& f, LinearOp const& g) {
  return LinearOp([f, g](BasisIndex b) { return f.on_basis(b) + g.on_basis(b); });
}

LinearOp operator-(LinearOp const& f, LinearOp const& g) {
  return LinearOp([f, g](BasisIndex b) { return f.on_basis(b) - g.on_basis(b); });
}

LinearOp compose(LinearOp const& f, LinearOp const& g) {
  return LinearOp([f, g](BasisIndex b) { return f(g.on_basis(b)); });
}

// ---------------------------------------------------------------------------
// Words and projection

Word expand(std::int64_t k, std::int64_t l) {
  return c_word(k, l, big_b());
}

Word c_word(std::int64_t p, std::int64_t q, Word const& x) {
  return conj(Word::v(p) * Word::u(q), x);
}

namespace {

// Schreier generator v^n Q_{k,0} v^-n for the transversal {v^n u^{ε_n m}},
// abelianised: σ_k Σ_{i=1}^{|k|} B_{n, σ_k i - (1+σ_k)/2} with k = ε_n m.
void emit_v_crossing(KernelVector& acc, std::int64_t m, std::int64_t n, std::int64_t sign_out) {
  std::int64_t const k = eps(n) * m;
  if (k > 0) {
    for (std::int64_t l = 0; l < k; ++l) acc.add(n, l, sign_out);
  } else {
    for (std::int64_t l = -1; l >= k; --l) acc.add(n, l, -sign_out);
  }
}

}  // namespace

KernelVector project(Word const& w) {
  KleinElt const g = gmap(w);
  if (g != KleinElt{0, 0}) {
    throw PreconditionError("word " + format(w) + " is not in ker g (g = " + format(g) + ")");
  }
  KernelVector acc;
  std::int64_t m = 0;
  std::int64_t n = 0;
  for (auto const& letter : w.runs()) {
    if (letter.gen == Gen::u) {
      m += eps(n) * letter.exp;
      continue;
    }
    if (letter.exp > 0) {
      for (std::int64_t i = 0; i < letter.exp; ++i) emit_v_crossing(acc, m, n++, 1);
    } else {
      for (std::int64_t i = 0; i < -letter.exp; ++i) emit_v_crossing(acc, m, --n, -1);
    }
  }
  return acc;
}

LinearOp theta_ab(KleinElt t) {
  return LinearOp([t](BasisIndex b) {
    return KernelVector::unit(b.k, eps(t.n) * b.l - 2 * delta(b.k) * t.m, eps(t.n));
  });
}

LinearOp rho_ab() {
  return LinearOp([](BasisIndex b) { return KernelVector::unit(-b.k, eps(b.k + 1) * b.l, eps(b.k)); });
}

LinearOp c_ab(std::int64_t p, std::int64_t q) {
  return LinearOp([p, q](BasisIndex b) { return KernelVector::unit(b.k + p, b.l + eps(b.k) * q); });
}

KernelVector theta_ab(KleinElt t, KernelVector const& v) { return theta_ab(t)(v); }
KernelVector rho_ab(KernelVector const& v) { return rho_ab()(v); }
KernelVector c_ab(std::int64_t p, std::int64_t q, KernelVector const& v) { return c_ab(p, q)(v); }

bool conjugation_agrees(std::int64_t p, std::int64_t q, Word const& x) {
  return project(c_word(p, q, x)) == c_ab(p, q, project(x));
}

// ---------------------------------------------------------------------------
// Special words

Word word_t(std::int64_t k, std::int64_t r) {
  if (r != 0 && r != 1) throw PreconditionError("T_{k,r} requires r in {0,1}");
  std::int64_t const e = eps(r);
  return Word::u(k) * (big_b().pow(e) * Word::u(-e)).pow(k * e);
}

Word word_i(std::int64_t k) { return Word::v(k) * (Word::v() * big_b()).pow(-k); }

Word word_o(std::int64_t k, std::int64_t l) { return comm(Word::v(2 * k), Word::u(l)); }

Word word_j(std::int64_t k, std::int64_t l) {
  return Word::v(2 * k) * (Word::v() * Word::u(l)).pow(-2 * k);
}

Word word_q(std::int64_t k, std::int64_t l) {
  return Word::u(k) * Word::v(2 * l + 1) * Word::u(k) * Word::v(-2 * l - 1);
}

// ---------------------------------------------------------------------------
// Closed forms. Each sum runs over i = 1..|k| (and j = 1..|l|); with σ = ±1 the
// half-integer offsets (1-σ)/2, (1+σ)/2, (σ-1)/2 are exact.

KernelVector tilde_t(std::int64_t k, std::int64_t r) {
  if (r != 0 && r != 1) throw PreconditionError("T_{k,r} requires r in {0,1}");
  KernelVector out;
  std::int64_t const s = sign(k);
  for (std::int64_t i = 1; i <= s * k; ++i) out.add(0, s * (i + (s * (1 - 2 * r) - 1) / 2), s);
  return out;
}

KernelVector tilde_i(std::int64_t k) {
  KernelVector out;
  std::int64_t const s = sign(k);
  for (std::int64_t i = 1; i <= s * k; ++i) out.add(s * i + (1 - s) / 2, 0, -s);
  return out;
}

KernelVector tilde_o(std::int64_t k, std::int64_t l) {
  KernelVector out;
  std::int64_t const sk = sign(k);
  std::int64_t const sl = sign(l);
  for (std::int64_t i = 1; i <= sk * k; ++i) {
    for (std::int64_t j = 1; j <= sl * l; ++j) {
      out.add(sk * (2 * i - 1), -sl * j + (sl - 1) / 2, sk * sl);
      out.add(sk * (2 * i - 1) - 1, sl * j - (1 + sl) / 2, -sk * sl);
    }
  }
  return out;
}

KernelVector tilde_j(std::int64_t k, std::int64_t l) {
  KernelVector out;
  std::int64_t const sk = sign(k);
  std::int64_t const sl = sign(l);
  for (std::int64_t i = 1; i <= sk * k; ++i) {
    for (std::int64_t j = 1; j <= sl * l; ++j) {
      out.add(sk * (2 * i - 1), sl * (j - (1 + sl) / 2), -sk * sl);
    }
  }
  return out;
}

KernelVector tilde_q(std::int64_t k, std::int64_t l) {
  if (k == 0) return {};
  std::int64_t const s = sign(k);
  KernelVector out = -tilde_o(l, k);
  for (std::int64_t i = 1; i <= s * k; ++i) out.add(2 * l, s * i - (1 + s) / 2, s);
  return out;
}

}  // namespace kleinbu
