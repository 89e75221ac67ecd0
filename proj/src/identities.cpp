#include "kleinbu/identities.hpp"

#include "kleinbu/errors.hpp"
#include "kleinbu/kernel.hpp"
#include "kleinbu/klein.hpp"

namespace kleinbu {

DerivedExponents derive(MasterParams const& p) {
  if ((p.i != 0 && p.i != 1) || (p.j != 0 && p.j != 1)) {
    throw PreconditionError("parity parameters i and j must be 0 or 1");
  }
  std::int64_t const d = delta(p.i + 1) * delta(p.j + 1);
  DerivedExponents e{};
  e.m1 = d * p.r1;
  e.a1 = -2 * (d * delta(p.n + 1) * p.r1 + delta(p.i) * eps(p.n) * p.m);
  e.a2 = -4 * p.s1 - 2 * p.i;
  e.b1 = d * eps(p.n) * p.r2 + 2 * delta(p.j + p.n + 1) * eps(p.j + 1) * p.m;
  e.b2 = 2 * p.s2 - 2 * p.n + p.j;
  e.g = d * p.r1 + eps(p.i) * p.m + eps(p.n + p.i) * e.a1;
  return e;
}

bool q_identity_check(std::int64_t k, std::int64_t l) {
  if (k == 0) throw PreconditionError("q_identity_check requires k != 0");
  std::int64_t const s = sign(k);
  Word product;
  for (std::int64_t i = 1; i <= s * k; ++i) product *= expand(2 * l, -i + k * (1 + s) / 2);
  return word_q(k, l) == word_o(l, k).inverse() * product.pow(s);
}

bool oq_merge_identity(MasterParams const& p) {
  DerivedExponents const e = derive(p);
  Word const lhs =
      word_o(p.s2 - p.n, 2 * delta(p.i) * p.m - 2 * delta(p.i + 1) * delta(p.n + 1) * p.r1)
          .pow(-delta(p.j + 1)) *
      word_q(-2 * delta(p.i) * p.m, p.s2 - p.n).pow(delta(p.j));
  Word const rhs = Word::u(e.a1 - e.b1 + eps(p.i) * e.b1) * Word::v(e.b2) *
                   Word::u(-e.a1 * eps(p.n + p.i)) * Word::v(-e.b2);
  return lhs == rhs;
}

bool ji_merge_identity(MasterParams const& p) {
  DerivedExponents const e = derive(p);
  Word const lhs = word_j(delta(p.i + 1) * (p.n - p.s2), -2 * e.m1) *
                   c_word(-1, 0, word_i(-delta(p.i) * e.b2));
  Word const rhs =
      Word::v(-e.b2) * (big_b().pow(delta(p.i)) * Word::v() * Word::u(-2 * e.m1)).pow(e.b2);
  return lhs == rhs;
}

bool t_collection_identity(MasterParams const& p) {
  DerivedExponents const e = derive(p);
  std::int64_t const k = e.a1 * eps(p.n + p.i);
  Word const lhs = word_t(k, delta(p.n + p.i));
  Word const rhs =
      Word::u(k) * (big_b().pow(eps(p.n + p.i)) * Word::u(eps(p.n + p.i + 1))).pow(e.a1);
  return lhs == rhs;
}

bool oj_collection_identity(MasterParams const& p) {
  DerivedExponents const e = derive(p);
  std::int64_t const h = e.a2 / 2;  // a2 = -4 s1 - 2 i is always even
  std::int64_t const d = delta(p.n + p.i + 1);
  Word const lhs = word_o(h, d) * c_word(0, d, word_j(h, 1 - 2 * e.g));
  Word const inner = big_b().pow(delta(p.n + p.i)) * Word::v() * Word::u(-2 * e.g);
  Word const rhs = Word::v(e.a2) * (big_b().pow(eps(p.n + p.i)) * inner.pow(2)).pow(-h);
  return lhs == rhs;
}

}  // namespace kleinbu
