#include <gtest/gtest.h>

#include <random>

#include "kleinbu/braid.hpp"
#include "kleinbu/errors.hpp"
#include "oracles.hpp"

using namespace kleinbu;

namespace {

Word w(char const* s) { return parse_word(s); }
BraidElt br(char const* s) { return parse_braid(s); }

BraidElt random_braid(std::mt19937_64& rng, int len = 8, int coord = 3) {
  std::uniform_int_distribution<std::int64_t> c(-coord, coord);
  return {oracle::to_word(oracle::random_letters(rng, len)), {c(rng), c(rng)}};
}

}  // namespace

TEST(Braid, ThetaExamples) {
  EXPECT_EQ(theta({0, 0}, w("u v^-2 B")), w("u v^-2 B"));
  EXPECT_EQ(theta({1, 0}, w("u")), w("B u B^-1"));
  EXPECT_EQ(theta({2, 1}, big_b()), inv(big_b()));
}

TEST(Braid, ThetaMatchesLetterwiseOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    auto const letters = oracle::random_letters(rng, 10);
    std::uniform_int_distribution<std::int64_t> c(-4, 4);
    std::int64_t const m = c(rng);
    std::int64_t const n = c(rng);
    EXPECT_EQ(theta({m, n}, oracle::to_word(letters)), oracle::to_word(oracle::theta(m, n, letters)));
  }
}

TEST(Braid, ThetaIsAnAction) {
  std::mt19937_64 rng(19);
  for (std::int64_t m = -3; m <= 3; ++m) {
    for (std::int64_t n = -3; n <= 3; ++n) {
      for (std::int64_t p = -3; p <= 3; ++p) {
        for (std::int64_t q = -3; q <= 3; ++q) {
          Word const x = oracle::to_word(oracle::random_letters(rng, 6));
          KleinElt const t{m, n};
          KleinElt const s{p, q};
          EXPECT_EQ(theta(t * s, x), theta(t, theta(s, x)));
        }
      }
    }
  }
}

TEST(Braid, ThetaIsAnAutomorphism) {
  std::mt19937_64 rng(23);
  for (std::int64_t m = -4; m <= 4; ++m) {
    for (std::int64_t n = -4; n <= 4; ++n) {
      EXPECT_EQ(theta({m, n}, big_b()), pow(big_b(), eps(n)));
      EXPECT_TRUE(theta({m, n}, Word{}).is_identity());
      Word const x = oracle::to_word(oracle::random_letters(rng, 8));
      Word const y = oracle::to_word(oracle::random_letters(rng, 8));
      EXPECT_EQ(theta({m, n}, x * y), theta({m, n}, x) * theta({m, n}, y));
      EXPECT_EQ(theta(KleinElt{m, n}.inverse(), theta({m, n}, x)), x);
    }
  }
}

TEST(Braid, ProductExamples) {
  EXPECT_EQ(br("(u v;0,0)") * br("(1;2,-3)"), br("(u v;2,-3)"));
  EXPECT_EQ(br("(1;0,2)") * br("(u;0,0)"), br("(u;0,0)") * br("(1;0,2)"));
  BraidElt const a = br("(u v;1,1)");
  EXPECT_EQ(a * binv(a), BraidElt{});
}

TEST(Braid, InverseExamples) {
  EXPECT_EQ(binv(br("(1;3,1)")), (BraidElt{Word{}, kinv({3, 1})}));
  EXPECT_EQ(binv(br("(u;0,0)")), br("(u^-1;0,0)"));
  EXPECT_EQ(binv(br("(B;0,1)")), (BraidElt{theta({0, -1}, inv(big_b())), {0, -1}}));
}

TEST(Braid, GroupLawsRandomized) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    BraidElt const a = random_braid(rng);
    BraidElt const b = random_braid(rng);
    BraidElt const c = random_braid(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * binv(a), BraidElt{});
    EXPECT_EQ(binv(a) * a, BraidElt{});
    auto const ob = oracle::mul(oracle::from_braid(a), oracle::from_braid(b));
    EXPECT_EQ(a * b, oracle::to_braid(ob));
    EXPECT_EQ(binv(a), oracle::to_braid(oracle::inverse(oracle::from_braid(a))));
  }
}

TEST(Braid, PowMatchesRepeatedProduct) {
  BraidElt const a = br("(u v^-1;1,1)");
  BraidElt acc{};
  for (std::int64_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(bpow(a, k), acc);
    EXPECT_EQ(bpow(a, -k), binv(acc));
    acc = acc * a;
  }
}

TEST(Braid, CentreElement) {
  BraidElt const z = br("(1;0,2)");
  for (char const* g : {"(u;0,0)", "(v;0,0)", "(1;1,0)", "(1;0,1)"}) EXPECT_EQ(z * br(g), br(g) * z) << g;
}

TEST(Braid, LsigmaExamples) {
  EXPECT_EQ(lsigma(sigma_squared()), sigma_squared());
  EXPECT_EQ(sigma_squared(), br("(B;0,0)"));
  EXPECT_EQ(lsigma(br("(u;0,0)")), br("(B u^-1 B^-1;1,0)"));
  EXPECT_EQ(lsigma(br("(1;0,1)")), br("(B;0,1)"));
  EXPECT_EQ(lsigma(br("(1;5,0)")), br("(1;5,0)"));
}

TEST(Braid, LsigmaTableRows) {
  for (std::int64_t r = -4; r <= 4; ++r) {
    BraidElt const a{Word::u(r), {}};
    BraidElt const expect{pow(big_b() * Word::u(-1), r) * pow(big_b(), -r), {r, 0}};
    EXPECT_EQ(lsigma(a), expect) << r;
  }
  for (std::int64_t s = -4; s <= 4; ++s) {
    BraidElt const a{Word::v(s), {}};
    BraidElt const expect{pow(w("u v"), -s) * pow(w("u B"), delta(s)), {0, s}};
    EXPECT_EQ(lsigma(a), expect) << s;
  }
}

TEST(Braid, LsigmaMatchesOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    BraidElt const a = random_braid(rng);
    EXPECT_EQ(lsigma(a), oracle::to_braid(oracle::lsigma(oracle::from_braid(a))));
  }
}

TEST(Braid, LsigmaIsAnEndomorphism) {
  std::mt19937_64 rng(37);
  BraidElt const s2 = sigma_squared();
  for (int i = 0; i < 300; ++i) {
    BraidElt const a = random_braid(rng);
    BraidElt const b = random_braid(rng);
    EXPECT_EQ(lsigma(a * b), lsigma(a) * lsigma(b));
    EXPECT_EQ(lsigma(lsigma(a)), s2 * a * binv(s2));
    EXPECT_EQ(p1(lsigma(a)), gmap(a.w) * a.t);
  }
}

TEST(Braid, Projections) {
  BraidElt const x = br("(B;2,3)");
  EXPECT_EQ(p1(x), (KleinElt{2, 3}));
  EXPECT_EQ(p_f(x), big_b());
  BraidElt const a = br("(u;1,0)");
  BraidElt const b = br("(v;0,1)");
  EXPECT_EQ(p1(a * b), p1(a) * p1(b));
}

TEST(Braid, GmapAndRho) {
  EXPECT_EQ(gmap(big_b()), KleinElt{});
  EXPECT_EQ(gmap(Word{}), KleinElt{});
  EXPECT_EQ(gmap(w("u^3")), (KleinElt{3, 0}));
  EXPECT_EQ(rho(big_b()), big_b());
  EXPECT_TRUE(rho(Word{}).is_identity());
  EXPECT_EQ(rho(w("v")), inv(w("u v")) * w("u B"));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    auto const letters = oracle::random_letters(rng, 12);
    auto const t = oracle::image_of_letters(letters);
    EXPECT_EQ(gmap(oracle::to_word(letters)), (KleinElt{t.m, t.n}));
  }
}

TEST(Braid, DecomposeExamples) {
  EXPECT_EQ(decompose(big_b()), (Decomposition{0, 0, big_b()}));
  EXPECT_EQ(decompose(w("u^2 v")), (Decomposition{2, 1, Word{}}));
  EXPECT_EQ(decompose(w("v u")), (Decomposition{-1, 1, w("v^-1 u v u")}));
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    Word const x = oracle::to_word(oracle::random_letters(rng, 14));
    auto const d = decompose(x);
    EXPECT_EQ(gmap(d.x), KleinElt{});
    EXPECT_EQ(Word::u(d.r) * Word::v(d.s) * d.x, x);
  }
}

TEST(Braid, ClosedFormulaExamples) {
  BraidElt const one{};
  EXPECT_EQ(formula_b_lsigma_a(one, one), one);
  EXPECT_EQ(formula_a_b_lsigma_a(one, one), one);
  BraidElt const a = br("(u^2;0,0)");
  EXPECT_EQ(formula_b_lsigma_a(a, one), one * lsigma(a));
  BraidElt const a2 = br("(v^2;1,1)");
  BraidElt const b2 = br("(u;0,2)");
  EXPECT_EQ(formula_b_lsigma_a(a2, b2), b2 * lsigma(a2));
  EXPECT_EQ(formula_a_b_lsigma_a(br("(u^-2;1,0)"), br("(u^-1;0,0)")), br("(u^-1;0,0)"));
}

TEST(Braid, ClosedFormulasMatchEngine) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    BraidElt const a = random_braid(rng, 8, 3);
    BraidElt const b = random_braid(rng, 8, 3);
    EXPECT_EQ(formula_b_lsigma_a(a, b), b * lsigma(a));
    BraidElt const f = formula_a_b_lsigma_a(a, b);
    EXPECT_EQ(f, a * b * lsigma(a));
    auto const da = decompose(a.w);
    std::int64_t const m1 = a.t.m, n1 = a.t.n, m2 = b.t.m, n2 = b.t.n;
    EXPECT_EQ(f.t, (KleinElt{m1 + eps(n1) * m2 + eps(n1 + n2) * (da.r + eps(da.s) * m1), 2 * n1 + n2 + da.s}));
  }
}

TEST(Braid, ForcedExponents) {
  EXPECT_EQ(forced_exponents(BraidElt{}, br("(1;3,0)")), (ForcedExponents{0, 0}));
  for (std::int64_t m1 = -5; m1 <= 5; ++m1) {
    for (std::int64_t m2 = -5; m2 <= 5; ++m2) {
      EXPECT_EQ(forced_exponents({Word{}, {m1, 0}}, {Word{}, {m2, 0}}), (ForcedExponents{-2 * m1, 0}));
      for (std::int64_t n1 = -5; n1 <= 5; ++n1) {
        for (std::int64_t n2 = -5; n2 <= 5; ++n2) {
          auto const f = forced_exponents({Word{}, {m1, n1}}, {Word{}, {m2, n2}});
          EXPECT_EQ(mod_floor(f.a1, 2), 0);
          EXPECT_EQ(mod_floor(f.a2, 2), 0);
        }
      }
    }
  }
}

TEST(Braid, ForcedExponentsOnRelationInstances) {
  // Whenever a b l_σ(a) = b holds, the forced pair is a's actual (r, s).
  int hits = 0;
  for (std::int64_t m1 = -2; m1 <= 2; ++m1) {
    for (std::int64_t n1 = -1; n1 <= 1; ++n1) {
      for (char const* aw : {"1", "u^-2", "u^2", "v^2", "u^-2 v^2", "u^4"}) {
        for (std::int64_t m2 = -2; m2 <= 2; ++m2) {
          for (std::int64_t n2 = -2; n2 <= 2; ++n2) {
            for (char const* bw : {"1", "u^-1", "u", "v", "B"}) {
              BraidElt const a{w(aw), {m1, n1}};
              BraidElt const b{w(bw), {m2, n2}};
              if (a * b * lsigma(a) != b) continue;
              ++hits;
              auto const d = decompose(a.w);
              EXPECT_EQ(forced_exponents(a, b), (ForcedExponents{d.r, d.s}));
            }
          }
        }
      }
    }
  }
  EXPECT_GT(hits, 0);
}

TEST(Braid, FormatParse) {
  EXPECT_EQ(format(br("( u v^-1 ; 2 , -1 )")), "(u v^-1;2,-1)");
  EXPECT_EQ(format(BraidElt{}), "(1;0,0)");
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    BraidElt const a = random_braid(rng);
    EXPECT_EQ(parse_braid(format(a)), a);
  }
  for (char const* bad : {"(u;1)", "u;1,2", "(u;1,2", "(x;0,0)", "(u;0,0) v"}) EXPECT_THROW(parse_braid(bad), ParseError) << bad;
}
