#include <gtest/gtest.h>

#include "kleinbu/errors.hpp"
#include "kleinbu/klein.hpp"
#include "oracles.hpp"

using namespace kleinbu;

TEST(KleinPi, ProductExamples) {
  EXPECT_EQ((KleinElt{1, 0} * KleinElt{0, 1}), (KleinElt{1, 1}));
  EXPECT_EQ((KleinElt{0, 1} * KleinElt{1, 0}), (KleinElt{-1, 1}));
  for (std::int64_t m = -4; m <= 4; ++m) {
    for (std::int64_t n = -4; n <= 4; ++n) EXPECT_EQ((KleinElt{m, n} * KleinElt{m, n}.inverse()), KleinElt{});
  }
}

TEST(KleinPi, InverseExamples) {
  EXPECT_EQ(kinv({1, 0}), (KleinElt{-1, 0}));
  EXPECT_EQ(kinv({0, 1}), (KleinElt{0, -1}));
  EXPECT_EQ(kinv({3, 1}), (KleinElt{3, -1}));
}

TEST(KleinPi, Gadgets) {
  EXPECT_EQ(delta(4), 0);
  EXPECT_EQ(delta(-3), 1);
  EXPECT_EQ(eps(-1), -1);
  EXPECT_EQ(sign(0), 0);
  EXPECT_EQ(sign(-7), -1);
  EXPECT_EQ(omega(0), 1);
  EXPECT_EQ(omega(2), 0);
  EXPECT_EQ(mod_floor(-3, 2), 1);
  EXPECT_EQ(mod_floor(-4, 4), 0);
}

TEST(KleinPi, GadgetIdentities) {
  for (std::int64_t n = -10; n <= 10; ++n) {
    for (std::int64_t k = -10; k <= 10; ++k) EXPECT_EQ(eps(n) * eps(k), eps(n + k));
    EXPECT_EQ(delta(n) + delta(n + 1), 1);
    EXPECT_EQ(1 - eps(n), 2 * delta(n));
  }
}

TEST(KleinPi, AgreesWithAffineOracle) {
  for (std::int64_t m = -6; m <= 6; ++m) {
    for (std::int64_t n = -6; n <= 6; ++n) {
      for (std::int64_t p = -3; p <= 3; ++p) {
        for (std::int64_t q = -3; q <= 3; ++q) {
          auto const r = oracle::compose({m, n}, {p, q});
          EXPECT_EQ((KleinElt{m, n} * KleinElt{p, q}), (KleinElt{r.m, r.n}));
        }
      }
    }
  }
}

TEST(KleinPi, Associativity) {
  for (std::int64_t a = -10; a <= 10; a += 3) {
    for (std::int64_t b = -10; b <= 10; b += 2) {
      for (std::int64_t c = -10; c <= 10; c += 5) {
        for (std::int64_t d = -10; d <= 10; d += 3) {
          KleinElt const x{a, b};
          KleinElt const y{c, d};
          KleinElt const z{b - c, a + d};
          EXPECT_EQ((x * y) * z, x * (y * z));
        }
      }
    }
  }
}

TEST(KleinPi, PowMatchesRepeatedProduct) {
  for (std::int64_t m = -3; m <= 3; ++m) {
    for (std::int64_t n = -3; n <= 3; ++n) {
      KleinElt acc{};
      for (std::int64_t k = 0; k <= 6; ++k) {
        EXPECT_EQ(kpow({m, n}, k), acc);
        EXPECT_EQ(kpow({m, n}, -k), acc.inverse());
        acc = acc * KleinElt{m, n};
      }
    }
  }
}

TEST(KleinPi, InclusionAndQuotient) {
  EXPECT_EQ(i2(1, 0), (KleinElt{1, 0}));
  EXPECT_EQ(i2(0, 1), (KleinElt{0, 2}));
  EXPECT_EQ(theta2({5, 3}), 1);
  for (std::int64_t m = -10; m <= 10; ++m) {
    for (std::int64_t n = -10; n <= 10; ++n) {
      EXPECT_EQ(theta2(i2(m, n)), 0);
      bool const in_image = n % 2 == 0;
      EXPECT_EQ(theta2({m, n}) == 0, in_image);
      if (in_image) {
        EXPECT_EQ(i2(m, n / 2), (KleinElt{m, n}));
      }
    }
  }
}

TEST(KleinPi, FormatParse) {
  EXPECT_EQ(format(KleinElt{-3, 12}), "(-3,12)");
  EXPECT_EQ(parse_klein(" ( 4 , -2 ) "), (KleinElt{4, -2}));
  for (char const* bad : {"(1,2", "1,2)", "(a,2)", "(1;2)", "(1,2) x"}) EXPECT_THROW(parse_klein(bad), ParseError) << bad;
}
