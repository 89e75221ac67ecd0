#include <gtest/gtest.h>

#include <random>

#include "kleinbu/classifier.hpp"
#include "kleinbu/errors.hpp"
#include "oracles.hpp"

using namespace kleinbu;

namespace {

// Clause table written out directly, s2 reduced mod 2 for Type 4.
bool expected_bu(HomClass const& c) {
  switch (c.type) {
    case 1: return mod_floor(c.s2, 2) == 0;
    case 2: return true;
    case 3: return c.s1 != 0;
    default: {
      std::int64_t const z = mod_floor(c.s2, 2);
      if (c.r2 * c.s1 != 0) return true;
      if (z == 1) return false;
      return (c.r2 == 0 && c.s1 != 0) || (c.s1 == 0 && c.r1 != 0 && mod_floor(c.r2, 2) == 0);
    }
  }
}

std::vector<HomClass> class_grid(std::int64_t R) {
  std::vector<HomClass> out;
  for (std::int64_t s1 = -R; s1 <= R; ++s1) {
    for (std::int64_t s2 = -R; s2 <= R; ++s2) {
      for (std::int64_t i = 0; i <= 1; ++i) {
        out.push_back(HomClass::type1(i, s1, s2));
        out.push_back(HomClass::type2(i, s1, s2));
        out.push_back(HomClass::type3(i, s1, s2));
      }
      for (std::int64_t r1 = 0; r1 <= R; ++r1) {
        for (std::int64_t r2 = r1 == 0 ? 0 : -R; r2 <= R; ++r2) out.push_back(HomClass::type4(r1, r2, s1, s2));
      }
    }
  }
  return out;
}

}  // namespace

TEST(Classifier, ValidateExamples) {
  EXPECT_TRUE(validate({{1, 1}, {1, 1}}));
  EXPECT_TRUE(validate({{2, 0}, {5, 0}}));
  // (1,1)(0,2) = (1,3) = (0,2)(1,1), so this pair commutes.
  EXPECT_TRUE(validate({{1, 1}, {0, 2}}));
  EXPECT_FALSE(validate({{1, 1}, {1, 2}}));
  EXPECT_FALSE(validate({{1, 0}, {0, 1}}));
}

TEST(Classifier, NormalizeExamples) {
  EXPECT_EQ(normalize({{3, 5}, {0, 4}}), HomClass::type1(1, 2, 2));
  EXPECT_EQ(normalize({{0, 3}, {0, 4}}), HomClass::type1(0, 1, 2));
  EXPECT_EQ(normalize({{-2, 0}, {3, 2}}), HomClass::type4(2, -3, 0, 1));
  EXPECT_EQ(normalize({{0, 0}, {-3, 2}}), HomClass::type4(0, 3, 0, 1));
  EXPECT_THROW(normalize({{1, 0}, {0, 1}}), PreconditionError);
}

TEST(Classifier, NormalizeAgreesWithBruteForceConjugacy) {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<std::int64_t> c(-6, 6);
  int tested = 0;
  while (tested < 400) {
    HomDescriptor const h{{c(rng), c(rng)}, {c(rng), c(rng)}};
    if (!validate(h)) continue;
    ++tested;
    auto const reps = oracle::conjugate_representatives(h, 8);
    ASSERT_EQ(reps.size(), 1u) << format(h.img10) << " " << format(h.img01);
    EXPECT_EQ(normalize(h), reps.front());
  }
}

TEST(Classifier, RepresentativesAreFixedPoints) {
  for (auto const& c : class_grid(3)) {
    EXPECT_NO_THROW(check_shape(c));
    EXPECT_TRUE(validate(images(c)));
    EXPECT_EQ(normalize(images(c)), c) << format(c);
    EXPECT_EQ(oracle::as_representative(images(c)), c);
  }
}

TEST(Classifier, CheckShapeRejects) {
  EXPECT_THROW(check_shape(HomClass::type1(2, 0, 0)), PreconditionError);
  EXPECT_THROW(check_shape(HomClass::type4(-1, 0, 0, 0)), PreconditionError);
  EXPECT_THROW(check_shape(HomClass::type4(0, -1, 0, 0)), PreconditionError);
  EXPECT_THROW(check_shape(HomClass{5, 0, 0, 0, 0, 0}), PreconditionError);
}

TEST(Classifier, ConjugationInvariance) {
  for (auto const& c : class_grid(2)) {
    for (std::int64_t a = -4; a <= 4; ++a) {
      for (std::int64_t b = -4; b <= 4; ++b) {
        HomDescriptor const h = conjugate(images(c), {a, b});
        auto const r = oracle::compose(oracle::compose({a, b}, {images(c).img10.m, images(c).img10.n}),
                                       {-oracle::sgn_pow(b) * a, -b});
        EXPECT_EQ(h.img10, (KleinElt{r.m, r.n}));
        EXPECT_EQ(normalize(h), c);
      }
    }
  }
}

TEST(Classifier, DecideExamples) {
  EXPECT_TRUE(decide(HomClass::type1(0, 3, 0)).bu);
  EXPECT_EQ(decide(HomClass::type1(0, 3, 0)).branch, "(a)");
  EXPECT_FALSE(decide(HomClass::type3(0, 0, 1)).bu);
  Verdict const v = decide(HomClass::type4(1, 2, 0, 0));
  EXPECT_TRUE(v.bu);
  EXPECT_EQ(v.branch, "(d)(iii)");
  EXPECT_FALSE(decide(HomClass::type4(1, 1, 0, 0)).bu);
  EXPECT_FALSE(decide(HomClass::type4(2, 0, 3, 1)).bu);
  EXPECT_TRUE(decide(HomClass::type2(1, -2, 5)).bu);
  EXPECT_EQ(decide(HomClass::type2(1, -2, 5)).branch, "(b)");
}

TEST(Classifier, DecideMatchesClauseTable) {
  for (auto const& c : class_grid(4)) {
    Verdict const v = decide(c);
    EXPECT_EQ(v.bu, expected_bu(c)) << format(c);
    EXPECT_EQ(v.reduced, reduce(c));
    EXPECT_FALSE(v.branch.empty());
    EXPECT_EQ(v.branch.find("fails") == std::string::npos, v.bu) << v.branch;
  }
}

TEST(Classifier, LiteralReadingIsSurfaced) {
  // s1 ≠ 0, r2 = 0, s2 = 2: clause (d)(ii) only fires after the reduction.
  Verdict const v = decide(HomClass::type4(1, 0, 3, 2));
  EXPECT_TRUE(v.bu);
  EXPECT_FALSE(v.literal_bu);
  EXPECT_NE(v.branch.find("literal"), std::string::npos);
  Verdict const w = decide(HomClass::type4(1, 0, 3, 0));
  EXPECT_EQ(w.bu, w.literal_bu);
  EXPECT_EQ(w.branch, "(d)(ii)");
}

TEST(Classifier, CentralShiftExamples) {
  EXPECT_TRUE(central_shift_equiv(HomClass::type4(1, 0, 1, 0), HomClass::type4(1, 0, 1, 2)));
  EXPECT_FALSE(central_shift_equiv(HomClass::type4(1, 0, 1, 0), HomClass::type4(1, 0, 1, 1)));
  EXPECT_TRUE(central_shift_equiv(HomClass::type1(0, 5, 1), HomClass::type1(0, 5, 3)));
  EXPECT_FALSE(central_shift_equiv(HomClass::type1(0, 5, 1), HomClass::type1(0, 4, 3)));
  EXPECT_FALSE(central_shift_equiv(HomClass::type1(0, 5, 1), HomClass::type2(0, 5, 3)));
}

TEST(Classifier, DecideInvariantUnderCentralShift) {
  for (auto const& c : class_grid(4)) {
    HomClass d = c;
    d.s2 += 2;
    ASSERT_TRUE(central_shift_equiv(c, d));
    EXPECT_EQ(decide(c).bu, decide(d).bu) << format(c);
    d.s2 -= 4;
    EXPECT_EQ(decide(c).bu, decide(d).bu) << format(c);
  }
}

TEST(Classifier, DecideInvariantUnderR2Flip) {
  for (std::int64_t r2 = -4; r2 <= 4; ++r2) {
    for (std::int64_t s1 = -4; s1 <= 4; ++s1) {
      for (std::int64_t s2 = -4; s2 <= 4; ++s2) {
        HomClass const c = normalize(images(HomClass{4, 0, 0, r2 < 0 ? -r2 : r2, s1, s2}));
        HomClass const flipped = normalize({{0, 2 * s1}, {-r2, 2 * s2}});
        EXPECT_EQ(c, flipped);
        EXPECT_EQ(decide(c).bu, decide(flipped).bu);
      }
    }
  }
}

TEST(Classifier, Format) {
  EXPECT_EQ(format(HomClass::type4(1, 2, 0, 0)), "Type 4 (r1,r2,s1,s2)=(1,2,0,0)");
  EXPECT_EQ(format(HomClass::type1(0, 3, 0)), "Type 1 (i,s1,s2)=(0,3,0)");
}
