#include <gtest/gtest.h>

#include "kleinbu/errors.hpp"
#include "kleinbu/expr.hpp"

using namespace kleinbu;

namespace {

BraidElt br(char const* s) { return parse_braid(s); }

}  // namespace

TEST(BraidExpr, Literals) {
  EXPECT_EQ(eval_braid_expression("(u v^-1;2,-1)"), br("(u v^-1;2,-1)"));
  EXPECT_EQ(eval_braid_expression("1"), BraidElt{});
  EXPECT_EQ(eval_braid_expression("sigma2"), sigma_squared());
}

TEST(BraidExpr, Operators) {
  EXPECT_EQ(eval_braid_expression("lsigma (B;0,0)"), br("(B;0,0)"));
  EXPECT_EQ(eval_braid_expression("lsigma(u;0,0)"), lsigma(br("(u;0,0)")));
  EXPECT_EQ(eval_braid_expression("inv (B;0,1)"), binv(br("(B;0,1)")));
  EXPECT_EQ(eval_braid_expression("inv inv (u;1,1)"), br("(u;1,1)"));
}

TEST(BraidExpr, Products) {
  BraidElt const a = br("(u;1,0)");
  BraidElt const b = br("(v;0,1)");
  EXPECT_EQ(eval_braid_expression("(u;1,0) (v;0,1)"), a * b);
  EXPECT_EQ(eval_braid_expression("(u;1,0) * (v;0,1)"), a * b);
  EXPECT_EQ(eval_braid_expression("(u;1,0) mul (v;0,1)"), a * b);
  EXPECT_EQ(eval_braid_expression("(u;1,0) (v;0,1) lsigma (u;1,0)"), a * b * lsigma(a));
  EXPECT_EQ(eval_braid_expression("inv ((u;1,0) (v;0,1))"), binv(a * b));
  EXPECT_EQ(eval_braid_expression("inv (u;1,0) (v;0,1)"), binv(a) * b);
}

TEST(BraidExpr, ErrorsCarryPositions) {
  auto pos = [](char const* s) -> std::size_t {
    try {
      eval_braid_expression(s);
    } catch (ParseError const& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(pos(""), 0u);
  EXPECT_EQ(pos("(u;0,0) )"), 8u);
  EXPECT_EQ(pos("((u;0,0)"), 0u);
  EXPECT_EQ(pos("(u;0,0) (x;0,0)"), 9u);
  EXPECT_EQ(pos("lsigma"), 6u);
  EXPECT_EQ(pos("(u;0,0) + (v;0,0)"), 8u);
}
