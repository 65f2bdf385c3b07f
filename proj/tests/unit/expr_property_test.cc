#include <gtest/gtest.h>

#include <algorithm>

#include "mathsearch/expr.h"
#include "mathsearch/mathml.h"
#include "random_expr.h"

namespace mathsearch {
namespace {

constexpr int kCases = 1000;

TEST(ExprProperty, TextRoundTrip) {
  testing::RandomExpr gen(1);
  for (int i = 0; i < kCases; ++i) {
    const Expr e = gen.Generate(6);
    const std::string text = PrintText(e);
    ASSERT_EQ(ParseText(text), e) << text;
    ASSERT_EQ(PrintText(ParseText(text)), text);
  }
}

TEST(ExprProperty, ContentRoundTrip) {
  testing::RandomExpr gen(2);
  for (int i = 0; i < kCases; ++i) {
    const Expr e = gen.Generate(6);
    ASSERT_EQ(mathml::ParseContent(mathml::ToContent(e)), e) << PrintText(e);
    ASSERT_EQ(mathml::ParseContent(mathml::ToAnnotatedContent(e)), e) << PrintText(e);
  }
}

TEST(ExprProperty, EvalOrderIsAPermutationOfOneToK) {
  testing::RandomExpr gen(3);
  for (int i = 0; i < kCases; ++i) {
    const Expr e = gen.Generate(6);
    const std::vector<OpOccurrence> order = EvalOrder(e);
    ASSERT_EQ(order.size(), OpTokens(e).size());
    for (std::size_t k = 0; k < order.size(); ++k) ASSERT_EQ(order[k].order, static_cast<int>(k) + 1);
    std::multiset<std::string> ops;
    for (const OpOccurrence& o : order) ops.insert(o.op);
    ASSERT_EQ(ops, OpTokens(e));
  }
}

TEST(ExprProperty, SkeletonIsIdempotentAndKeepsOperators) {
  testing::RandomExpr gen(4);
  for (int i = 0; i < kCases; ++i) {
    const Expr e = gen.Generate(6);
    const Expr s = Skeletonize(e);
    ASSERT_EQ(Skeletonize(s), s);
    ASSERT_EQ(EvalOrder(s), EvalOrder(e));
    const std::vector<std::string> leaves = LeafTokens(s);
    ASSERT_EQ(leaves.size(), LeafTokens(e).size());
    ASSERT_TRUE(std::all_of(leaves.begin(), leaves.end(), [](const std::string& l) { return l == kSkeletonTerm; }));
  }
}

}  // namespace
}  // namespace mathsearch
