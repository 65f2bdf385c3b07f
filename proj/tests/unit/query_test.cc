#include <gtest/gtest.h>

#include "mathsearch/errors.h"
#include "mathsearch/search.h"

namespace mathsearch {
namespace {

QueryFlags Flags(bool exact, bool structural, bool no_order) {
  QueryFlags f;
  f.exact = exact;
  f.structural = structural;
  f.no_order = no_order;
  return f;
}

TEST(ParseQuery, KeywordMode) {
  const Query q = ParseQuery("Newton equation, newton!");
  EXPECT_EQ(q.mode, QueryMode::kKeyword);
  EXPECT_EQ(q.terms, (TermCounts{{"newton", 2}, {"equation", 1}}));
  EXPECT_FALSE(ParseQuery("x + y", Flags(false, true, false)).structural);
}

TEST(ParseQuery, ExpressionMode) {
  const Query q = ParseQuery("math: x + y * z");
  EXPECT_EQ(q.mode, QueryMode::kMathExpr);
  EXPECT_EQ(q.terms, (TermCounts{{"x", 1}, {"y", 1}, {"z", 1}, {"+", 1}, {"*", 1},
                                 {"pair:*:1", 1}, {"pair:+:2", 1}}));
  EXPECT_EQ(q.identifiers, (std::set<std::string>{"x", "y", "z"}));
  EXPECT_EQ(ParseQuery("MATH: x + y * z", Flags(false, false, true)).terms,
            (TermCounts{{"x", 1}, {"y", 1}, {"z", 1}, {"+", 1}, {"*", 1}}));
  EXPECT_EQ(ParseQuery("Math: x + y * z", Flags(false, true, false)).terms,
            (TermCounts{{"+", 1}, {"*", 1}, {"pair:*:1", 1}, {"pair:+:2", 1}}));
}

TEST(ParseQuery, BagMode) {
  const Query q = ParseQuery("Math: x y z + *");
  EXPECT_EQ(q.mode, QueryMode::kMathBag);
  EXPECT_EQ(q.terms, (TermCounts{{"x", 1}, {"y", 1}, {"z", 1}, {"+", 1}, {"*", 1}}));
  EXPECT_EQ(ParseQuery("Math: x y z + *", Flags(false, true, false)).terms,
            (TermCounts{{"+", 1}, {"*", 1}}));
  EXPECT_EQ(ParseQuery("Math: sin x x").terms, (TermCounts{{"sin", 1}, {"x", 2}}));
}

TEST(ParseQuery, PairedMode) {
  const Query q = ParseQuery("Math: (+,1) ( * , 2 ) (int,1)");
  EXPECT_EQ(q.mode, QueryMode::kMathPaired);
  EXPECT_EQ(q.terms, (TermCounts{{"pair:+:1", 1}, {"pair:*:2", 1}, {"pair:int:1", 1}}));
  EXPECT_TRUE(ParseQuery("Math: (+,1)", Flags(false, false, true)).terms.empty());
}

TEST(ParseQuery, PairErrors) {
  EXPECT_THROW(ParseQuery("Math: (%,1)"), BadPairSyntax);
  EXPECT_THROW(ParseQuery("Math: (+,0)"), BadPairSyntax);
  EXPECT_THROW(ParseQuery("Math: (+,-2)"), BadPairSyntax);
  EXPECT_THROW(ParseQuery("Math: (+,1) x"), BadPairSyntax);
}

TEST(ParseQuery, EmptyQueries) {
  EXPECT_THROW(ParseQuery(""), EmptyQuery);
  EXPECT_THROW(ParseQuery("   "), EmptyQuery);
  EXPECT_THROW(ParseQuery("Math:"), EmptyQuery);
  EXPECT_THROW(ParseQuery("!!!"), EmptyQuery);
  EXPECT_THROW(ParseQuery("Math: ( , )"), EmptyQuery);
}

TEST(ParseQuery, Filters) {
  QueryFlags f;
  f.source = "lesson";
  f.category = "Calculus";
  f.top_k = 3;
  const Query q = ParseQuery("integral", f);
  EXPECT_EQ(q.source_filter, "Lesson");
  EXPECT_EQ(q.category_filter, "calculus");
  EXPECT_EQ(q.top_k, 3);
  f.source = "Lecture";
  EXPECT_THROW(ParseQuery("integral", f), UnknownConcept);
  f.source.reset();
  f.category = "geometry";
  EXPECT_THROW(ParseQuery("integral", f), InputError);
  f.category.reset();
  f.top_k = 0;
  EXPECT_THROW(ParseQuery("integral", f), InputError);
}

TEST(ParseQuery, ExactFlag) {
  EXPECT_TRUE(ParseQuery("Math: x + 1", Flags(true, false, false)).require_all_identifiers);
  EXPECT_EQ(ParseQuery("Math: x + 1").identifiers, (std::set<std::string>{"x", "1"}));
}

TEST(ParseQuery, ModeNames) {
  EXPECT_EQ(QueryModeName(QueryMode::kMathPaired), "math_paired");
  EXPECT_EQ(QueryModeName(QueryMode::kKeyword), "keyword");
}

}  // namespace
}  // namespace mathsearch
