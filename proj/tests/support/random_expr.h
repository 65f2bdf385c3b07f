#ifndef MATHSEARCH_TESTS_RANDOM_EXPR_H_
#define MATHSEARCH_TESTS_RANDOM_EXPR_H_

#include <random>

#include "mathsearch/expr.h"

namespace mathsearch::testing {

// Random well-formed expression trees of bounded depth. Covers every node
// kind, every operator, and every function in the fixed table.
class RandomExpr {
 public:
  explicit RandomExpr(unsigned seed) : rng_(seed) {}

  Expr Generate(int max_depth);

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  Expr Leaf();

  std::mt19937 rng_;
};

}  // namespace mathsearch::testing

#endif  // MATHSEARCH_TESTS_RANDOM_EXPR_H_
