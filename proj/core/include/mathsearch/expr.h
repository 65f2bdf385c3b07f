#ifndef MATHSEARCH_EXPR_H_
#define MATHSEARCH_EXPR_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mathsearch {

// Expression tree node. Leaves carry a literal or a name in `symbol`;
// interior nodes carry their operator or function name there and own their
// operands in `args`.
struct Expr {
  enum class Kind { kNumber, kIdentifier, kUnary, kBinary, kCall };

  Kind kind = Kind::kIdentifier;
  std::string symbol;
  std::vector<Expr> args;

  static Expr Number(std::string literal);
  static Expr Identifier(std::string name);
  static Expr Unary(std::string op, Expr operand);
  static Expr Binary(std::string op, Expr left, Expr right);
  static Expr Call(std::string function, std::vector<Expr> args);

  bool is_leaf() const { return kind == Kind::kNumber || kind == Kind::kIdentifier; }

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Name that replaces every leaf in a structural skeleton.
inline constexpr std::string_view kSkeletonTerm = "term";

// Fixed function table. int and diff take (body, variable); the rest take one
// argument.
bool IsFunctionName(std::string_view name);
int FunctionArity(std::string_view name);
bool IsBinaryOperator(std::string_view symbol);
bool IsValidIdentifier(std::string_view name);
bool IsValidNumber(std::string_view literal);

// One operator or function application together with its evaluation rank
// (1 = evaluated first).
struct OpOccurrence {
  std::string op;
  int order = 0;

  friend bool operator==(const OpOccurrence&, const OpOccurrence&) = default;
};

// Parses the plain-text grammar. Precedence from lowest: `=` (non-assoc),
// `+ -` (left), `* /` (left), unary `-`, `^` (right), atoms.
// Throws SyntaxError carrying the byte offset of the problem.
Expr ParseText(std::string_view input);

// Canonical text: minimal parentheses, single spaces around binary operators.
std::string PrintText(const Expr& e);

// Operators and function calls numbered by left-to-right post-order.
std::vector<OpOccurrence> EvalOrder(const Expr& e);

// Replaces every leaf with the identifier `term`.
Expr Skeletonize(const Expr& e);

std::multiset<std::string> OpTokens(const Expr& e);

// Leaf names and literals in left-to-right order.
std::vector<std::string> LeafTokens(const Expr& e);

bool ContainsSymbol(const Expr& e, std::string_view symbol);

}  // namespace mathsearch

#endif  // MATHSEARCH_EXPR_H_
