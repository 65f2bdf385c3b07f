#include "mathsearch/expr.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>

#include "expr_parser.h"
#include "mathsearch/errors.h"

namespace mathsearch {
namespace {

struct FunctionInfo {
  std::string_view name;
  int arity;
};

constexpr std::array<FunctionInfo, 8> kFunctions{{
    {"sin", 1},
    {"cos", 1},
    {"tan", 1},
    {"log", 1},
    {"exp", 1},
    {"sqrt", 1},
    {"int", 2},
    {"diff", 2},
}};

// Binding strength used by the printer; mirrors the parser's levels.
enum Level { kEquation = 1, kAdditive = 2, kMultiplicative = 3, kPrefix = 4, kPower = 5, kAtom = 6 };

int LevelOf(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
    case Expr::Kind::kIdentifier:
    case Expr::Kind::kCall:
      return kAtom;
    case Expr::Kind::kUnary:
      return kPrefix;
    case Expr::Kind::kBinary:
      if (e.symbol == "=") return kEquation;
      if (e.symbol == "+" || e.symbol == "-") return kAdditive;
      if (e.symbol == "*" || e.symbol == "/") return kMultiplicative;
      return kPower;
  }
  return kAtom;
}

void Print(const Expr& e, std::string& out);

void PrintOperand(const Expr& e, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  Print(e, out);
  if (parenthesize) out += ')';
}

void Print(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
    case Expr::Kind::kIdentifier:
      out += e.symbol;
      return;
    case Expr::Kind::kUnary:
      out += e.symbol;
      PrintOperand(e.args[0], LevelOf(e.args[0]) < kPrefix, out);
      return;
    case Expr::Kind::kCall:
      out += e.symbol;
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += ", ";
        Print(e.args[i], out);
      }
      out += ')';
      return;
    case Expr::Kind::kBinary: {
      const int level = LevelOf(e);
      const int left = LevelOf(e.args[0]);
      const int right = LevelOf(e.args[1]);
      bool wrap_left = false;
      bool wrap_right = false;
      if (level == kEquation) {
        wrap_left = left <= kEquation;
        wrap_right = right <= kEquation;
      } else if (level == kPower) {
        wrap_left = left <= kPower;
        wrap_right = right < kPrefix;
      } else {
        wrap_left = left < level;
        wrap_right = right <= level;
      }
      PrintOperand(e.args[0], wrap_left, out);
      out += ' ';
      out += e.symbol;
      out += ' ';
      PrintOperand(e.args[1], wrap_right, out);
      return;
    }
  }
}

void CollectOrder(const Expr& e, std::vector<OpOccurrence>& out) {
  for (const Expr& child : e.args) CollectOrder(child, out);
  if (!e.is_leaf()) {
    out.push_back({e.symbol, static_cast<int>(out.size()) + 1});
  }
}

void CollectOps(const Expr& e, std::multiset<std::string>& out) {
  if (!e.is_leaf()) out.insert(e.symbol);
  for (const Expr& child : e.args) CollectOps(child, out);
}

void CollectLeaves(const Expr& e, std::vector<std::string>& out) {
  if (e.is_leaf()) out.push_back(e.symbol);
  for (const Expr& child : e.args) CollectLeaves(child, out);
}

}  // namespace

Expr Expr::Number(std::string literal) {
  return Expr{Kind::kNumber, std::move(literal), {}};
}

Expr Expr::Identifier(std::string name) {
  return Expr{Kind::kIdentifier, std::move(name), {}};
}

Expr Expr::Unary(std::string op, Expr operand) {
  Expr e{Kind::kUnary, std::move(op), {}};
  e.args.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(std::string op, Expr left, Expr right) {
  Expr e{Kind::kBinary, std::move(op), {}};
  e.args.reserve(2);
  e.args.push_back(std::move(left));
  e.args.push_back(std::move(right));
  return e;
}

Expr Expr::Call(std::string function, std::vector<Expr> args) {
  return Expr{Kind::kCall, std::move(function), std::move(args)};
}

bool IsFunctionName(std::string_view name) {
  return FunctionArity(name) > 0;
}

int FunctionArity(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return f.arity;
  }
  return 0;
}

bool IsBinaryOperator(std::string_view symbol) {
  return symbol == "+" || symbol == "-" || symbol == "*" || symbol == "/" || symbol == "^" ||
         symbol == "=";
}

bool IsValidIdentifier(std::string_view name) {
  static const std::regex pattern("[A-Za-z][A-Za-z0-9_]*");
  return std::regex_match(name.begin(), name.end(), pattern) && !IsFunctionName(name);
}

bool IsValidNumber(std::string_view literal) {
  static const std::regex pattern("[0-9]+(\\.[0-9]+)?");
  return std::regex_match(literal.begin(), literal.end(), pattern);
}

Expr ParseText(std::string_view input) {
  if (std::all_of(input.begin(), input.end(),
                  [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; })) {
    throw SyntaxError("empty expression", 0);
  }
  return detail::ParseTokens(detail::Lex(input));
}

std::string PrintText(const Expr& e) {
  std::string out;
  Print(e, out);
  return out;
}

std::vector<OpOccurrence> EvalOrder(const Expr& e) {
  std::vector<OpOccurrence> out;
  CollectOrder(e, out);
  return out;
}

Expr Skeletonize(const Expr& e) {
  if (e.is_leaf()) return Expr::Identifier(std::string(kSkeletonTerm));
  Expr out{e.kind, e.symbol, {}};
  out.args.reserve(e.args.size());
  for (const Expr& child : e.args) out.args.push_back(Skeletonize(child));
  return out;
}

std::multiset<std::string> OpTokens(const Expr& e) {
  std::multiset<std::string> out;
  CollectOps(e, out);
  return out;
}

std::vector<std::string> LeafTokens(const Expr& e) {
  std::vector<std::string> out;
  CollectLeaves(e, out);
  return out;
}

bool ContainsSymbol(const Expr& e, std::string_view symbol) {
  if (!e.is_leaf() && e.symbol == symbol) return true;
  return std::any_of(e.args.begin(), e.args.end(),
                     [&](const Expr& child) { return ContainsSymbol(child, symbol); });
}

}  // namespace mathsearch
