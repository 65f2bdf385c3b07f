#include "expr_parser.h"

#include <cctype>

#include "mathsearch/errors.h"

namespace mathsearch::detail {
namespace {

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Expr ParseAll() {
    Expr e = ParseEquation();
    if (Peek().kind != Token::Kind::kEnd) {
      Fail(Peek().kind == Token::Kind::kRParen ? "unbalanced ')'" : "expected operator");
    }
    return e;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool AtOperator(std::string_view op) const {
    return Peek().kind == Token::Kind::kOperator && Peek().text == op;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw SyntaxError(what, Peek().offset);
  }

  Expr ParseEquation() {
    Expr left = ParseAdditive();
    if (AtOperator("=")) {
      Next();
      Expr right = ParseAdditive();
      if (AtOperator("=")) Fail("'=' is not associative");
      return Expr::Binary("=", std::move(left), std::move(right));
    }
    return left;
  }

  Expr ParseAdditive() {
    Expr left = ParseMultiplicative();
    while (AtOperator("+") || AtOperator("-")) {
      std::string op = Next().text;
      left = Expr::Binary(op, std::move(left), ParseMultiplicative());
    }
    return left;
  }

  Expr ParseMultiplicative() {
    Expr left = ParseUnary();
    while (AtOperator("*") || AtOperator("/")) {
      std::string op = Next().text;
      left = Expr::Binary(op, std::move(left), ParseUnary());
    }
    return left;
  }

  Expr ParseUnary() {
    if (AtOperator("-")) {
      Next();
      return Expr::Unary("-", ParseUnary());
    }
    return ParsePower();
  }

  Expr ParsePower() {
    Expr base = ParseAtom();
    if (AtOperator("^")) {
      Next();
      // Right associative; the exponent may carry its own unary minus.
      return Expr::Binary("^", std::move(base), ParseUnary());
    }
    return base;
  }

  Expr ParseAtom() {
    const Token& t = Peek();
    switch (t.kind) {
      case Token::Kind::kNumber:
        Next();
        return Expr::Number(t.text);
      case Token::Kind::kIdentifier:
        Next();
        return Expr::Identifier(t.text);
      case Token::Kind::kOperand:
        Next();
        return t.operand;
      case Token::Kind::kFunction:
        return ParseCall();
      case Token::Kind::kLParen: {
        Next();
        Expr inner = ParseEquation();
        if (Peek().kind != Token::Kind::kRParen) {
          Fail(Peek().kind == Token::Kind::kEnd ? "unbalanced '('" : "expected ')'");
        }
        Next();
        return inner;
      }
      case Token::Kind::kEnd:
        Fail("dangling operator");
      case Token::Kind::kRParen:
        Fail("unexpected ')'");
      case Token::Kind::kComma:
        Fail("unexpected ','");
      case Token::Kind::kOperator:
        Fail("dangling operator '" + t.text + "'");
    }
    Fail("unexpected token");
  }

  Expr ParseCall() {
    const Token& name = Next();
    if (Peek().kind != Token::Kind::kLParen) {
      Fail("function '" + name.text + "' must be followed by '('");
    }
    Next();
    std::vector<Expr> args;
    args.push_back(ParseEquation());
    while (Peek().kind == Token::Kind::kComma) {
      Next();
      args.push_back(ParseEquation());
    }
    if (Peek().kind != Token::Kind::kRParen) {
      Fail(Peek().kind == Token::Kind::kEnd ? "unbalanced '('" : "expected ')'");
    }
    const int arity = FunctionArity(name.text);
    if (static_cast<int>(args.size()) != arity) {
      throw SyntaxError("function '" + name.text + "' takes " + std::to_string(arity) +
                            " argument(s), got " + std::to_string(args.size()),
                        name.offset);
    }
    Next();
    return Expr::Call(name.text, std::move(args));
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> Lex(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    Token t;
    t.offset = i;
    if (IsDigit(c)) {
      std::size_t j = i;
      while (j < input.size() && IsDigit(input[j])) ++j;
      if (j < input.size() && input[j] == '.') {
        if (j + 1 >= input.size() || !IsDigit(input[j + 1])) {
          throw SyntaxError("malformed number", j);
        }
        ++j;
        while (j < input.size() && IsDigit(input[j])) ++j;
      }
      t.kind = Token::Kind::kNumber;
      t.text = std::string(input.substr(i, j - i));
      i = j;
    } else if (IsAlpha(c)) {
      std::size_t j = i;
      while (j < input.size() && (IsAlpha(input[j]) || IsDigit(input[j]) || input[j] == '_')) ++j;
      t.text = std::string(input.substr(i, j - i));
      t.kind = IsFunctionName(t.text) ? Token::Kind::kFunction : Token::Kind::kIdentifier;
      i = j;
    } else if (IsBinaryOperator(std::string_view(&input[i], 1))) {
      t.kind = Token::Kind::kOperator;
      t.text = std::string(1, c);
      ++i;
    } else if (c == '(') {
      t.kind = Token::Kind::kLParen;
      t.text = "(";
      ++i;
    } else if (c == ')') {
      t.kind = Token::Kind::kRParen;
      t.text = ")";
      ++i;
    } else if (c == ',') {
      t.kind = Token::Kind::kComma;
      t.text = ",";
      ++i;
    } else {
      throw SyntaxError(std::string("unknown character '") + c + "'", i);
    }
    tokens.push_back(std::move(t));
  }
  Token end;
  end.offset = input.size();
  tokens.push_back(std::move(end));
  return tokens;
}

Expr ParseTokens(const std::vector<Token>& tokens) {
  if (tokens.empty() || tokens.back().kind != Token::Kind::kEnd) {
    throw SyntaxError("token stream is not terminated", 0);
  }
  return Parser(tokens).ParseAll();
}

}  // namespace mathsearch::detail
