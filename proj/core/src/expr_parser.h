#ifndef MATHSEARCH_SRC_EXPR_PARSER_H_
#define MATHSEARCH_SRC_EXPR_PARSER_H_

// Shared precedence parser. The text grammar and presentation MathML both
// reduce their input to a token stream and parse it here.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mathsearch/expr.h"

namespace mathsearch::detail {

struct Token {
  enum class Kind {
    kNumber,
    kIdentifier,
    kFunction,
    kOperator,
    kLParen,
    kRParen,
    kComma,
    kOperand,  // pre-built subexpression (msup, mfrac, ...)
    kEnd,
  };

  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t offset = 0;
  Expr operand;
};

// Splits text into tokens. Throws SyntaxError on an unknown character or a
// malformed number.
std::vector<Token> Lex(std::string_view input);

// Parses a complete token stream; the last token must be kEnd.
Expr ParseTokens(const std::vector<Token>& tokens);

}  // namespace mathsearch::detail

#endif  // MATHSEARCH_SRC_EXPR_PARSER_H_
