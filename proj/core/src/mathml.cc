#include "mathsearch/mathml.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

#include "expr_parser.h"
#include "mathsearch/errors.h"

namespace mathsearch::mathml {
namespace {

using detail::Token;
using xml::Node;

struct OperatorElement {
  std::string_view symbol;
  std::string_view element;
};

constexpr std::array<OperatorElement, 14> kOperatorElements{{
    {"+", "plus"},
    {"-", "minus"},
    {"*", "times"},
    {"/", "divide"},
    {"^", "power"},
    {"=", "eq"},
    {"sqrt", "root"},
    {"sin", "sin"},
    {"cos", "cos"},
    {"tan", "tan"},
    {"log", "log"},
    {"exp", "exp"},
    {"int", "int"},
    {"diff", "diff"},
}};

std::string_view ElementForSymbol(std::string_view symbol) {
  for (const auto& op : kOperatorElements) {
    if (op.symbol == symbol) return op.element;
  }
  return {};
}

std::string_view SymbolForElement(std::string_view element) {
  for (const auto& op : kOperatorElements) {
    if (op.element == element) return op.symbol;
  }
  return {};
}

std::string Trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

const Node& RootMath(const Node& doc) {
  const Node* root = nullptr;
  for (const Node& c : doc.children) {
    if (c.is_element()) root = &c;
  }
  if (root == nullptr || root->local_name() != "math") {
    throw MalformedLayout("MathML document root must be <math>");
  }
  return *root;
}

// Character data directly inside a layout container must be whitespace.
void RequireNoLooseText(const Node& n) {
  for (const Node& c : n.children) {
    if ((c.kind == Node::Kind::kText || c.kind == Node::Kind::kCData) && !Trim(c.text).empty()) {
      throw MalformedLayout("unexpected text '" + Trim(c.text) + "' inside <" +
                            std::string(n.local_name()) + ">");
    }
  }
}

// ---- presentation ----

Expr ParseRow(const Node& container);

Token OperandToken(Expr e, std::size_t offset) {
  Token t;
  t.kind = Token::Kind::kOperand;
  t.operand = std::move(e);
  t.offset = offset;
  return t;
}

std::string NormalizeOperator(const std::string& text) {
  if (text == "\xE2\x88\x92") return "-";                                   // U+2212 minus
  if (text == "\xC3\x97" || text == "\xE2\x8B\x85" || text == "\xC2\xB7") return "*";  // times, dot
  if (text == "\xC3\xB7") return "/";                                        // division sign
  return text;
}

Token PresentationToken(const Node& el) {
  const std::string_view name = el.local_name();
  Token t;
  t.offset = el.begin;
  if (name == "mi") {
    if (!el.element_children().empty()) throw MalformedLayout("<mi> must contain only text");
    t.text = Trim(el.text_content());
    if (IsFunctionName(t.text)) {
      t.kind = Token::Kind::kFunction;
    } else if (IsValidIdentifier(t.text)) {
      t.kind = Token::Kind::kIdentifier;
    } else {
      throw SyntaxError("invalid identifier '" + t.text + "' in <mi>", el.begin);
    }
    return t;
  }
  if (name == "mn") {
    if (!el.element_children().empty()) throw MalformedLayout("<mn> must contain only text");
    t.text = Trim(el.text_content());
    if (!IsValidNumber(t.text)) {
      throw SyntaxError("invalid number '" + t.text + "' in <mn>", el.begin);
    }
    t.kind = Token::Kind::kNumber;
    return t;
  }
  if (name == "mo") {
    if (!el.element_children().empty()) throw MalformedLayout("<mo> must contain only text");
    t.text = NormalizeOperator(Trim(el.text_content()));
    if (IsBinaryOperator(t.text)) {
      t.kind = Token::Kind::kOperator;
    } else if (t.text == "(") {
      t.kind = Token::Kind::kLParen;
    } else if (t.text == ")") {
      t.kind = Token::Kind::kRParen;
    } else if (t.text == ",") {
      t.kind = Token::Kind::kComma;
    } else {
      throw SyntaxError("unsupported operator '" + t.text + "' in <mo>", el.begin);
    }
    return t;
  }
  if (name == "mrow") return OperandToken(ParseRow(el), el.begin);
  if (name == "msup" || name == "mfrac") {
    RequireNoLooseText(el);
    const auto kids = el.element_children();
    if (kids.size() != 2) {
      throw MalformedLayout("<" + std::string(name) + "> needs exactly 2 children, got " +
                            std::to_string(kids.size()));
    }
    auto operand = [](const Node& child) {
      const Token inner = PresentationToken(child);
      switch (inner.kind) {
        case Token::Kind::kNumber: return Expr::Number(inner.text);
        case Token::Kind::kIdentifier: return Expr::Identifier(inner.text);
        case Token::Kind::kOperand: return inner.operand;
        default:
          throw MalformedLayout("<" + std::string(child.local_name()) +
                                "> cannot stand alone as a layout operand");
      }
    };
    Expr left = operand(*kids[0]);
    Expr right = operand(*kids[1]);
    return OperandToken(Expr::Binary(name == "msup" ? "^" : "/", std::move(left), std::move(right)),
                        el.begin);
  }
  if (name == "msqrt") {
    std::vector<Expr> args;
    args.push_back(ParseRow(el));
    return OperandToken(Expr::Call("sqrt", std::move(args)), el.begin);
  }
  throw UnsupportedElement(std::string(name));
}

bool EndsOperand(Token::Kind k) {
  return k == Token::Kind::kNumber || k == Token::Kind::kIdentifier || k == Token::Kind::kOperand;
}

bool StartsOperand(Token::Kind k) {
  return EndsOperand(k) || k == Token::Kind::kFunction;
}

Expr ParseRow(const Node& container) {
  RequireNoLooseText(container);
  std::vector<Token> tokens;
  for (const Node* child : container.element_children()) {
    Token t = PresentationToken(*child);
    if (!tokens.empty() && EndsOperand(tokens.back().kind) && StartsOperand(t.kind)) {
      throw MalformedLayout("adjacent operands without an <mo> at offset " +
                            std::to_string(child->begin));
    }
    tokens.push_back(std::move(t));
  }
  if (tokens.empty()) {
    throw MalformedLayout("empty <" + std::string(container.local_name()) + ">");
  }
  Token end;
  end.offset = container.end;
  tokens.push_back(std::move(end));
  return detail::ParseTokens(tokens);
}

// ---- content ----

Expr ParseContentNode(const Node& el) {
  const std::string_view name = el.local_name();
  if (name == "ci") {
    const std::string text = Trim(el.text_content());
    if (!IsValidIdentifier(text)) {
      throw SyntaxError("invalid identifier '" + text + "' in <ci>", el.begin);
    }
    return Expr::Identifier(text);
  }
  if (name == "cn") {
    const std::string text = Trim(el.text_content());
    if (!IsValidNumber(text)) throw SyntaxError("invalid number '" + text + "' in <cn>", el.begin);
    return Expr::Number(text);
  }
  if (name != "apply") {
    if (!SymbolForElement(name).empty()) {
      throw MalformedLayout("operator <" + std::string(name) + "/> outside <apply>");
    }
    throw UnsupportedElement(std::string(name));
  }
  RequireNoLooseText(el);
  const auto kids = el.element_children();
  if (kids.empty()) throw ArityError("empty <apply>");
  const std::string_view op_name = kids[0]->local_name();
  const std::string symbol(SymbolForElement(op_name));
  if (symbol.empty()) {
    if (op_name == "apply" || op_name == "ci" || op_name == "cn") {
      throw MalformedLayout("<apply> must start with an operator element");
    }
    throw UnsupportedElement(std::string(op_name));
  }
  if (!kids[0]->element_children().empty() || !Trim(kids[0]->text_content()).empty()) {
    throw MalformedLayout("operator element <" + std::string(op_name) + "/> must be empty");
  }
  std::vector<Expr> operands;
  for (std::size_t i = 1; i < kids.size(); ++i) operands.push_back(ParseContentNode(*kids[i]));
  const std::size_t n = operands.size();
  auto arity_error = [&](const char* expected) {
    return ArityError("<" + std::string(op_name) + "/> expects " + expected + " operand(s), got " +
                      std::to_string(n));
  };

  if (symbol == "-") {
    if (n == 1) return Expr::Unary("-", std::move(operands[0]));
    if (n == 2) return Expr::Binary("-", std::move(operands[0]), std::move(operands[1]));
    throw arity_error("1 or 2");
  }
  if (IsBinaryOperator(symbol)) {
    if (n != 2) throw arity_error("2");
    return Expr::Binary(symbol, std::move(operands[0]), std::move(operands[1]));
  }
  const int arity = FunctionArity(symbol);
  if (static_cast<int>(n) != arity) throw arity_error(arity == 1 ? "1" : "2");
  return Expr::Call(symbol, std::move(operands));
}

void WriteContent(const Expr& e, bool annotate, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::kIdentifier:
      out += annotate ? "<ci property=\"m:identifier\">" : "<ci>";
      out += xml::EscapeText(e.symbol);
      out += "</ci>";
      return;
    case Expr::Kind::kNumber:
      out += annotate ? "<cn property=\"m:number\">" : "<cn>";
      out += xml::EscapeText(e.symbol);
      out += "</cn>";
      return;
    case Expr::Kind::kUnary:
    case Expr::Kind::kBinary:
    case Expr::Kind::kCall: {
      out += "<apply><";
      out += ElementForSymbol(e.symbol);
      if (annotate) {
        out += e.args.size() == 1 ? " property=\"m:unary-operator\"" : " property=\"m:binary-operator\"";
      }
      out += "/>";
      for (const Expr& arg : e.args) WriteContent(arg, annotate, out);
      out += "</apply>";
      return;
    }
  }
}

}  // namespace

Expr ParsePresentation(const Node& math_element) {
  if (math_element.local_name() != "math") throw MalformedLayout("expected <math>");
  return ParseRow(math_element);
}

Expr ParsePresentation(std::string_view xml_text) {
  return ParsePresentation(RootMath(xml::Parse(xml_text)));
}

Expr ParseContent(const Node& math_element) {
  if (math_element.local_name() != "math") throw MalformedLayout("expected <math>");
  RequireNoLooseText(math_element);
  const auto kids = math_element.element_children();
  if (kids.size() != 1) {
    throw MalformedLayout("content <math> needs exactly one child, got " + std::to_string(kids.size()));
  }
  return ParseContentNode(*kids[0]);
}

Expr ParseContent(std::string_view xml_text) {
  return ParseContent(RootMath(xml::Parse(xml_text)));
}

std::string ToContent(const Expr& e) {
  std::string out = "<math>";
  WriteContent(e, false, out);
  out += "</math>";
  return out;
}

std::string ToAnnotatedContent(const Expr& e, std::string_view math_attributes) {
  std::string out = "<math";
  out += math_attributes;
  out += ">";
  WriteContent(e, true, out);
  out += "</math>";
  return out;
}

bool IsContentMarkup(const Node& math_element) {
  const auto kids = math_element.element_children();
  if (kids.empty()) return false;
  const std::string_view first = kids[0]->local_name();
  return first == "apply" || first == "ci" || first == "cn";
}

Expr ParseAny(const Node& math_element) {
  return IsContentMarkup(math_element) ? ParseContent(math_element)
                                       : ParsePresentation(math_element);
}

}  // namespace mathsearch::mathml
