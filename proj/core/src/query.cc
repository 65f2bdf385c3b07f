#include <cctype>
#include <charconv>
#include <regex>

#include "expr_parser.h"
#include "mathsearch/errors.h"
#include "mathsearch/ontology.h"
#include "mathsearch/search.h"

namespace mathsearch {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool StartsWithIgnoreCase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  }
  return true;
}

const std::regex& PairGroup() {
  static const std::regex re(R"(\(\s*([^\s,()]+)\s*,\s*(-?[0-9]+)\s*\))");
  return re;
}

// True when the text is nothing but "(op,k)" groups.
bool IsPairedQuery(std::string_view text) {
  static const std::regex only(R"(^(\s*\(\s*[^\s,()]+\s*,\s*-?[0-9]+\s*\))+\s*$)");
  return std::regex_match(text.begin(), text.end(), only);
}

bool HasOperatorPairGroup(std::string_view text) {
  const std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), PairGroup()); it != std::sregex_iterator();
       ++it) {
    if (IsBinaryOperator((*it)[1].str())) return true;
  }
  return false;
}

void ParsePairs(std::string_view text, Query& q) {
  const std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), PairGroup()); it != std::sregex_iterator();
       ++it) {
    const std::string op = (*it)[1].str();
    const std::string digits = (*it)[2].str();
    if (!IsBinaryOperator(op) && !IsFunctionName(op)) {
      throw BadPairSyntax("unknown operator '" + op + "' in pair " + it->str());
    }
    int order = 0;
    const auto [ptr, err] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
    if (err != std::errc() || ptr != digits.data() + digits.size() || order < 1) {
      throw BadPairSyntax("evaluation order must be at least 1 in pair " + it->str());
    }
    if (!q.drop_pairs) ++q.terms[PairTerm(op, order)];
  }
}

void ParseBag(std::string_view text, Query& q) {
  bool any = false;
  for (const detail::Token& t : detail::Lex(text)) {
    switch (t.kind) {
      case detail::Token::Kind::kNumber:
      case detail::Token::Kind::kIdentifier:
        any = true;
        q.identifiers.insert(t.text);
        if (!q.structural) ++q.terms[t.text];
        break;
      case detail::Token::Kind::kOperator:
      case detail::Token::Kind::kFunction:
        any = true;
        ++q.terms[t.text];
        break;
      default:
        break;
    }
  }
  if (!any) throw EmptyQuery();
}

}  // namespace

std::string_view QueryModeName(QueryMode m) {
  switch (m) {
    case QueryMode::kKeyword: return "keyword";
    case QueryMode::kMathBag: return "math_bag";
    case QueryMode::kMathPaired: return "math_paired";
    case QueryMode::kMathExpr: return "math_expr";
  }
  return "keyword";
}

Query ParseQuery(std::string_view input, const QueryFlags& flags) {
  Query q;
  q.require_all_identifiers = flags.exact;
  q.drop_pairs = flags.no_order;
  if (flags.top_k < 1) throw InputError("top-k must be at least 1");
  q.top_k = flags.top_k;
  if (flags.source) {
    const std::optional<ConceptId> c = FindUpperConcept(*flags.source);
    if (!c) throw UnknownConcept(*flags.source);
    q.source_filter = c->name;
  }
  if (flags.category) {
    const std::optional<CategoryName> c = ParseCategory(*flags.category);
    if (!c) throw InputError("unknown category '" + *flags.category + "'");
    q.category_filter = std::string(CategoryString(*c));
  }

  const std::string_view text = Trim(input);
  if (text.empty()) throw EmptyQuery();

  if (!StartsWithIgnoreCase(text, "math:")) {
    q.mode = QueryMode::kKeyword;
    for (const std::string& w : TextWords(text)) ++q.terms[w];
    if (q.terms.empty()) throw EmptyQuery();
    return q;
  }

  q.structural = flags.structural;
  const std::string_view body = Trim(text.substr(5));
  if (body.empty()) throw EmptyQuery();

  if (IsPairedQuery(body)) {
    q.mode = QueryMode::kMathPaired;
    ParsePairs(body, q);
    return q;
  }
  if (HasOperatorPairGroup(body)) {
    throw BadPairSyntax("pair groups cannot be mixed with other query terms");
  }

  Expr expr;
  try {
    expr = ParseText(body);
  } catch (const SyntaxError&) {
    q.mode = QueryMode::kMathBag;
    ParseBag(body, q);
    return q;
  }
  q.mode = QueryMode::kMathExpr;
  for (const std::string& leaf : LeafTokens(expr)) q.identifiers.insert(leaf);
  const std::vector<std::string> terms =
      q.structural ? StructuralTerms(expr, !q.drop_pairs) : MathTerms(expr, !q.drop_pairs);
  for (const std::string& t : terms) ++q.terms[t];
  return q;
}

}  // namespace mathsearch
