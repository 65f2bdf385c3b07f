#include <algorithm>
#include <cctype>
#include <map>

#include "mathsearch/errors.h"
#include "mathsearch/search.h"

namespace mathsearch {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool IsVarChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class SparqlReader {
 public:
  explicit SparqlReader(std::string_view text) : text_(text) {}

  SparqlQuery Read() {
    SparqlQuery q;
    ExpectKeyword("SELECT");
    SkipSpace();
    if (Peek() == '*') {
      ++pos_;
      q.select_all = true;
    } else {
      while (Peek() == '?' || Peek() == '$') q.select_vars.push_back(ReadVariable());
      if (q.select_vars.empty()) Fail("expected '*' or variables after SELECT");
    }
    SkipSpace();
    if (AtKeyword("FROM")) {
      ExpectKeyword("FROM");
      SkipSpace();
      if (Peek() != '<') Fail("expected <reference> after FROM");
      q.from = ReadIri();
    }
    ExpectKeyword("WHERE");
    SkipSpace();
    if (Peek() != '{') Fail("expected '{'");
    ++pos_;
    for (;;) {
      SkipSpace();
      if (Peek() == '}') {
        ++pos_;
        break;
      }
      if (Peek() == '\0') Fail("unterminated pattern block");
      TriplePattern p;
      p.subject = ReadTerm();
      p.predicate = ReadPredicate();
      p.object = ReadTerm();
      q.patterns.push_back(std::move(p));
      SkipSpace();
      if (Peek() == '.') {
        ++pos_;
      } else if (Peek() != '}') {
        Fail("expected '.' or '}' after pattern");
      }
    }
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    if (q.patterns.empty()) Fail("WHERE block has no patterns");
    return q;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("SPARQL: " + what + " at offset " + std::to_string(pos_));
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  bool AtKeyword(std::string_view kw) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    }
    const std::size_t after = pos_ + kw.size();
    return after == text_.size() || !IsVarChar(text_[after]);
  }

  void ExpectKeyword(std::string_view kw) {
    SkipSpace();
    if (!AtKeyword(kw)) Fail("expected " + std::string(kw));
    pos_ += kw.size();
  }

  std::string ReadVariable() {
    ++pos_;  // '?' or '$'
    const std::size_t start = pos_;
    while (pos_ < text_.size() && IsVarChar(text_[pos_])) ++pos_;
    if (start == pos_) Fail("empty variable name");
    std::string name(text_.substr(start, pos_ - start));
    SkipSpace();
    return name;
  }

  std::string ReadIri() {
    const std::size_t close = text_.find('>', pos_);
    if (close == std::string_view::npos) Fail("unterminated <reference>");
    std::string iri(text_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    return iri;
  }

  std::string ReadQuoted() {
    const char quote = text_[pos_++];
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != quote) {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) Fail("unterminated string literal");
    ++pos_;
    return out;
  }

  // Bare token: stops at whitespace, '}', or a '.' that ends the pattern.
  std::string ReadBare() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (IsSpace(c) || c == '}' || c == '{') break;
      if (c == '.' && (pos_ + 1 == text_.size() || IsSpace(text_[pos_ + 1]) || text_[pos_ + 1] == '}')) {
        break;
      }
      ++pos_;
    }
    if (start == pos_) Fail("expected a term");
    return std::string(text_.substr(start, pos_ - start));
  }

  SparqlTerm ReadTerm() {
    SkipSpace();
    const char c = Peek();
    if (c == '\0') Fail("unexpected end of query");
    if (c == '?' || c == '$') return {true, ReadVariable()};
    if (c == '<') return {false, ReadIri()};
    if (c == '"' || c == '\'') return {false, ReadQuoted()};
    return {false, ReadBare()};
  }

  std::string ReadPredicate() {
    SkipSpace();
    if (Peek() == '?' || Peek() == '$') Fail("variable predicates are not supported");
    std::string p = Peek() == '<' ? ReadIri() : ReadBare();
    if (p.rfind("m:", 0) == 0) p = p.substr(2);
    const auto& known = AnnotationPredicates();
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      Fail("unknown predicate '" + p + "'");
    }
    return p;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

using Assignment = std::map<std::string, std::string>;

bool Unify(const SparqlTerm& term, const std::string& value, Assignment& a,
           std::vector<std::string>& bound_here) {
  if (!term.is_variable) return term.text == value;
  const auto it = a.find(term.text);
  if (it != a.end()) return it->second == value;
  a.emplace(term.text, value);
  bound_here.push_back(term.text);
  return true;
}

void Join(const std::vector<TriplePattern>& patterns, std::size_t i,
          const std::multimap<std::string, const Triple*>& by_predicate, Assignment& a,
          std::vector<Assignment>& out) {
  if (i == patterns.size()) {
    out.push_back(a);
    return;
  }
  const TriplePattern& p = patterns[i];
  const auto [lo, hi] = by_predicate.equal_range(p.predicate);
  for (auto it = lo; it != hi; ++it) {
    const Triple& t = *it->second;
    std::vector<std::string> bound_here;
    if (Unify(p.subject, t.subject, a, bound_here) && Unify(p.object, t.object, a, bound_here)) {
      Join(patterns, i + 1, by_predicate, a, out);
    }
    for (const std::string& v : bound_here) a.erase(v);
  }
}

}  // namespace

std::vector<std::string> SparqlQuery::PatternVariables() const {
  std::vector<std::string> out;
  auto note = [&](const SparqlTerm& t) {
    if (t.is_variable && std::find(out.begin(), out.end(), t.text) == out.end()) out.push_back(t.text);
  };
  for (const TriplePattern& p : patterns) {
    note(p.subject);
    note(p.object);
  }
  return out;
}

std::vector<std::string> SparqlQuery::ProjectedVariables() const {
  return select_all ? PatternVariables() : select_vars;
}

SparqlQuery ParseSparql(std::string_view text) {
  SparqlQuery q = SparqlReader(text).Read();
  const std::vector<std::string> vars = q.PatternVariables();
  for (const std::string& v : q.select_vars) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) throw UnboundSelectVar("?" + v);
  }
  return q;
}

std::vector<Binding> SparqlSelect(const std::vector<Triple>& triples, const SparqlQuery& q) {
  const std::vector<std::string> vars = q.PatternVariables();
  for (const std::string& v : q.select_vars) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) throw UnboundSelectVar("?" + v);
  }

  // The graph is a set: duplicate triples contribute one solution.
  std::vector<Triple> graph = triples;
  std::sort(graph.begin(), graph.end());
  graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
  std::multimap<std::string, const Triple*> by_predicate;
  for (const Triple& t : graph) by_predicate.emplace(t.predicate, &t);

  std::vector<Assignment> solutions;
  Assignment scratch;
  Join(q.patterns, 0, by_predicate, scratch, solutions);

  auto key = [&](const Assignment& a) {
    std::vector<std::string> k;
    k.reserve(vars.size());
    for (const std::string& v : vars) k.push_back(a.at(v));
    return k;
  };
  std::sort(solutions.begin(), solutions.end(),
            [&](const Assignment& x, const Assignment& y) { return key(x) < key(y); });

  std::vector<Binding> out;
  out.reserve(solutions.size());
  for (const Assignment& a : solutions) {
    Binding row;
    for (const std::string& v : q.ProjectedVariables()) row.emplace_back(v, a.at(v));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace mathsearch
