#ifndef MATHSEARCH_SEARCH_H_
#define MATHSEARCH_SEARCH_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mathsearch/index.h"

namespace mathsearch {

enum class QueryMode { kKeyword, kMathBag, kMathPaired, kMathExpr };

std::string_view QueryModeName(QueryMode m);

// Options a user sets next to the query text.
struct QueryFlags {
  bool exact = false;       // every identifier/number of the query must occur
  bool structural = false;  // rank on operators and pairs only
  bool no_order = false;    // drop evaluation-order pairs
  std::optional<std::string> source;
  std::optional<std::string> category;
  int top_k = 10;
};

struct Query {
  QueryMode mode = QueryMode::kKeyword;
  TermCounts terms;                 // the query vector's raw counts
  std::set<std::string> identifiers;  // identifier and number terms seen in the query
  bool require_all_identifiers = false;
  bool structural = false;
  bool drop_pairs = false;
  std::optional<std::string> source_filter;    // canonical upper concept name
  std::optional<std::string> category_filter;  // canonical category name
  int top_k = 10;
};

// "Math:" (any case) switches to math mode. The remainder is read as
//   - only "(op,k)" groups          -> kMathPaired
//   - a text-grammar expression     -> kMathExpr
//   - loose identifiers/operators   -> kMathBag
// Anything else is a keyword query over lowercased words.
// Throws EmptyQuery, BadPairSyntax, SyntaxError, UnknownConcept, InputError.
Query ParseQuery(std::string_view input, const QueryFlags& flags = {});

// Sparse weight vector.
using WeightVector = std::map<std::string, double>;

// dot(a, b) / (|a| |b|); 0 when either norm is 0.
double Cosine(const WeightVector& a, const WeightVector& b);

struct RankedHit {
  double score = 0.0;
  int doc_id = 0;
  std::string anchor_link;
  std::string doc_uri;
  std::string source;
  std::string category;
  std::string description;
};

// Query-side weights: raw count times the index's idf for the field.
WeightVector QueryVector(const InvertedIndex& idx, const Query& q);

// Two phases: candidates are filtered and ranked by cosine similarity over
// the exact or structural field, then each survivor's annotation is looked
// up to produce the hit. Zero scores are dropped; order is score desc,
// doc_id asc; at most q.top_k hits.
std::vector<RankedHit> Search(const InvertedIndex& idx, const Query& q);

// ---- triple patterns ----

struct SparqlTerm {
  bool is_variable = false;
  std::string text;  // variable name without '?', or the literal

  friend bool operator==(const SparqlTerm&, const SparqlTerm&) = default;
};

struct TriplePattern {
  SparqlTerm subject;
  std::string predicate;
  SparqlTerm object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

struct SparqlQuery {
  bool select_all = false;
  std::vector<std::string> select_vars;  // without '?'
  std::optional<std::string> from;
  std::vector<TriplePattern> patterns;

  // Variables in order of first appearance in the patterns.
  std::vector<std::string> PatternVariables() const;
  // select_vars, or every pattern variable for SELECT *.
  std::vector<std::string> ProjectedVariables() const;
};

// SELECT (* | ?v ...) [FROM <ref>] WHERE { s p o . ... }
// Predicates are the five annotation predicates, optionally written with
// the m: prefix. Throws ParseError or UnboundSelectVar.
SparqlQuery ParseSparql(std::string_view text);

// One row per solution: (variable, value) pairs in projection order.
using Binding = std::vector<std::pair<std::string, std::string>>;

// Every assignment under which all patterns occur in `triples`. Rows are
// sorted by the values of the pattern variables in first-appearance order.
std::vector<Binding> SparqlSelect(const std::vector<Triple>& triples, const SparqlQuery& q);

}  // namespace mathsearch

#endif  // MATHSEARCH_SEARCH_H_
