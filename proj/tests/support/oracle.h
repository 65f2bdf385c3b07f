#ifndef MATHSEARCH_TESTS_ORACLE_H_
#define MATHSEARCH_TESTS_ORACLE_H_

// Brute-force reference implementations. They share no code path with the
// index's postings, df maps, cached norms or the SPARQL join.

#include <map>
#include <string>
#include <vector>

#include "mathsearch/annotate.h"
#include "mathsearch/search.h"

namespace mathsearch::testing {

struct OracleHit {
  int doc_id = 0;
  double score = 0.0;
};

// Dense tf-idf vectors over the whole vocabulary, every document scored.
std::vector<OracleHit> OracleSearch(const std::vector<Annotation>& corpus, const Query& q);

// Document frequencies recounted from scratch.
std::map<std::string, int> OracleDf(const std::vector<Annotation>& corpus, Field field);

// Per-pattern match sets joined pairwise on shared variables, then sorted
// and projected like SparqlSelect.
std::vector<Binding> OracleSparql(const std::vector<Triple>& triples, const SparqlQuery& q);

// Compares an implementation result to the oracle: same length, scores
// within `tol` position by position, and the same documents within every
// group of scores that tie within `tol`.
bool SameRanking(const std::vector<RankedHit>& hits, const std::vector<OracleHit>& expected,
                 double tol, std::string* why = nullptr);

}  // namespace mathsearch::testing

#endif  // MATHSEARCH_TESTS_ORACLE_H_
