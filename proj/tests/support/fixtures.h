#ifndef MATHSEARCH_TESTS_FIXTURES_H_
#define MATHSEARCH_TESTS_FIXTURES_H_

#include <map>
#include <string>
#include <vector>

#include "mathsearch/annotate.h"
#include "mathsearch/search.h"

namespace mathsearch::testing {

// Annotation for equation `n` of `page_url`, written in the text grammar.
Annotation MakeAnnotation(const std::string& page_url, int n, const std::string& text,
                          const std::string& description = "");

// Ten equations across lessons, quizzes, a wiki, a forum, an assignment and
// the glossary. Doc 4 is the only one described as NewtonEquation; docs 1
// and 7 are the only lesson calculus docs and both mention "integral".
std::vector<Annotation> TenDocCorpus();

struct NamedCorpus {
  std::string name;
  std::vector<Annotation> docs;
};

// Every corpus (of at most ten documents) used for oracle comparisons.
std::vector<NamedCorpus> RankingCorpora();

struct BatteryQuery {
  std::string text;
  QueryFlags flags;
  std::string label;
};

// Queries in all four modes crossed with every flag.
std::vector<BatteryQuery> QueryBattery();

// Flat presentation markup (mi/mn/mo inside one mrow) for an expression,
// built from its canonical text.
std::string FlatPresentation(const Expr& e);

struct SyntheticPage {
  std::string url;
  std::string xhtml;
  std::map<int, std::string> descriptions;
  std::vector<Annotation> expected;
};

// Deterministic page `i` with 1-4 equations mixing presentation and content
// markup, along with the annotations it must produce.
SyntheticPage MakeSyntheticPage(int i);

}  // namespace mathsearch::testing

#endif  // MATHSEARCH_TESTS_FIXTURES_H_
