#ifndef MATHSEARCH_ANNOTATE_H_
#define MATHSEARCH_ANNOTATE_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mathsearch {

inline constexpr std::string_view kVocabularyNamespace = "http://example.com/math/vocab#";

// One annotated equation.
struct Annotation {
  std::string doc_uri;      // page path + "#equationN"
  std::string anchor_link;  // page URL + "#equationN"
  std::string value;        // content MathML
  std::string source;       // upper concept name, e.g. Lesson
  std::string category;     // category name, e.g. polynomial
  std::string description;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Triple {
  std::string subject;
  std::string predicate;  // hasLink, hasValue, hasSource, hasCategory, hasDescription
  std::string object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// The five annotation predicates in emission order.
const std::vector<std::string>& AnnotationPredicates();

struct AnnotatedDocument {
  std::string xhtml;
  std::vector<Annotation> annotations;
  // One entry per math element that could not be parsed and was left as is.
  std::vector<std::string> warnings;
};

// Replaces the i-th parseable math element with an RDFa-annotated div:
//
//   <div xmlns:m="..." id="equationI" about="{path}#equationI">
//     <span property="m:hasLink" content="..."/> ... (five spans)
//     <math>annotated content MathML</math>
//   </div>
//
// Bytes outside the replaced math elements are copied unchanged.
// `descriptions` is keyed by the 1-based equation number.
AnnotatedDocument AnnotateDocument(std::string_view xhtml, std::string_view page_url,
                                   const std::map<int, std::string>& descriptions = {});

// Reads back every element that carries an `about` attribute and m:has*
// spans. Throws MissingField when one of the five spans is absent.
std::vector<Annotation> ExtractAnnotations(std::string_view xhtml);

std::vector<Triple> ToTriples(const std::vector<Annotation>& annotations);

// Line-delimited subject<TAB>predicate<TAB>object. Backslash, tab, CR and LF
// inside fields are written as \\, \t, \r and \n.
void WriteTriples(const std::vector<Triple>& triples, std::ostream& out);
std::vector<Triple> ReadTriples(std::istream& in);
std::vector<Triple> ReadTriplesFile(const std::filesystem::path& path);

}  // namespace mathsearch

#endif  // MATHSEARCH_ANNOTATE_H_
