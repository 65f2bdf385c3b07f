#ifndef MATHSEARCH_ONTOLOGY_H_
#define MATHSEARCH_ONTOLOGY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathsearch/expr.h"

namespace mathsearch {

enum class Layer { kUpper, kBottom };

struct ConceptId {
  std::string name;
  Layer layer = Layer::kUpper;

  friend bool operator==(const ConceptId&, const ConceptId&) = default;
};

enum class Predicate { kSubClassOf, kConsistOf, kIsSolvedBy, kHasTag, kPartOf };

std::string_view PredicateName(Predicate p);

struct Relation {
  std::string subject;
  Predicate predicate = Predicate::kSubClassOf;
  std::string object;

  friend bool operator==(const Relation&, const Relation&) = default;
};

enum class CategoryName { kCalculus, kTrigonometric, kLogExp, kPolynomial, kArithmetic, kOther };

std::string_view CategoryString(CategoryName c);
std::optional<CategoryName> ParseCategory(std::string_view name);

struct Category {
  CategoryName name = CategoryName::kOther;
  bool equation = false;  // contains `=`

  friend bool operator==(const Category&, const Category&) = default;
};

// First matching rule wins: int/diff -> calculus; sin/cos/tan ->
// trigonometric; log/exp -> logexp; {+,-,*,^} with integer exponents over at
// least one identifier -> polynomial; {+,-,*,/} over numbers only ->
// arithmetic; anything else -> other. `=` is allowed by the last two rules
// and recorded in `equation`.
Category Classify(const Expr& e);

// Course-structure concepts (Activity, Lesson, Quiz, ...) and the category
// concepts. The returned tables are fixed.
const std::vector<ConceptId>& UpperConcepts();
const std::vector<Relation>& UpperRelations();

// Case-insensitive lookup among the upper concepts.
std::optional<ConceptId> FindUpperConcept(std::string_view name);

// Maps a page URL to the course component it belongs to. The first path
// segment naming a component (lesson, quiz, assignment, wiki, forum,
// glossary, resource; plural and numbered forms allowed) wins; Resource
// otherwise.
ConceptId SourceFromUrl(std::string_view url);

// Path part of a URL: scheme, authority, query and fragment removed.
std::string UrlPath(std::string_view url);

struct TagRecord {
  std::string resource_uri;
  ConceptId concept_id;
  std::string tag;
  int count = 0;

  friend bool operator==(const TagRecord&, const TagRecord&) = default;
};

// Tag store backing the bottom ontology. Single writer; const members are
// safe to call from several readers.
class TagStore {
 public:
  TagStore() = default;

  // Lowercases the tag and bumps the (resource, concept, tag) counter.
  // Returns how often the tag has now been put on the resource.
  // Throws UnknownConcept when the concept is neither upper nor promoted.
  int AddTag(std::string_view resource_uri, std::string_view concept_name, std::string_view tag);

  // (tag, count) for one resource, count descending then tag ascending.
  std::vector<std::pair<std::string, int>> TagCloud(std::string_view resource_uri) const;

  // Promotes every tag whose total count reaches `threshold` into a bottom
  // concept under the concept it was most often filed under (alphabetical on
  // ties). Returns only the concepts created by this call.
  std::vector<ConceptId> PromoteTags(int threshold);

  std::optional<ConceptId> FindConcept(std::string_view name) const;
  const std::vector<ConceptId>& bottom_concepts() const { return bottom_; }
  // subClassOf parent of a bottom concept.
  std::optional<std::string> ParentOf(std::string_view concept_name) const;
  // Upper relations plus subClassOf edges of promoted concepts and the
  // hasTag edges of every record.
  std::vector<Relation> Relations() const;
  std::vector<TagRecord> Records() const;

  // Line format: resource_uri<TAB>concept<TAB>tag<TAB>count. Promoted
  // concepts are kept on leading `#bottom<TAB>name<TAB>parent` lines.
  void Save(const std::filesystem::path& path) const;
  static TagStore Load(const std::filesystem::path& path);

 private:
  // resource -> tag -> concept -> count
  std::map<std::string, std::map<std::string, std::map<std::string, int>>> counts_;
  std::vector<ConceptId> bottom_;
  std::map<std::string, std::string> parents_;
};

}  // namespace mathsearch

#endif  // MATHSEARCH_ONTOLOGY_H_
