#include "mathsearch/ontology.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mathsearch/errors.h"

namespace mathsearch {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() && Lower(a) == Lower(b);
}

std::string Trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

bool HasControlSeparator(std::string_view s) {
  return s.find_first_of("\t\r\n") != std::string_view::npos;
}

constexpr std::array<std::string_view, 7> kSourceComponents{
    "lesson", "quiz", "assignment", "wiki", "forum", "glossary", "resource"};

bool IsIntegerLiteral(const Expr& e) {
  return e.kind == Expr::Kind::kNumber &&
         e.symbol.find('.') == std::string::npos;
}

bool IsPolynomialShape(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
    case Expr::Kind::kIdentifier:
      return true;
    case Expr::Kind::kUnary:
      return IsPolynomialShape(e.args[0]);
    case Expr::Kind::kBinary:
      if (e.symbol == "^") return IsPolynomialShape(e.args[0]) && IsIntegerLiteral(e.args[1]);
      if (e.symbol == "+" || e.symbol == "-" || e.symbol == "*" || e.symbol == "=") {
        return IsPolynomialShape(e.args[0]) && IsPolynomialShape(e.args[1]);
      }
      return false;
    case Expr::Kind::kCall:
      return false;
  }
  return false;
}

bool IsArithmeticShape(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
      return true;
    case Expr::Kind::kIdentifier:
    case Expr::Kind::kCall:
      return false;
    case Expr::Kind::kUnary:
      return IsArithmeticShape(e.args[0]);
    case Expr::Kind::kBinary:
      if (e.symbol == "^") return false;
      return IsArithmeticShape(e.args[0]) && IsArithmeticShape(e.args[1]);
  }
  return false;
}

bool HasIdentifier(const Expr& e) {
  if (e.kind == Expr::Kind::kIdentifier) return true;
  return std::any_of(e.args.begin(), e.args.end(), HasIdentifier);
}

bool SegmentNames(std::string segment, std::string_view component) {
  segment = Lower(segment);
  segment = segment.substr(0, segment.find('.'));
  while (!segment.empty() && std::isdigit(static_cast<unsigned char>(segment.back())) != 0) {
    segment.pop_back();
  }
  const std::string base(component);
  return segment == base || segment == base + "s" || segment == base + "es" ||
         segment == base + base.back() + "es";
}

}  // namespace

std::string_view PredicateName(Predicate p) {
  switch (p) {
    case Predicate::kSubClassOf: return "subClassOf";
    case Predicate::kConsistOf: return "consistOf";
    case Predicate::kIsSolvedBy: return "isSolvedBy";
    case Predicate::kHasTag: return "hasTag";
    case Predicate::kPartOf: return "partOf";
  }
  return "";
}

std::string_view CategoryString(CategoryName c) {
  switch (c) {
    case CategoryName::kCalculus: return "calculus";
    case CategoryName::kTrigonometric: return "trigonometric";
    case CategoryName::kLogExp: return "logexp";
    case CategoryName::kPolynomial: return "polynomial";
    case CategoryName::kArithmetic: return "arithmetic";
    case CategoryName::kOther: return "other";
  }
  return "other";
}

std::optional<CategoryName> ParseCategory(std::string_view name) {
  for (CategoryName c : {CategoryName::kCalculus, CategoryName::kTrigonometric,
                         CategoryName::kLogExp, CategoryName::kPolynomial,
                         CategoryName::kArithmetic, CategoryName::kOther}) {
    if (EqualsIgnoreCase(CategoryString(c), name)) return c;
  }
  return std::nullopt;
}

Category Classify(const Expr& e) {
  Category out;
  out.equation = ContainsSymbol(e, "=");
  auto contains_any = [&](std::initializer_list<std::string_view> symbols) {
    return std::any_of(symbols.begin(), symbols.end(),
                       [&](std::string_view s) { return ContainsSymbol(e, s); });
  };
  if (contains_any({"int", "diff"})) {
    out.name = CategoryName::kCalculus;
  } else if (contains_any({"sin", "cos", "tan"})) {
    out.name = CategoryName::kTrigonometric;
  } else if (contains_any({"log", "exp"})) {
    out.name = CategoryName::kLogExp;
  } else if (HasIdentifier(e) && IsPolynomialShape(e)) {
    out.name = CategoryName::kPolynomial;
  } else if (IsArithmeticShape(e)) {
    out.name = CategoryName::kArithmetic;
  } else {
    out.name = CategoryName::kOther;
  }
  return out;
}

const std::vector<ConceptId>& UpperConcepts() {
  static const std::vector<ConceptId> concepts = [] {
    std::vector<ConceptId> out;
    for (std::string_view name : {"Activity", "Lesson", "Glossary", "Assignment", "Wiki", "Forum",
                                  "Resource", "Quiz", "Question", "Post", "Student"}) {
      out.push_back({std::string(name), Layer::kUpper});
    }
    for (CategoryName c : {CategoryName::kCalculus, CategoryName::kTrigonometric,
                           CategoryName::kLogExp, CategoryName::kPolynomial,
                           CategoryName::kArithmetic, CategoryName::kOther}) {
      out.push_back({std::string(CategoryString(c)), Layer::kUpper});
    }
    return out;
  }();
  return concepts;
}

const std::vector<Relation>& UpperRelations() {
  static const std::vector<Relation> relations = [] {
    std::vector<Relation> out;
    for (std::string_view activity :
         {"Lesson", "Glossary", "Assignment", "Wiki", "Forum", "Resource", "Quiz"}) {
      out.push_back({std::string(activity), Predicate::kSubClassOf, "Activity"});
    }
    out.push_back({"Quiz", Predicate::kConsistOf, "Question"});
    out.push_back({"Question", Predicate::kPartOf, "Quiz"});
    out.push_back({"Post", Predicate::kPartOf, "Forum"});
    out.push_back({"Assignment", Predicate::kIsSolvedBy, "Student"});
    return out;
  }();
  return relations;
}

std::optional<ConceptId> FindUpperConcept(std::string_view name) {
  for (const ConceptId& c : UpperConcepts()) {
    if (EqualsIgnoreCase(c.name, name)) return c;
  }
  return std::nullopt;
}

std::string UrlPath(std::string_view url) {
  url = url.substr(0, url.find_first_of("?#"));
  const std::size_t scheme = url.find("://");
  if (scheme != std::string_view::npos) {
    const std::string_view rest = url.substr(scheme + 3);
    const std::size_t slash = rest.find('/');
    return slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
  }
  if (url.empty() || url.front() == '/') return std::string(url);
  // "www.example.com/lesson/x.htm": a dotted first segment followed by more
  // path is taken to be a host name.
  const std::size_t slash = url.find('/');
  if (slash != std::string_view::npos && url.substr(0, slash).find('.') != std::string_view::npos) {
    return std::string(url.substr(slash));
  }
  return std::string(url);
}

ConceptId SourceFromUrl(std::string_view url) {
  const std::string path = UrlPath(url);
  std::istringstream segments(path);
  std::string segment;
  while (std::getline(segments, segment, '/')) {
    if (segment.empty()) continue;
    for (std::string_view component : kSourceComponents) {
      if (SegmentNames(segment, component)) return *FindUpperConcept(component);
    }
  }
  return *FindUpperConcept("Resource");
}

int TagStore::AddTag(std::string_view resource_uri, std::string_view concept_name,
                     std::string_view tag) {
  const std::optional<ConceptId> c = FindConcept(concept_name);
  if (!c) throw UnknownConcept(std::string(concept_name));
  const std::string normalized = Lower(Trim(tag));
  if (normalized.empty() || HasControlSeparator(normalized)) {
    throw InputError("invalid tag '" + std::string(tag) + "'");
  }
  if (resource_uri.empty() || resource_uri.front() == '#' || HasControlSeparator(resource_uri)) {
    throw InputError("invalid resource uri '" + std::string(resource_uri) + "'");
  }
  auto& by_concept = counts_[std::string(resource_uri)][normalized];
  ++by_concept[c->name];
  int total = 0;
  for (const auto& [unused, n] : by_concept) total += n;
  return total;
}

std::vector<std::pair<std::string, int>> TagStore::TagCloud(std::string_view resource_uri) const {
  std::vector<std::pair<std::string, int>> out;
  const auto it = counts_.find(std::string(resource_uri));
  if (it == counts_.end()) return out;
  for (const auto& [tag, by_concept] : it->second) {
    int total = 0;
    for (const auto& [unused, n] : by_concept) total += n;
    out.emplace_back(tag, total);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

std::vector<ConceptId> TagStore::PromoteTags(int threshold) {
  if (threshold < 1) throw InputError("promotion threshold must be at least 1");
  // tag -> concept -> count, across every resource
  std::map<std::string, std::map<std::string, int>> totals;
  for (const auto& [resource, tags] : counts_) {
    for (const auto& [tag, by_concept] : tags) {
      for (const auto& [concept_name, n] : by_concept) totals[tag][concept_name] += n;
    }
  }
  std::vector<ConceptId> created;
  for (const auto& [tag, by_concept] : totals) {
    int total = 0;
    for (const auto& [unused, n] : by_concept) total += n;
    if (total < threshold || FindConcept(tag)) continue;
    std::string parent;
    int best = 0;
    for (const auto& [concept_name, n] : by_concept) {
      if (n > best) {
        best = n;
        parent = concept_name;
      }
    }
    ConceptId promoted{tag, Layer::kBottom};
    bottom_.push_back(promoted);
    parents_[tag] = parent;
    created.push_back(std::move(promoted));
  }
  return created;
}

std::optional<ConceptId> TagStore::FindConcept(std::string_view name) const {
  if (auto upper = FindUpperConcept(name)) return upper;
  for (const ConceptId& c : bottom_) {
    if (EqualsIgnoreCase(c.name, name)) return c;
  }
  return std::nullopt;
}

std::optional<std::string> TagStore::ParentOf(std::string_view concept_name) const {
  const auto it = parents_.find(std::string(concept_name));
  if (it == parents_.end()) return std::nullopt;
  return it->second;
}

std::vector<Relation> TagStore::Relations() const {
  std::vector<Relation> out = UpperRelations();
  for (const ConceptId& c : bottom_) {
    out.push_back({c.name, Predicate::kSubClassOf, parents_.at(c.name)});
  }
  for (const TagRecord& r : Records()) {
    const Relation edge{r.concept_id.name, Predicate::kHasTag, r.tag};
    if (std::find(out.begin(), out.end(), edge) == out.end()) out.push_back(edge);
  }
  return out;
}

std::vector<TagRecord> TagStore::Records() const {
  std::vector<TagRecord> out;
  for (const auto& [resource, tags] : counts_) {
    for (const auto& [tag, by_concept] : tags) {
      for (const auto& [concept_name, n] : by_concept) {
        out.push_back({resource, *FindConcept(concept_name), tag, n});
      }
    }
  }
  return out;
}

void TagStore::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write tag store " + path.string());
  for (const ConceptId& c : bottom_) {
    out << "#bottom\t" << c.name << '\t' << parents_.at(c.name) << '\n';
  }
  for (const TagRecord& r : Records()) {
    out << r.resource_uri << '\t' << r.concept_id.name << '\t' << r.tag << '\t' << r.count << '\n';
  }
  if (!out) throw IoError("failed writing tag store " + path.string());
}

TagStore TagStore::Load(const std::filesystem::path& path) {
  TagStore store;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return store;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read tag store " + path.string());
  std::string line;
  int line_no = 0;
  auto bad = [&](const std::string& what) {
    return FormatError(path.string() + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream split(line);
    std::string field;
    while (std::getline(split, field, '\t')) fields.push_back(field);
    if (fields[0] == "#bottom") {
      if (fields.size() != 3) throw bad("bottom concept line needs name and parent");
      if (store.FindConcept(fields[1])) throw bad("duplicate concept '" + fields[1] + "'");
      if (!store.FindConcept(fields[2])) throw bad("unknown parent '" + fields[2] + "'");
      store.bottom_.push_back({fields[1], Layer::kBottom});
      store.parents_[fields[1]] = store.FindConcept(fields[2])->name;
      continue;
    }
    if (line.front() == '#') continue;
    if (fields.size() != 4) throw bad("expected 4 tab-separated fields");
    const std::optional<ConceptId> c = store.FindConcept(fields[1]);
    if (!c) throw bad("unknown concept '" + fields[1] + "'");
    int count = 0;
    const auto [ptr, err] =
        std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), count);
    if (err != std::errc() || ptr != fields[3].data() + fields[3].size() || count < 1) {
      throw bad("count must be a positive integer");
    }
    if (fields[0].empty() || fields[2].empty() || Lower(fields[2]) != fields[2]) {
      throw bad("empty resource or non-lowercase tag");
    }
    store.counts_[fields[0]][fields[2]][c->name] += count;
  }
  return store;
}

}  // namespace mathsearch
