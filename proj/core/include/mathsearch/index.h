#ifndef MATHSEARCH_INDEX_H_
#define MATHSEARCH_INDEX_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mathsearch/annotate.h"
#include "mathsearch/expr.h"

namespace mathsearch {

// Term -> raw occurrence count.
using TermCounts = std::map<std::string, int>;

// The exact field holds everything (identifiers, numbers, operators,
// evaluation-order pairs, description words, category, source); the
// structural field only operators and pairs.
enum class Field { kExact = 0, kStructural = 1 };

// "pair:OP:K" for operator OP evaluated K-th.
std::string PairTerm(std::string_view op, int order);
bool IsPairTerm(std::string_view term);
// "(OP,K)" for pair terms, the term itself otherwise.
std::string DisplayTerm(std::string_view term);

// Lowercased [a-z0-9]+ runs of free text.
std::vector<std::string> TextWords(std::string_view text);

// Math index terms of an expression: leaf names and literals, operator
// symbols and, when `with_pairs`, one pair term per evaluation-order entry.
std::vector<std::string> MathTerms(const Expr& e, bool with_pairs = true);
std::vector<std::string> StructuralTerms(const Expr& e, bool with_pairs = true);

struct TermFields {
  TermCounts exact;
  TermCounts structural;
};

// Throws MathParseError when the value is not valid content MathML.
TermFields Tokenize(const Annotation& a);

struct IndexedDoc {
  int doc_id = 0;
  Annotation annotation;
  TermCounts exact_tf;
  TermCounts structural_tf;

  const TermCounts& tf(Field f) const { return f == Field::kExact ? exact_tf : structural_tf; }

  friend bool operator==(const IndexedDoc&, const IndexedDoc&) = default;
};

struct Posting {
  int doc_id = 0;
  int tf = 0;
};

// Inverted index over annotations with tf-idf weighting,
// idf(t) = ln(1 + N / df(t)). Mutated only through Add; once built or loaded
// it can be shared by concurrent readers.
class InvertedIndex {
 public:
  InvertedIndex() = default;

  // Skipped (unparseable) annotations are reported in `warnings` when given.
  static InvertedIndex Build(const std::vector<Annotation>& annotations,
                             std::vector<std::string>* warnings = nullptr);

  // Appends one document and returns its id. Throws MathParseError.
  int Add(const Annotation& annotation);

  std::size_t size() const { return docs_.size(); }
  bool empty() const { return docs_.empty(); }
  const std::vector<IndexedDoc>& docs() const { return docs_; }
  const IndexedDoc& doc(int doc_id) const { return docs_.at(static_cast<std::size_t>(doc_id)); }

  int df(Field f, std::string_view term) const;
  const TermCounts& df_map(Field f) const { return df_[static_cast<int>(f)]; }

  // Inverse document frequency. Terms missing from the collection are
  // treated as occurring once so they still count against a query's norm.
  double Idf(Field f, std::string_view term) const;

  // tf(t, d) * idf(t); 0 when the term does not occur in the document.
  double Weight(Field f, std::string_view term, const IndexedDoc& d) const;

  // Euclidean norm of a document's weight vector over one field.
  double Norm(Field f, int doc_id) const;

  const std::vector<Posting>& Postings(Field f, std::string_view term) const;

  // Recomputes df from the documents; true when it matches the stored maps.
  bool CheckDocumentFrequencies() const;

  // JSON: {"version": 1, "N": n, "docs": [...]}; df is derived on load.
  void Save(const std::filesystem::path& path) const;
  std::string ToJson() const;
  static InvertedIndex Load(const std::filesystem::path& path);
  static InvertedIndex FromJson(std::string_view json);

  friend bool operator==(const InvertedIndex& a, const InvertedIndex& b) {
    return a.docs_ == b.docs_ && a.df_ == b.df_;
  }

 private:
  void Insert(IndexedDoc doc);
  void RefreshNorms();

  std::vector<IndexedDoc> docs_;
  std::array<TermCounts, 2> df_;
  std::array<std::map<std::string, std::vector<Posting>, std::less<>>, 2> postings_;
  std::array<std::vector<double>, 2> norms_;
};

}  // namespace mathsearch

#endif  // MATHSEARCH_INDEX_H_
