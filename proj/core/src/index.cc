#include "mathsearch/index.h"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mathsearch/errors.h"
#include "mathsearch/mathml.h"

namespace mathsearch {
namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr std::string_view kPairPrefix = "pair:";

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

int FieldIndex(Field f) { return static_cast<int>(f); }

bool IsStructuralTerm(std::string_view term) {
  return IsPairTerm(term) || IsBinaryOperator(term) || IsFunctionName(term);
}

json CountsToJson(const TermCounts& counts) {
  json out = json::object();
  for (const auto& [term, n] : counts) out[term] = n;
  return out;
}

TermCounts CountsFromJson(const json& j, const std::string& what) {
  if (!j.is_object()) throw FormatError("corrupt field '" + what + "': expected an object");
  TermCounts out;
  for (const auto& [term, n] : j.items()) {
    if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > INT32_MAX) {
      throw FormatError("corrupt field '" + what + "': count for '" + term +
                        "' must be a positive integer");
    }
    out[term] = n.get<int>();
  }
  return out;
}

const std::string& StringField(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_string()) {
    throw FormatError(std::string("corrupt field '") + key + "': expected a string");
  }
  return it->get_ref<const std::string&>();
}

}  // namespace

std::string PairTerm(std::string_view op, int order) {
  return std::string(kPairPrefix) + std::string(op) + ":" + std::to_string(order);
}

bool IsPairTerm(std::string_view term) {
  if (term.substr(0, kPairPrefix.size()) != kPairPrefix) return false;
  const std::size_t colon = term.rfind(':');
  if (colon <= kPairPrefix.size() || colon + 1 >= term.size()) return false;
  for (std::size_t i = colon + 1; i < term.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(term[i])) == 0) return false;
  }
  return term[colon + 1] != '0';
}

std::string DisplayTerm(std::string_view term) {
  if (!IsPairTerm(term)) return std::string(term);
  const std::size_t colon = term.rfind(':');
  return "(" + std::string(term.substr(kPairPrefix.size(), colon - kPairPrefix.size())) + "," +
         std::string(term.substr(colon + 1)) + ")";
}

std::vector<std::string> TextWords(std::string_view text) {
  std::vector<std::string> out;
  std::string word;
  for (char c : text) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if ((lower >= 'a' && lower <= 'z') || (lower >= '0' && lower <= '9')) {
      word += lower;
    } else if (!word.empty()) {
      out.push_back(std::move(word));
      word.clear();
    }
  }
  if (!word.empty()) out.push_back(std::move(word));
  return out;
}

std::vector<std::string> MathTerms(const Expr& e, bool with_pairs) {
  std::vector<std::string> out = LeafTokens(e);
  for (std::string& t : StructuralTerms(e, with_pairs)) out.push_back(std::move(t));
  return out;
}

std::vector<std::string> StructuralTerms(const Expr& e, bool with_pairs) {
  std::vector<std::string> out;
  for (const std::string& op : OpTokens(e)) out.push_back(op);
  if (with_pairs) {
    for (const OpOccurrence& o : EvalOrder(e)) out.push_back(PairTerm(o.op, o.order));
  }
  return out;
}

TermFields Tokenize(const Annotation& a) {
  Expr expr;
  try {
    expr = mathml::ParseContent(a.value);
  } catch (const InputError& e) {
    throw MathParseError("cannot parse value of " + a.doc_uri + ": " + e.what());
  }
  TermFields fields;
  for (const std::string& t : MathTerms(expr)) ++fields.exact[t];
  for (const std::string& t : StructuralTerms(expr)) ++fields.structural[t];
  for (const std::string& w : TextWords(a.description)) ++fields.exact[w];
  if (!a.category.empty()) ++fields.exact[Lower(a.category)];
  if (!a.source.empty()) ++fields.exact[Lower(a.source)];
  return fields;
}

InvertedIndex InvertedIndex::Build(const std::vector<Annotation>& annotations,
                                   std::vector<std::string>* warnings) {
  InvertedIndex idx;
  for (const Annotation& a : annotations) {
    TermFields fields;
    try {
      fields = Tokenize(a);
    } catch (const MathParseError& e) {
      if (warnings != nullptr) warnings->push_back(std::string("skipped document: ") + e.what());
      continue;
    }
    idx.Insert(IndexedDoc{static_cast<int>(idx.docs_.size()), a, std::move(fields.exact),
                          std::move(fields.structural)});
  }
  idx.RefreshNorms();
  return idx;
}

int InvertedIndex::Add(const Annotation& annotation) {
  TermFields fields = Tokenize(annotation);
  const int id = static_cast<int>(docs_.size());
  Insert(IndexedDoc{id, annotation, std::move(fields.exact), std::move(fields.structural)});
  RefreshNorms();
  return id;
}

void InvertedIndex::Insert(IndexedDoc doc) {
  for (Field f : {Field::kExact, Field::kStructural}) {
    for (const auto& [term, n] : doc.tf(f)) {
      ++df_[FieldIndex(f)][term];
      auto it = postings_[FieldIndex(f)].find(term);
      if (it == postings_[FieldIndex(f)].end()) {
        it = postings_[FieldIndex(f)].emplace(term, std::vector<Posting>{}).first;
      }
      it->second.push_back({doc.doc_id, n});
    }
  }
  docs_.push_back(std::move(doc));
}

void InvertedIndex::RefreshNorms() {
  for (Field f : {Field::kExact, Field::kStructural}) {
    auto& norms = norms_[FieldIndex(f)];
    norms.assign(docs_.size(), 0.0);
    for (const IndexedDoc& d : docs_) {
      double sum = 0.0;
      for (const auto& [term, n] : d.tf(f)) {
        const double w = n * Idf(f, term);
        sum += w * w;
      }
      norms[static_cast<std::size_t>(d.doc_id)] = std::sqrt(sum);
    }
  }
}

int InvertedIndex::df(Field f, std::string_view term) const {
  const auto& m = df_[FieldIndex(f)];
  const auto it = m.find(std::string(term));
  return it == m.end() ? 0 : it->second;
}

double InvertedIndex::Idf(Field f, std::string_view term) const {
  const int d = std::max(df(f, term), 1);
  return std::log(1.0 + static_cast<double>(docs_.size()) / d);
}

double InvertedIndex::Weight(Field f, std::string_view term, const IndexedDoc& d) const {
  const TermCounts& tf = d.tf(f);
  const auto it = tf.find(std::string(term));
  if (it == tf.end()) return 0.0;
  return it->second * Idf(f, term);
}

double InvertedIndex::Norm(Field f, int doc_id) const {
  return norms_[FieldIndex(f)].at(static_cast<std::size_t>(doc_id));
}

const std::vector<Posting>& InvertedIndex::Postings(Field f, std::string_view term) const {
  static const std::vector<Posting> kNone;
  const auto& m = postings_[FieldIndex(f)];
  const auto it = m.find(term);
  return it == m.end() ? kNone : it->second;
}

bool InvertedIndex::CheckDocumentFrequencies() const {
  std::array<TermCounts, 2> recount;
  for (const IndexedDoc& d : docs_) {
    for (Field f : {Field::kExact, Field::kStructural}) {
      for (const auto& [term, unused] : d.tf(f)) ++recount[FieldIndex(f)][term];
    }
  }
  return recount == df_;
}

std::string InvertedIndex::ToJson() const {
  json root;
  root["version"] = kFormatVersion;
  root["N"] = docs_.size();
  json docs = json::array();
  for (const IndexedDoc& d : docs_) {
    json j;
    j["doc_id"] = d.doc_id;
    j["doc_uri"] = d.annotation.doc_uri;
    j["anchor_link"] = d.annotation.anchor_link;
    j["value"] = d.annotation.value;
    j["source"] = d.annotation.source;
    j["category"] = d.annotation.category;
    j["description"] = d.annotation.description;
    j["exact_tf"] = CountsToJson(d.exact_tf);
    j["structural_tf"] = CountsToJson(d.structural_tf);
    docs.push_back(std::move(j));
  }
  root["docs"] = std::move(docs);
  return root.dump(1);
}

void InvertedIndex::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write index " + path.string());
  out << ToJson() << '\n';
  if (!out) throw IoError("failed writing index " + path.string());
}

InvertedIndex InvertedIndex::FromJson(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("index is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw FormatError("index root must be an object");
  const auto version = root.find("version");
  if (version == root.end() || !version->is_number_integer()) {
    throw FormatError("corrupt field 'version'");
  }
  if (version->get<long long>() != kFormatVersion) {
    throw FormatError("unsupported version " + version->dump());
  }
  const auto n = root.find("N");
  const auto docs = root.find("docs");
  if (n == root.end() || !n->is_number_integer() || n->get<long long>() < 0) {
    throw FormatError("corrupt field 'N'");
  }
  if (docs == root.end() || !docs->is_array()) throw FormatError("corrupt field 'docs'");
  if (static_cast<long long>(docs->size()) != n->get<long long>()) {
    throw FormatError("N is " + n->dump() + " but " + std::to_string(docs->size()) +
                      " docs are stored");
  }

  InvertedIndex idx;
  for (const json& j : *docs) {
    if (!j.is_object()) throw FormatError("corrupt doc entry");
    const auto id = j.find("doc_id");
    if (id == j.end() || !id->is_number_integer() ||
        id->get<long long>() != static_cast<long long>(idx.docs_.size())) {
      throw FormatError("corrupt field 'doc_id': ids must be dense from 0");
    }
    IndexedDoc d;
    d.doc_id = id->get<int>();
    d.annotation = Annotation{StringField(j, "doc_uri"),  StringField(j, "anchor_link"),
                              StringField(j, "value"),    StringField(j, "source"),
                              StringField(j, "category"), StringField(j, "description")};
    if (!j.contains("exact_tf") || !j.contains("structural_tf")) {
      throw FormatError("corrupt doc " + std::to_string(d.doc_id) + ": missing tf maps");
    }
    d.exact_tf = CountsFromJson(j["exact_tf"], "exact_tf");
    d.structural_tf = CountsFromJson(j["structural_tf"], "structural_tf");
    for (const auto& [term, unused] : d.structural_tf) {
      if (!IsStructuralTerm(term)) {
        throw FormatError("corrupt field 'structural_tf': '" + term + "' is not an operator term");
      }
    }
    idx.Insert(std::move(d));
  }
  idx.RefreshNorms();
  return idx;
}

InvertedIndex InvertedIndex::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read index " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

}  // namespace mathsearch
