#include "mathsearch/annotate.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "mathsearch/errors.h"
#include "mathsearch/mathml.h"
#include "mathsearch/ontology.h"
#include "mathsearch/xml.h"

namespace mathsearch {
namespace {

void CollectMath(const xml::Node& n, std::vector<const xml::Node*>& out) {
  for (const xml::Node& c : n.children) {
    if (!c.is_element()) continue;
    if (c.local_name() == "math") {
      out.push_back(&c);
    } else {
      CollectMath(c, out);
    }
  }
}

std::string RenderAnnotation(const Annotation& a, int number, const Expr& expr,
                             const xml::Node& original_math) {
  const std::string id = "equation" + std::to_string(number);
  std::string out;
  out += "<div xmlns:m=\"";
  out += kVocabularyNamespace;
  out += "\" id=\"" + id + "\" about=\"" + xml::EscapeAttribute(a.doc_uri) + "\">";
  const std::string* fields[] = {&a.anchor_link, &a.value, &a.source, &a.category, &a.description};
  for (std::size_t i = 0; i < AnnotationPredicates().size(); ++i) {
    out += "<span property=\"m:" + AnnotationPredicates()[i] + "\" content=\"" +
           xml::EscapeAttribute(*fields[i]) + "\"/>";
  }
  std::string math_attributes;
  if (const std::string* ns = original_math.attribute("xmlns")) {
    math_attributes = " xmlns=\"" + xml::EscapeAttribute(*ns) + "\"";
  }
  out += mathml::ToAnnotatedContent(expr, math_attributes);
  out += "</div>";
  return out;
}

void CollectAnnotations(const xml::Node& n, std::vector<Annotation>& out) {
  for (const xml::Node& c : n.children) {
    if (!c.is_element()) continue;
    const std::string* about = c.attribute("about");
    if (about != nullptr) {
      std::map<std::string, const std::string*> found;
      for (const xml::Node* child : c.element_children()) {
        const std::string* property = child->attribute("property");
        if (child->local_name() != "span" || property == nullptr) continue;
        for (const std::string& predicate : AnnotationPredicates()) {
          if (*property == "m:" + predicate) found[predicate] = child->attribute("content");
        }
      }
      if (!found.empty()) {
        auto field = [&](const std::string& predicate) -> const std::string& {
          const auto it = found.find(predicate);
          if (it == found.end() || it->second == nullptr) throw MissingField("m:" + predicate, *about);
          return *it->second;
        };
        const auto& p = AnnotationPredicates();
        out.push_back(Annotation{*about, field(p[0]), field(p[1]), field(p[2]), field(p[3]),
                                 field(p[4])});
        continue;
      }
    }
    CollectAnnotations(c, out);
  }
}

std::string EscapeField(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string UnescapeField(std::string_view s, int line_no) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i >= s.size()) throw FormatError("triples line " + std::to_string(line_no) + ": dangling '\\'");
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default:
        throw FormatError("triples line " + std::to_string(line_no) + ": unknown escape '\\" +
                          std::string(1, s[i]) + "'");
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& AnnotationPredicates() {
  static const std::vector<std::string> predicates{"hasLink", "hasValue", "hasSource",
                                                   "hasCategory", "hasDescription"};
  return predicates;
}

AnnotatedDocument AnnotateDocument(std::string_view xhtml, std::string_view page_url,
                                   const std::map<int, std::string>& descriptions) {
  const xml::Node doc = xml::Parse(xhtml);
  std::vector<const xml::Node*> maths;
  CollectMath(doc, maths);

  const std::string path = UrlPath(page_url);
  const std::string source = SourceFromUrl(page_url).name;

  AnnotatedDocument result;
  std::size_t copied = 0;
  int number = 0;
  for (const xml::Node* math : maths) {
    Expr expr;
    try {
      expr = mathml::ParseAny(*math);
    } catch (const InputError& e) {
      result.warnings.push_back("equation at offset " + std::to_string(math->begin) +
                                " skipped: " + e.what());
      continue;
    }
    ++number;
    const std::string fragment = "#equation" + std::to_string(number);
    Annotation a;
    a.doc_uri = path + fragment;
    a.anchor_link = std::string(page_url) + fragment;
    a.value = mathml::ToContent(expr);
    a.source = source;
    a.category = std::string(CategoryString(Classify(expr).name));
    if (const auto it = descriptions.find(number); it != descriptions.end()) {
      a.description = it->second;
    }
    result.xhtml.append(xhtml.substr(copied, math->begin - copied));
    result.xhtml += RenderAnnotation(a, number, expr, *math);
    copied = math->end;
    result.annotations.push_back(std::move(a));
  }
  result.xhtml.append(xhtml.substr(copied));
  return result;
}

std::vector<Annotation> ExtractAnnotations(std::string_view xhtml) {
  const xml::Node doc = xml::Parse(xhtml);
  std::vector<Annotation> out;
  CollectAnnotations(doc, out);
  return out;
}

std::vector<Triple> ToTriples(const std::vector<Annotation>& annotations) {
  std::vector<Triple> out;
  out.reserve(annotations.size() * 5);
  const auto& p = AnnotationPredicates();
  for (const Annotation& a : annotations) {
    out.push_back({a.doc_uri, p[0], a.anchor_link});
    out.push_back({a.doc_uri, p[1], a.value});
    out.push_back({a.doc_uri, p[2], a.source});
    out.push_back({a.doc_uri, p[3], a.category});
    out.push_back({a.doc_uri, p[4], a.description});
  }
  return out;
}

void WriteTriples(const std::vector<Triple>& triples, std::ostream& out) {
  for (const Triple& t : triples) {
    out << EscapeField(t.subject) << '\t' << EscapeField(t.predicate) << '\t'
        << EscapeField(t.object) << '\n';
  }
}

std::vector<Triple> ReadTriples(std::istream& in) {
  std::vector<Triple> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t a = line.find('\t');
    const std::size_t b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos || line.find('\t', b + 1) != std::string::npos) {
      throw FormatError("triples line " + std::to_string(line_no) +
                        ": expected subject<TAB>predicate<TAB>object");
    }
    out.push_back({UnescapeField(std::string_view(line).substr(0, a), line_no),
                   UnescapeField(std::string_view(line).substr(a + 1, b - a - 1), line_no),
                   UnescapeField(std::string_view(line).substr(b + 1), line_no)});
  }
  return out;
}

std::vector<Triple> ReadTriplesFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read triples file " + path.string());
  return ReadTriples(in);
}

}  // namespace mathsearch
