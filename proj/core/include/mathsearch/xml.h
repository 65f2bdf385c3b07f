#ifndef MATHSEARCH_XML_H_
#define MATHSEARCH_XML_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mathsearch::xml {

// Minimal XML DOM. Every node remembers the byte range it occupied in the
// source so callers can rewrite one element and keep the rest of the
// document byte-for-byte.
struct Node {
  enum class Kind { kDocument, kElement, kText, kComment, kCData, kProcessingInstruction, kDoctype };

  Kind kind = Kind::kDocument;
  std::string name;  // qualified element name
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Node> children;
  std::string text;  // decoded character data for kText / kCData
  std::size_t begin = 0;
  std::size_t end = 0;

  bool is_element() const { return kind == Kind::kElement; }
  std::string_view local_name() const;
  const std::string* attribute(std::string_view key) const;
  std::vector<const Node*> element_children() const;
  // Concatenated character data of the subtree.
  std::string text_content() const;
};

// Parses a well-formed document with a single root element. Entity
// references outside the predefined five and numeric references are kept
// verbatim. Throws ParseError with the byte offset of the first problem.
Node Parse(std::string_view source);

std::string EscapeText(std::string_view raw);
std::string EscapeAttribute(std::string_view raw);

}  // namespace mathsearch::xml

#endif  // MATHSEARCH_XML_H_
