#include "mathsearch/xml.h"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "mathsearch/errors.h"

namespace mathsearch::xml {
namespace {

bool IsNameStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_' || c == ':' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsNameChar(char c) {
  return IsNameStart(c) || std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '-' ||
         c == '.';
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

void AppendUtf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  Node ParseDocument() {
    Node doc;
    doc.kind = Node::Kind::kDocument;
    doc.begin = 0;
    bool seen_root = false;
    while (pos_ < src_.size()) {
      if (src_[pos_] != '<') {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '<') {
          if (!IsSpace(src_[pos_])) Fail("text outside the root element", pos_);
          ++pos_;
        }
        Node ws;
        ws.kind = Node::Kind::kText;
        ws.text = std::string(src_.substr(start, pos_ - start));
        ws.begin = start;
        ws.end = pos_;
        doc.children.push_back(std::move(ws));
        continue;
      }
      if (StartsWith("<?")) {
        doc.children.push_back(ParseProcessingInstruction());
      } else if (StartsWith("<!--")) {
        doc.children.push_back(ParseComment());
      } else if (StartsWith("<!DOCTYPE")) {
        if (seen_root) Fail("DOCTYPE after root element", pos_);
        doc.children.push_back(ParseDoctype());
      } else {
        if (seen_root) Fail("more than one root element", pos_);
        doc.children.push_back(ParseElement());
        seen_root = true;
      }
    }
    if (!seen_root) Fail("no root element", pos_);
    doc.end = src_.size();
    return doc;
  }

 private:
  [[noreturn]] void Fail(const std::string& what, std::size_t at) const {
    throw ParseError("XML: " + what + " at offset " + std::to_string(at));
  }

  bool StartsWith(std::string_view prefix) const {
    return src_.substr(pos_, prefix.size()) == prefix;
  }

  void SkipSpace() {
    while (pos_ < src_.size() && IsSpace(src_[pos_])) ++pos_;
  }

  std::size_t FindOrFail(std::string_view terminator, const char* what) const {
    const std::size_t at = src_.find(terminator, pos_);
    if (at == std::string_view::npos) Fail(std::string("unterminated ") + what, pos_);
    return at;
  }

  std::string ReadName() {
    const std::size_t start = pos_;
    if (pos_ >= src_.size() || !IsNameStart(src_[pos_])) Fail("expected a name", pos_);
    while (pos_ < src_.size() && IsNameChar(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  // Decodes character data up to `stop`, resolving entity references.
  std::string Decode(std::size_t start, std::size_t stop) const {
    std::string out;
    out.reserve(stop - start);
    std::size_t i = start;
    while (i < stop) {
      const char c = src_[i];
      if (c != '&') {
        out += c;
        ++i;
        continue;
      }
      const std::size_t semi = src_.find(';', i);
      if (semi == std::string_view::npos || semi >= stop) Fail("unterminated entity reference", i);
      const std::string_view ref = src_.substr(i + 1, semi - i - 1);
      if (ref == "lt") {
        out += '<';
      } else if (ref == "gt") {
        out += '>';
      } else if (ref == "amp") {
        out += '&';
      } else if (ref == "quot") {
        out += '"';
      } else if (ref == "apos") {
        out += '\'';
      } else if (!ref.empty() && ref[0] == '#') {
        std::uint32_t cp = 0;
        const bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
        const std::string_view digits = ref.substr(hex ? 2 : 1);
        if (digits.empty()) Fail("empty character reference", i);
        for (char d : digits) {
          int v = -1;
          if (d >= '0' && d <= '9') v = d - '0';
          if (hex && d >= 'a' && d <= 'f') v = d - 'a' + 10;
          if (hex && d >= 'A' && d <= 'F') v = d - 'A' + 10;
          if (v < 0) Fail("bad character reference", i);
          cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
          if (cp > 0x10FFFF) Fail("character reference out of range", i);
        }
        AppendUtf8(cp, out);
      } else {
        if (ref.empty() || !std::all_of(ref.begin(), ref.end(), IsNameChar)) {
          Fail("malformed entity reference", i);
        }
        out.append(src_.substr(i, semi - i + 1));
      }
      i = semi + 1;
    }
    return out;
  }

  Node ParseProcessingInstruction() {
    Node n;
    n.kind = Node::Kind::kProcessingInstruction;
    n.begin = pos_;
    pos_ = FindOrFail("?>", "processing instruction") + 2;
    n.end = pos_;
    n.text = std::string(src_.substr(n.begin, n.end - n.begin));
    return n;
  }

  Node ParseComment() {
    Node n;
    n.kind = Node::Kind::kComment;
    n.begin = pos_;
    pos_ += 4;
    const std::size_t close = FindOrFail("-->", "comment");
    n.text = std::string(src_.substr(pos_, close - pos_));
    pos_ = close + 3;
    n.end = pos_;
    return n;
  }

  Node ParseDoctype() {
    Node n;
    n.kind = Node::Kind::kDoctype;
    n.begin = pos_;
    int depth = 0;
    while (pos_ < src_.size()) {
      const char c = src_[pos_++];
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth == 0) {
        n.end = pos_;
        n.text = std::string(src_.substr(n.begin, n.end - n.begin));
        return n;
      }
    }
    Fail("unterminated DOCTYPE", n.begin);
  }

  Node ParseCData() {
    Node n;
    n.kind = Node::Kind::kCData;
    n.begin = pos_;
    pos_ += 9;
    const std::size_t close = FindOrFail("]]>", "CDATA section");
    n.text = std::string(src_.substr(pos_, close - pos_));
    pos_ = close + 3;
    n.end = pos_;
    return n;
  }

  Node ParseElement() {
    Node n;
    n.kind = Node::Kind::kElement;
    n.begin = pos_;
    ++pos_;  // '<'
    n.name = ReadName();
    for (;;) {
      const std::size_t before = pos_;
      SkipSpace();
      if (pos_ >= src_.size()) Fail("unterminated start tag <" + n.name + ">", n.begin);
      if (StartsWith("/>")) {
        pos_ += 2;
        n.end = pos_;
        return n;
      }
      if (src_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (pos_ == before) Fail("expected whitespace before attribute", pos_);
      std::string key = ReadName();
      SkipSpace();
      if (pos_ >= src_.size() || src_[pos_] != '=') Fail("expected '=' after attribute name", pos_);
      ++pos_;
      SkipSpace();
      if (pos_ >= src_.size() || (src_[pos_] != '"' && src_[pos_] != '\'')) {
        Fail("expected quoted attribute value", pos_);
      }
      const char quote = src_[pos_++];
      const std::size_t close = src_.find(quote, pos_);
      if (close == std::string_view::npos) Fail("unterminated attribute value", pos_);
      if (src_.substr(pos_, close - pos_).find('<') != std::string_view::npos) {
        Fail("'<' in attribute value", pos_);
      }
      for (const auto& [existing, unused] : n.attributes) {
        if (existing == key) Fail("duplicate attribute '" + key + "'", pos_);
      }
      n.attributes.emplace_back(std::move(key), Decode(pos_, close));
      pos_ = close + 1;
    }

    for (;;) {
      if (pos_ >= src_.size()) Fail("unclosed element <" + n.name + ">", n.begin);
      if (StartsWith("</")) {
        const std::size_t at = pos_;
        pos_ += 2;
        const std::string closing = ReadName();
        SkipSpace();
        if (pos_ >= src_.size() || src_[pos_] != '>') Fail("malformed end tag", at);
        ++pos_;
        if (closing != n.name) {
          Fail("end tag </" + closing + "> does not match <" + n.name + ">", at);
        }
        n.end = pos_;
        return n;
      }
      if (StartsWith("<!--")) {
        n.children.push_back(ParseComment());
      } else if (StartsWith("<![CDATA[")) {
        n.children.push_back(ParseCData());
      } else if (StartsWith("<?")) {
        n.children.push_back(ParseProcessingInstruction());
      } else if (src_[pos_] == '<') {
        n.children.push_back(ParseElement());
      } else {
        Node t;
        t.kind = Node::Kind::kText;
        t.begin = pos_;
        const std::size_t stop = std::min(src_.find('<', pos_), src_.size());
        t.text = Decode(pos_, stop);
        pos_ = stop;
        t.end = pos_;
        n.children.push_back(std::move(t));
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void AppendText(const Node& n, std::string& out) {
  if (n.kind == Node::Kind::kText || n.kind == Node::Kind::kCData) out += n.text;
  if (n.kind == Node::Kind::kElement || n.kind == Node::Kind::kDocument) {
    for (const Node& c : n.children) AppendText(c, out);
  }
}

}  // namespace

std::string_view Node::local_name() const {
  const std::string_view full = name;
  const std::size_t colon = full.find(':');
  return colon == std::string_view::npos ? full : full.substr(colon + 1);
}

const std::string* Node::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<const Node*> Node::element_children() const {
  std::vector<const Node*> out;
  for (const Node& c : children) {
    if (c.is_element()) out.push_back(&c);
  }
  return out;
}

std::string Node::text_content() const {
  std::string out;
  AppendText(*this, out);
  return out;
}

Node Parse(std::string_view source) { return Reader(source).ParseDocument(); }

std::string EscapeText(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string EscapeAttribute(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\n': out += "&#10;"; break;
      case '\t': out += "&#9;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace mathsearch::xml
