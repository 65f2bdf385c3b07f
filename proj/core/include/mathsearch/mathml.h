#ifndef MATHSEARCH_MATHML_H_
#define MATHSEARCH_MATHML_H_

#include <string>
#include <string_view>

#include "mathsearch/expr.h"
#include "mathsearch/xml.h"

namespace mathsearch::mathml {

// Presentation subset: math, mrow, mi, mn, mo, msup, mfrac, msqrt. The mo
// tokens inside each row are re-parsed with the text grammar's precedence
// table. Adjacent operands without an mo between them are rejected.
Expr ParsePresentation(std::string_view xml_text);
Expr ParsePresentation(const xml::Node& math_element);

// Content subset: math, apply, ci, cn and the operator elements plus, minus,
// times, divide, power, eq, root, sin, cos, tan, log, exp, int, diff.
// Attributes are ignored on input.
Expr ParseContent(std::string_view xml_text);
Expr ParseContent(const xml::Node& math_element);

// Bare content markup, operator element first inside each apply.
std::string ToContent(const Expr& e);

// Same tree with RDFa `property` attributes on every operator, ci and cn
// element. `math_attributes` is inserted verbatim into the math start tag
// (for example an xmlns declaration); it must be empty or start with a space.
std::string ToAnnotatedContent(const Expr& e, std::string_view math_attributes = {});

// True when the math element is written in the content subset.
bool IsContentMarkup(const xml::Node& math_element);

// Parses whichever subset the element uses.
Expr ParseAny(const xml::Node& math_element);

}  // namespace mathsearch::mathml

#endif  // MATHSEARCH_MATHML_H_
