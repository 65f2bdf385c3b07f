#include "fixtures.h"

#include <cctype>

#include "mathsearch/mathml.h"
#include "mathsearch/ontology.h"
#include "mathsearch/xml.h"
#include "random_expr.h"

namespace mathsearch::testing {
namespace {

std::string PathOf(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) return url;
  return url.substr(url.find('/', scheme + 3));
}

}  // namespace

Annotation MakeAnnotation(const std::string& page_url, int n, const std::string& text,
                          const std::string& description) {
  const Expr e = ParseText(text);
  const std::string fragment = "#equation" + std::to_string(n);
  return Annotation{PathOf(page_url) + fragment,
                    page_url + fragment,
                    mathml::ToContent(e),
                    SourceFromUrl(page_url).name,
                    std::string(CategoryString(Classify(e).name)),
                    description};
}

std::vector<Annotation> TenDocCorpus() {
  const std::string site = "http://www.example.com/math101";
  return {
      MakeAnnotation(site + "/lesson1/notes.htm", 1, "x + y * z", "sum of a product"),
      MakeAnnotation(site + "/lesson1/notes.htm", 2, "int(x^2, x)", "integral of a square"),
      MakeAnnotation(site + "/quizzes/q1.htm", 1, "int(sin(x), x)", "integral of sine"),
      MakeAnnotation(site + "/lesson2/trig.htm", 1, "cos(x)^2 + sin(x)^2 = 1", "pythagorean identity"),
      MakeAnnotation(site + "/wiki/forces.htm", 1, "F = m * a", "NewtonEquation"),
      MakeAnnotation(site + "/quizzes/q2.htm", 1, "diff(x^3, x) = 3 * x^2", "power rule derivative"),
      MakeAnnotation(site + "/forum/t1.htm", 1, "A = B + C - D", "balance sheet"),
      MakeAnnotation(site + "/lesson3/calc.htm", 1, "int(exp(x), x)", "integral of the exponential"),
      MakeAnnotation(site + "/assignments/a1.htm", 1, "(x + 3)^2", "square of a binomial"),
      MakeAnnotation(site + "/glossary/terms.htm", 1, "1 + 2 * 3", "order of operations"),
  };
}

std::vector<NamedCorpus> RankingCorpora() {
  const std::string site = "http://www.example.com/math101";
  return {
      {"ten-doc", TenDocCorpus()},
      {"single", {MakeAnnotation(site + "/lesson1/a.htm", 1, "x + y * z")}},
      {"mixed-four",
       {MakeAnnotation(site + "/wiki/f.htm", 1, "F = m * a", "NewtonEquation"),
        MakeAnnotation(site + "/forum/b.htm", 1, "A = B + C - D"),
        MakeAnnotation(site + "/lesson4/p.htm", 1, "x + y * z", "product then sum"),
        MakeAnnotation(site + "/lesson4/p.htm", 2, "(x + 3)^2", "binomial square")}},
      {"ties",
       {MakeAnnotation(site + "/lesson5/t.htm", 1, "x + y", "sum"),
        MakeAnnotation(site + "/lesson5/t.htm", 2, "x + y", "sum"),
        MakeAnnotation(site + "/quizzes/t.htm", 1, "y + x", "sum"),
        MakeAnnotation(site + "/quizzes/t.htm", 2, "x * y", "product")}},
  };
}

std::vector<BatteryQuery> QueryBattery() {
  const std::vector<std::string> texts{
      "integral",
      "newton equation",
      "polynomial lesson",
      "square of a binomial",
      "Math: x y z + *",
      "Math: x 2 ^",
      "Math: sin cos x",
      "Math: (+,1) (*,2)",
      "Math: (*,1) (+,2)",
      "Math: (=,3) (+,1)",
      "Math: x + y * z",
      "Math: X = Y + Z - W",
      "Math: int(x^2, x)",
      "Math: (x+3)^2",
      "Math: F = m * a",
      "math: x + y",
  };
  std::vector<std::pair<std::string, QueryFlags>> flag_sets;
  flag_sets.push_back({"plain", {}});
  {
    QueryFlags f;
    f.exact = true;
    flag_sets.push_back({"exact", f});
  }
  {
    QueryFlags f;
    f.structural = true;
    flag_sets.push_back({"structural", f});
  }
  {
    QueryFlags f;
    f.no_order = true;
    flag_sets.push_back({"no-order", f});
  }
  {
    QueryFlags f;
    f.exact = true;
    f.structural = true;
    flag_sets.push_back({"exact+structural", f});
  }
  {
    QueryFlags f;
    f.source = "Lesson";
    flag_sets.push_back({"source=Lesson", f});
  }
  {
    QueryFlags f;
    f.category = "calculus";
    flag_sets.push_back({"category=calculus", f});
  }
  {
    QueryFlags f;
    f.top_k = 2;
    flag_sets.push_back({"top=2", f});
  }
  {
    QueryFlags f;
    f.exact = true;
    f.structural = true;
    f.no_order = true;
    f.source = "lesson";
    f.top_k = 3;
    flag_sets.push_back({"all", f});
  }
  std::vector<BatteryQuery> out;
  for (const std::string& t : texts) {
    for (const auto& [label, flags] : flag_sets) out.push_back({t, flags, t + " [" + label + "]"});
  }
  return out;
}

std::string FlatPresentation(const Expr& e) {
  const std::string text = PrintText(e);
  std::string out = "<math><mrow>";
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out += "<mi>" + text.substr(i, j - i) + "</mi>";
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) ++j;
      out += "<mn>" + text.substr(i, j - i) + "</mn>";
      i = j;
    } else {
      out += "<mo>" + std::string(1, c) + "</mo>";
      ++i;
    }
  }
  out += "</mrow></math>";
  return out;
}

SyntheticPage MakeSyntheticPage(int i) {
  static const std::vector<std::pair<std::string, std::string>> kComponents{
      {"lesson7", "Lesson"}, {"quizzes", "Quiz"},      {"wiki", "Wiki"},
      {"forum", "Forum"},    {"assignments", "Assignment"}, {"misc", "Resource"},
      {"glossary", "Glossary"}};
  const auto& [segment, source] = kComponents[static_cast<std::size_t>(i) % kComponents.size()];
  SyntheticPage page;
  const std::string path = "/course" + std::to_string(i % 3) + "/" + segment + "/page" +
                           std::to_string(i) + ".htm";
  page.url = "https://lms.example.org" + path;

  RandomExpr gen(static_cast<unsigned>(7919 * i + 17));
  const int equations = 1 + i % 4;
  std::string body;
  for (int j = 1; j <= equations; ++j) {
    const Expr e = gen.Generate(4);
    body += "<p>Equation " + std::to_string(j) + " &amp; notes</p>\n";
    if ((i + j) % 2 == 0) {
      body += FlatPresentation(e) + "\n";
    } else {
      std::string content = mathml::ToContent(e);
      content.replace(0, 6, "<math xmlns=\"http://www.w3.org/1998/Math/MathML\">");
      body += content + "\n";
    }
    std::string description;
    if (j % 2 == 1) {
      description = "use " + std::to_string(j) + ": \"quoted\" <b> & 'more'";
      page.descriptions[j] = description;
    }
    page.expected.push_back(Annotation{path + "#equation" + std::to_string(j),
                                       page.url + "#equation" + std::to_string(j),
                                       mathml::ToContent(e), source,
                                       std::string(CategoryString(Classify(e).name)), description});
  }
  page.xhtml = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<html xmlns=\"http://www.w3.org/1999/xhtml\">\n<head><title>Page " +
               std::to_string(i) + "</title></head>\n<body>\n<!-- generated -->\n" + body +
               "</body>\n</html>\n";
  return page;
}

}  // namespace mathsearch::testing
