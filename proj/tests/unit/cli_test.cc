#include "cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.h"

namespace mathsearch::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Exec(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_ / "site" / "wiki");
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void Write(const std::string& name, const std::string& body) const {
    std::ofstream(dir_ / name, std::ios::binary) << body;
  }

  std::string ReadBack(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

const char* kPage =
    "<html><body><p>Second law</p>"
    "<math><mi>F</mi><mo>=</mo><mi>m</mi><mo>*</mo><mi>a</mi></math>"
    "<math><msup><mrow><mi>x</mi><mo>+</mo><mn>3</mn></mrow><mn>2</mn></msup></math>"
    "</body></html>";

TEST_F(CliTest, AnnotateIndexSearchExtractSparql) {
  Write("page.htm", kPage);
  Result r = Exec({"annotate", Path("page.htm"), "--url", "http://h/wiki/newton.htm", "--desc",
                   "1=NewtonEquation", "--out", Path("site/wiki/newton.htm")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());

  r = Exec({"index", Path("site"), "--out", Path("index.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "indexed 2 equations from 1 files\n");

  r = Exec({"search", "--index", Path("index.json"), "Math: F = m * a", "--top", "1", "--structural"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, 9), "1.000000\t");
  EXPECT_NE(r.out.find("\thttp://h/wiki/newton.htm#equation1\tWiki\tpolynomial\tNewtonEquation\n"),
            std::string::npos);

  r = Exec({"extract", Path("site/wiki/newton.htm"), "--triples-out", Path("triples.tsv")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(ReadBack("triples.tsv").find("/wiki/newton.htm#equation2\thasCategory\tpolynomial\n"),
            std::string::npos);

  r = Exec({"sparql", "--triples", Path("triples.tsv"),
            "SELECT ?Link WHERE { ?r hasLink ?Link . ?r hasDescription NewtonEquation }"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "?Link\nhttp://h/wiki/newton.htm#equation1\n");

  r = Exec({"sparql", "SELECT * FROM <" + Path("triples.tsv") + "> WHERE { ?r hasSource ?s }"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST_F(CliTest, DescriptionFileAndStdout) {
  Write("page.htm", kPage);
  Write("desc.txt", "2=square of a binomial\n");
  const Result r = Exec({"annotate", Path("page.htm"), "--url", "/quizzes/q.htm", "--desc-file", Path("desc.txt")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("content=\"square of a binomial\""), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  Result r = Exec({"search", "--index", Path("index.json")});
  EXPECT_EQ(r.code, kUserError);
  EXPECT_NE(r.err.find("search"), std::string::npos);
  EXPECT_EQ(Exec({}).code, kUserError);
  EXPECT_EQ(Exec({"frobnicate"}).code, kUserError);
  EXPECT_EQ(Exec({"annotate", Path("x"), "--url", "u", "--desc", "zero=x"}).code, kUserError);
  EXPECT_EQ(Exec({"--help"}).code, kOk);
}

TEST_F(CliTest, QueryErrorsExitOne) {
  Write("index.json", mathsearch::InvertedIndex::Build(testing::TenDocCorpus()).ToJson());
  EXPECT_EQ(Exec({"search", "--index", Path("index.json"), "Math: (+,0)"}).code, kUserError);
  EXPECT_EQ(Exec({"search", "--index", Path("index.json"), "  "}).code, kUserError);
  EXPECT_EQ(Exec({"search", "--index", Path("index.json"), "x", "--source", "Lecture"}).code, kUserError);
  EXPECT_EQ(Exec({"search", "--index", Path("index.json"), "x", "--top", "0"}).code, kUserError);
  EXPECT_EQ(Exec({"sparql", "--triples", Path("none.tsv"), "SELECT ?q WHERE { ?a hasLink ?b }"}).code,
            kUserError);
}

TEST_F(CliTest, StorageErrorsExitTwo) {
  EXPECT_EQ(Exec({"search", "--index", Path("missing.json"), "x"}).code, kStorageError);
  Write("bad.json", "{\"version\": 99}");
  EXPECT_EQ(Exec({"search", "--index", Path("bad.json"), "x"}).code, kStorageError);
  Write("broken.htm", "<html><math>");
  EXPECT_EQ(Exec({"annotate", Path("broken.htm"), "--url", "/lesson"}).code, kStorageError);
  EXPECT_EQ(Exec({"extract", Path("nothing.htm")}).code, kStorageError);
  Write("bad.tsv", "a\tb\n");
  EXPECT_EQ(Exec({"sparql", "--triples", Path("bad.tsv"), "SELECT * WHERE { ?a hasLink ?b }"}).code,
            kStorageError);
}

TEST_F(CliTest, TagCommands) {
  const std::string store = Path("tags.tsv");
  EXPECT_EQ(Exec({"tag", "add", "--store", store, "/p1", "Lesson", "Matrices"}).out, "1\n");
  EXPECT_EQ(Exec({"tag", "add", "--store", store, "/p1", "Quiz", "matrices"}).out, "2\n");
  EXPECT_EQ(Exec({"tag", "add", "--store", store, "/p2", "Quiz", "matrices"}).out, "1\n");
  EXPECT_EQ(Exec({"tag", "cloud", "--store", store, "/p1"}).out, "matrices\t2\n");
  EXPECT_EQ(Exec({"tag", "promote", "--store", store}).out, "matrices\tQuiz\n");
  EXPECT_EQ(Exec({"tag", "promote", "--store", store}).out, "");
  EXPECT_EQ(Exec({"tag", "add", "--store", store, "/p3", "Matrices", "rank"}).code, kOk);
  EXPECT_EQ(Exec({"tag", "add", "--store", store, "/p3", "Lecture", "rank"}).code, kUserError);
}

}  // namespace
}  // namespace mathsearch::cli
