#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "mathsearch/annotate.h"
#include "mathsearch/mathml.h"
#include "mathsearch/ontology.h"
#include "mathsearch/search.h"

namespace {

using mathsearch::Expr;

Expr RandomTree(std::mt19937& rng, int depth) {
  static const char* kNames[] = {"x", "y", "z", "a", "b", "n"};
  static const char* kOps[] = {"+", "-", "*", "/", "^", "="};
  static const char* kFunctions[] = {"sin", "cos", "log", "exp", "sqrt"};
  if (depth <= 1 || rng() % 4 == 0) {
    if (rng() % 3 == 0) return Expr::Number(std::to_string(rng() % 10));
    return Expr::Identifier(kNames[rng() % 6]);
  }
  if (rng() % 5 == 0) return Expr::Call(kFunctions[rng() % 5], {RandomTree(rng, depth - 1)});
  return Expr::Binary(kOps[rng() % 6], RandomTree(rng, depth - 1), RandomTree(rng, depth - 1));
}

std::vector<mathsearch::Annotation> Corpus(int n) {
  std::mt19937 rng(42);
  static const char* kPages[] = {"lesson1", "quizzes", "wiki", "forum", "assignments"};
  std::vector<mathsearch::Annotation> out;
  for (int i = 0; i < n; ++i) {
    const Expr e = RandomTree(rng, 6);
    const std::string url =
        "http://h/" + std::string(kPages[i % 5]) + "/p" + std::to_string(i / 4) + ".htm#equation" +
        std::to_string(i % 4 + 1);
    out.push_back({mathsearch::UrlPath(url) + "#equation" + std::to_string(i % 4 + 1), url,
                   mathsearch::mathml::ToContent(e), mathsearch::SourceFromUrl(url).name,
                   std::string(mathsearch::CategoryString(mathsearch::Classify(e).name)),
                   "equation number " + std::to_string(i)});
  }
  return out;
}

void BM_ParseText(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<std::string> texts;
  for (int i = 0; i < 256; ++i) texts.push_back(mathsearch::PrintText(RandomTree(rng, 7)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mathsearch::ParseText(texts[i++ % texts.size()]));
}
BENCHMARK(BM_ParseText);

void BM_BuildIndex(benchmark::State& state) {
  const std::vector<mathsearch::Annotation> corpus = Corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mathsearch::InvertedIndex::Build(corpus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildIndex)->Arg(100)->Arg(1000);

void BM_Search(benchmark::State& state) {
  const mathsearch::InvertedIndex idx = mathsearch::InvertedIndex::Build(Corpus(static_cast<int>(state.range(0))));
  mathsearch::QueryFlags flags;
  flags.structural = state.range(1) != 0;
  const mathsearch::Query q = mathsearch::ParseQuery("Math: x ^ 2 + a * x + b = 0", flags);
  for (auto _ : state) benchmark::DoNotOptimize(mathsearch::Search(idx, q));
}
BENCHMARK(BM_Search)->Args({1000, 0})->Args({1000, 1})->Args({10000, 0});

void BM_IndexJsonRoundTrip(benchmark::State& state) {
  const mathsearch::InvertedIndex idx = mathsearch::InvertedIndex::Build(Corpus(1000));
  for (auto _ : state) benchmark::DoNotOptimize(mathsearch::InvertedIndex::FromJson(idx.ToJson()));
}
BENCHMARK(BM_IndexJsonRoundTrip);

}  // namespace

BENCHMARK_MAIN();
