#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mathsearch/annotate.h"
#include "mathsearch/errors.h"
#include "mathsearch/index.h"
#include "mathsearch/ontology.h"
#include "mathsearch/search.h"

namespace mathsearch::cli {
namespace {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

// Problems found inside a file's contents are format errors of that file.
template <typename Fn>
auto FromFile(const fs::path& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string OneLine(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

std::map<int, std::string> ParseDescriptions(const std::vector<std::string>& entries,
                                             const std::string& origin) {
  std::map<int, std::string> out;
  for (const std::string& entry : entries) {
    const std::size_t eq = entry.find('=');
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(entry.substr(0, eq), &used);
      if (used != eq) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (eq == std::string::npos || n < 1) {
      throw InputError(origin + ": description '" + entry + "' must look like N=TEXT with N >= 1");
    }
    out[n] = entry.substr(eq + 1);
  }
  return out;
}

bool IsPageFile(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".html" || ext == ".htm" || ext == ".xhtml" || ext == ".xml";
}

std::vector<fs::path> PageFiles(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && IsPageFile(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string FormatScore(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", score);
  return buf;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Math-aware semantic search over RDFa-annotated course pages", "mathsearch"};
  app.require_subcommand(1);

  // annotate
  auto* annotate = app.add_subcommand("annotate", "Annotate the math elements of an XHTML page");
  std::string annotate_file, page_url, annotate_out, desc_file;
  std::vector<std::string> descs;
  annotate->add_option("file", annotate_file, "XHTML page")->required();
  annotate->add_option("--url", page_url, "URL the page is served under")->required();
  annotate->add_option("--desc", descs, "Description of equation N, as N=TEXT");
  annotate->add_option("--desc-file", desc_file, "File with one N=TEXT description per line");
  annotate->add_option("--out", annotate_out, "Write the annotated page here instead of stdout");

  // index
  auto* index = app.add_subcommand("index", "Build an index from annotated pages");
  std::string index_dir, index_out;
  index->add_option("dir", index_dir, "Directory of annotated pages")->required();
  index->add_option("--out", index_out, "Index file to write")->required();

  // search
  auto* search = app.add_subcommand("search", "Search an index");
  std::string search_index, query_text, source_filter, category_filter;
  QueryFlags flags;
  search->add_option("--index", search_index, "Index file")->required();
  search->add_option("query", query_text, "Keyword query or 'Math: ...'")->required();
  search->add_option("--source", source_filter, "Only hits from this course component");
  search->add_option("--category", category_filter, "Only hits in this category");
  search->add_flag("--exact", flags.exact, "Require every identifier of the query");
  search->add_flag("--structural", flags.structural, "Match operator structure only");
  search->add_flag("--no-order", flags.no_order, "Ignore operator evaluation order");
  search->add_option("--top", flags.top_k, "Number of hits")->check(CLI::PositiveNumber);

  // extract
  auto* extract = app.add_subcommand("extract", "Print the RDF triples of an annotated page");
  std::string extract_file, triples_out;
  extract->add_option("file", extract_file, "Annotated XHTML page")->required();
  extract->add_option("--triples-out", triples_out, "Write triples here instead of stdout");

  // sparql
  auto* sparql = app.add_subcommand("sparql", "Run a triple-pattern query");
  std::string triples_file, sparql_text;
  sparql->add_option("--triples", triples_file, "Triples file (defaults to the FROM reference)");
  sparql->add_option("query", sparql_text, "SELECT ... WHERE { ... }")->required();

  // tag
  auto* tag = app.add_subcommand("tag", "Manage folksonomy tags");
  tag->require_subcommand(1);
  std::string store_path, resource, concept_name, tag_text;
  int threshold = 3;
  auto* tag_add = tag->add_subcommand("add", "Tag a resource under a concept");
  tag_add->add_option("--store", store_path, "Tag store file")->required();
  tag_add->add_option("resource", resource)->required();
  tag_add->add_option("concept", concept_name)->required();
  tag_add->add_option("tag", tag_text)->required();
  auto* tag_cloud = tag->add_subcommand("cloud", "Tag cloud of one resource");
  tag_cloud->add_option("--store", store_path, "Tag store file")->required();
  tag_cloud->add_option("resource", resource)->required();
  auto* tag_promote = tag->add_subcommand("promote", "Promote agreed tags to concepts");
  tag_promote->add_option("--store", store_path, "Tag store file")->required();
  tag_promote->add_option("--threshold", threshold, "Minimum total count")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("mathsearch");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (e.get_exit_code() == 0) return kOk;
    const CLI::App* failing = &app;
    for (const CLI::App* sub : app.get_subcommands()) {
      failing = sub;
      for (const CLI::App* nested : sub->get_subcommands()) failing = nested;
    }
    if (failing != &app) err << failing->help();
    return kUserError;
  }

  try {
    if (annotate->parsed()) {
      std::map<int, std::string> descriptions = ParseDescriptions(descs, "--desc");
      if (!desc_file.empty()) {
        std::istringstream lines(ReadFile(desc_file));
        std::vector<std::string> from_file;
        for (std::string line; std::getline(lines, line);) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (!line.empty()) from_file.push_back(line);
        }
        for (auto& [n, text] : FromFile(desc_file, [&] { return ParseDescriptions(from_file, desc_file); })) {
          descriptions.try_emplace(n, text);
        }
      }
      const std::string page = ReadFile(annotate_file);
      const AnnotatedDocument doc =
          FromFile(annotate_file, [&] { return AnnotateDocument(page, page_url, descriptions); });
      for (const std::string& w : doc.warnings) err << "warning: " << annotate_file << ": " << w << '\n';
      if (annotate_out.empty()) {
        out << doc.xhtml;
      } else {
        WriteFile(annotate_out, doc.xhtml);
      }
      return kOk;
    }

    if (index->parsed()) {
      std::vector<Annotation> annotations;
      const std::vector<fs::path> files = PageFiles(index_dir);
      for (const fs::path& file : files) {
        const std::string page = ReadFile(file);
        for (Annotation& a : FromFile(file, [&] { return ExtractAnnotations(page); })) {
          annotations.push_back(std::move(a));
        }
      }
      std::vector<std::string> warnings;
      const InvertedIndex idx = InvertedIndex::Build(annotations, &warnings);
      for (const std::string& w : warnings) err << "warning: " << w << '\n';
      idx.Save(index_out);
      out << "indexed " << idx.size() << " equations from " << files.size() << " files\n";
      return kOk;
    }

    if (search->parsed()) {
      if (!source_filter.empty()) flags.source = source_filter;
      if (!category_filter.empty()) flags.category = category_filter;
      const Query q = ParseQuery(query_text, flags);
      const InvertedIndex idx = InvertedIndex::Load(search_index);
      for (const RankedHit& hit : Search(idx, q)) {
        out << FormatScore(hit.score) << '\t' << hit.anchor_link << '\t' << hit.source << '\t'
            << hit.category << '\t' << OneLine(hit.description) << '\n';
      }
      return kOk;
    }

    if (extract->parsed()) {
      const std::string page = ReadFile(extract_file);
      const std::vector<Triple> triples =
          ToTriples(FromFile(extract_file, [&] { return ExtractAnnotations(page); }));
      if (triples_out.empty()) {
        WriteTriples(triples, out);
      } else {
        std::ostringstream buffer;
        WriteTriples(triples, buffer);
        WriteFile(triples_out, buffer.str());
      }
      return kOk;
    }

    if (sparql->parsed()) {
      const SparqlQuery q = ParseSparql(sparql_text);
      if (triples_file.empty()) {
        if (!q.from) throw InputError("no --triples file given and the query has no FROM <file>");
        triples_file = *q.from;
      }
      const std::vector<Triple> triples = ReadTriplesFile(triples_file);
      const std::vector<Binding> rows = SparqlSelect(triples, q);
      const std::vector<std::string> vars = q.ProjectedVariables();
      for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "\t" : "") << '?' << vars[i];
      out << '\n';
      for (const Binding& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << OneLine(row[i].second);
        out << '\n';
      }
      return kOk;
    }

    if (tag->parsed()) {
      TagStore store = TagStore::Load(store_path);
      if (tag_add->parsed()) {
        out << store.AddTag(resource, concept_name, tag_text) << '\n';
        store.Save(store_path);
      } else if (tag_cloud->parsed()) {
        for (const auto& [t, n] : store.TagCloud(resource)) out << t << '\t' << n << '\n';
      } else if (tag_promote->parsed()) {
        for (const ConceptId& c : store.PromoteTags(threshold)) {
          out << c.name << '\t' << store.ParentOf(c.name).value_or("") << '\n';
        }
        store.Save(store_path);
      }
      return kOk;
    }
  } catch (const StorageError& e) {
    err << "error: " << e.what() << '\n';
    return kStorageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kStorageError;
  }
  return kUserError;
}

}  // namespace mathsearch::cli
