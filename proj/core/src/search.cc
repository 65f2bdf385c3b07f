#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "mathsearch/search.h"

namespace mathsearch {
namespace {

double Norm(const WeightVector& v) {
  double sum = 0.0;
  for (const auto& [unused, w] : v) sum += w * w;
  return std::sqrt(sum);
}

bool PassesFilters(const IndexedDoc& d, const Query& q) {
  if (q.source_filter && d.annotation.source != *q.source_filter) return false;
  if (q.category_filter && d.annotation.category != *q.category_filter) return false;
  if (q.require_all_identifiers) {
    for (const std::string& id : q.identifiers) {
      if (!d.exact_tf.contains(id)) return false;
    }
  }
  return true;
}

}  // namespace

double Cosine(const WeightVector& a, const WeightVector& b) {
  const double na = Norm(a);
  const double nb = Norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  const WeightVector& small = a.size() <= b.size() ? a : b;
  const WeightVector& large = a.size() <= b.size() ? b : a;
  double dot = 0.0;
  for (const auto& [term, w] : small) {
    const auto it = large.find(term);
    if (it != large.end()) dot += w * it->second;
  }
  return std::clamp(dot / (na * nb), 0.0, 1.0);
}

WeightVector QueryVector(const InvertedIndex& idx, const Query& q) {
  const Field field = q.structural ? Field::kStructural : Field::kExact;
  WeightVector v;
  for (const auto& [term, n] : q.terms) v[term] = n * idx.Idf(field, term);
  return v;
}

std::vector<RankedHit> Search(const InvertedIndex& idx, const Query& q) {
  std::vector<RankedHit> hits;
  if (idx.empty()) return hits;
  const Field field = q.structural ? Field::kStructural : Field::kExact;

  // Phase 1: accumulate dot products over the postings of the query terms.
  const WeightVector query = QueryVector(idx, q);
  const double query_norm = Norm(query);
  if (query_norm == 0.0) return hits;
  std::unordered_map<int, double> dots;
  for (const auto& [term, qw] : query) {
    const double idf = idx.Idf(field, term);
    for (const Posting& p : idx.Postings(field, term)) dots[p.doc_id] += qw * p.tf * idf;
  }

  struct Scored {
    int doc_id;
    double score;
  };
  std::vector<Scored> scored;
  for (const auto& [doc_id, dot] : dots) {
    const IndexedDoc& d = idx.doc(doc_id);
    if (!PassesFilters(d, q)) continue;
    const double doc_norm = idx.Norm(field, doc_id);
    if (doc_norm == 0.0) continue;
    const double score = std::clamp(dot / (query_norm * doc_norm), 0.0, 1.0);
    if (score > 0.0) scored.push_back({doc_id, score});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
  });
  if (scored.size() > static_cast<std::size_t>(q.top_k)) scored.resize(q.top_k);

  // Phase 2: fetch each survivor's annotation.
  hits.reserve(scored.size());
  for (const Scored& s : scored) {
    const Annotation& a = idx.doc(s.doc_id).annotation;
    hits.push_back(RankedHit{s.score, s.doc_id, a.anchor_link, a.doc_uri, a.source, a.category,
                             a.description});
  }
  return hits;
}

}  // namespace mathsearch
