#include "citex/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace citex {

namespace {

std::vector<CitationCount> sorted_descending(std::span<const CitationCount> citations) {
  std::vector<CitationCount> sorted(citations.begin(), citations.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

std::size_t h_index_sorted(const std::vector<CitationCount>& sorted) {
  std::size_t h = 0;
  while (h < sorted.size() && sorted[h] >= h + 1) ++h;
  return h;
}

}  // namespace

std::size_t h_index(std::span<const CitationCount> citations) {
  return h_index_sorted(sorted_descending(citations));
}

std::size_t g_index(std::span<const CitationCount> citations) {
  const auto sorted = sorted_descending(citations);
  // The prefix sum minus g^2 is not monotone in g, so scan all of them.
  std::size_t g = 0;
  CitationCount total = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    total += sorted[i];
    if (total >= (i + 1) * (i + 1)) g = i + 1;
  }
  return g;
}

double e_index(std::span<const CitationCount> citations) {
  const auto sorted = sorted_descending(citations);
  const std::size_t h = h_index_sorted(sorted);
  CitationCount core = 0;
  for (std::size_t i = 0; i < h; ++i) core += sorted[i];
  return std::sqrt(static_cast<double>(core - h * h));
}

std::size_t significant_papers(std::span<const CitationCount> citations, CitationCount threshold) {
  return static_cast<std::size_t>(
      std::count_if(citations.begin(), citations.end(), [&](CitationCount c) { return c > threshold; }));
}

CitationCount top_k_citations(std::span<const CitationCount> citations, std::size_t k) {
  const auto sorted = sorted_descending(citations);
  CitationCount total = 0;
  for (std::size_t i = 0; i < std::min(k, sorted.size()); ++i) total += sorted[i];
  return total;
}

std::vector<CitationCount> citation_counts(const Corpus& corpus, bool exclude_self_citations) {
  std::vector<CitationCount> counts(corpus.num_papers(), 0);
  if (!exclude_self_citations) {
    for (const auto& edge : corpus.citations()) ++counts[edge.cited];
    return counts;
  }
  const AdjacencyView adjacency(corpus);
  for (const auto& edge : corpus.citations()) {
    const auto a = adjacency.authors_of(edge.citing);
    const auto b = adjacency.authors_of(edge.cited);
    std::vector<std::size_t> shared;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
    if (shared.empty()) ++counts[edge.cited];
  }
  return counts;
}

std::vector<MetricsRecord> author_metrics(const Corpus& corpus, const MetricsOptions& options) {
  const AdjacencyView adjacency(corpus);
  const auto counts = citation_counts(corpus, options.exclude_self_citations);

  std::vector<MetricsRecord> records;
  records.reserve(corpus.num_authors());
  for (std::size_t a = 0; a < corpus.num_authors(); ++a) {
    MetricsRecord r;
    r.author = corpus.author_ids()[a];
    std::vector<CitationCount> own;
    for (const auto p : adjacency.papers_of(a)) {
      const auto authors = static_cast<double>(adjacency.authors_of(p).size());
      own.push_back(counts[p]);
      r.num_citations += counts[p];
      r.citations_per_author += static_cast<double>(counts[p]) / authors;
      r.papers_per_author += 1.0 / authors;
    }
    r.num_papers = own.size();
    r.has_papers = !own.empty();
    if (r.has_papers) {
      r.citations_per_paper = static_cast<double>(r.num_citations) / static_cast<double>(r.num_papers);
    }
    r.h_index = h_index(own);
    r.g_index = g_index(own);
    r.e_index = e_index(own);
    r.significant_papers = significant_papers(own, options.significance_threshold);
    r.top_k_citations = top_k_citations(own, options.top_k);
    records.push_back(std::move(r));
  }
  return records;
}

double authors_per_paper(const Corpus& corpus) {
  if (corpus.num_papers() == 0) return 0.0;
  return static_cast<double>(corpus.authorship().size()) / static_cast<double>(corpus.num_papers());
}

}  // namespace citex
