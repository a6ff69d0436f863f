#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "citex/corpus.hpp"

namespace citex {

using CitationCount = std::size_t;

// Indices over one author's per-paper citation counts. Order of the input
// does not matter.

/// Largest h such that h papers have at least h citations each.
std::size_t h_index(std::span<const CitationCount> citations);

/// Largest g <= N_p such that the g most-cited papers total at least g^2
/// citations. No zero-citation padding beyond N_p.
std::size_t g_index(std::span<const CitationCount> citations);

/// sqrt(citations in the h most-cited papers - h^2).
double e_index(std::span<const CitationCount> citations);

/// Number of papers with strictly more than `threshold` citations.
std::size_t significant_papers(std::span<const CitationCount> citations, CitationCount threshold);

/// Citations summed over the k most-cited papers (all papers if k > N_p).
CitationCount top_k_citations(std::span<const CitationCount> citations, std::size_t k);

/// Incoming citations per paper. With `exclude_self_citations`, an edge
/// between two papers that share an author is not counted.
std::vector<CitationCount> citation_counts(const Corpus& corpus, bool exclude_self_citations = false);

struct MetricsOptions {
  CitationCount significance_threshold = 0;  // c
  std::size_t top_k = 0;                     // k
  bool exclude_self_citations = false;
};

struct MetricsRecord {
  std::string author;
  std::size_t num_papers = 0;          // N_p
  CitationCount num_citations = 0;     // N_c
  /// False when N_p = 0; the ratio fields are then reported as 0.
  bool has_papers = false;
  double citations_per_paper = 0.0;    // N_c / N_p
  double citations_per_author = 0.0;   // sum over papers of citations / author count
  double papers_per_author = 0.0;      // sum over papers of 1 / author count
  std::size_t h_index = 0;
  std::size_t g_index = 0;
  double e_index = 0.0;
  std::size_t significant_papers = 0;
  CitationCount top_k_citations = 0;
};

/// One record per author, in corpus order.
std::vector<MetricsRecord> author_metrics(const Corpus& corpus, const MetricsOptions& options = {});

/// Corpus-level average number of authors per paper.
double authors_per_paper(const Corpus& corpus);

}  // namespace citex
