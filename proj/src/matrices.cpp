#include "citex/matrices.hpp"

#include <string>

#include "citex/errors.hpp"

namespace citex {

SparseMatrix publication_matrix(const Corpus& corpus) {
  std::vector<Triplet> entries;
  entries.reserve(corpus.authorship().size());
  for (const auto& edge : corpus.authorship()) entries.push_back({edge.author, edge.paper, 1.0});
  return SparseMatrix::from_triplets(corpus.num_authors(), corpus.num_papers(), std::move(entries));
}

SparseMatrix weighted_publication_matrix(const Corpus& corpus) {
  std::vector<Triplet> entries;
  entries.reserve(corpus.authorship().size());
  for (const auto& edge : corpus.authorship()) entries.push_back({edge.author, edge.paper, edge.weight});
  return SparseMatrix::from_triplets(corpus.num_authors(), corpus.num_papers(), std::move(entries));
}

SparseMatrix citation_matrix(const Corpus& corpus) {
  std::vector<Triplet> entries;
  entries.reserve(corpus.citations().size());
  for (const auto& edge : corpus.citations()) entries.push_back({edge.citing, edge.cited, 1.0});
  return SparseMatrix::from_triplets(corpus.num_papers(), corpus.num_papers(), std::move(entries));
}

SparseMatrix weight_matrix(const SparseMatrix& publication) {
  const auto sums = publication.column_sums();
  for (std::size_t j = 0; j < sums.size(); ++j) {
    if (!(sums[j] > 0.0)) {
      throw Error(ErrorKind::zero_column_sum,
                  "column " + std::to_string(j) + " has no positive authorship weight");
    }
  }
  return publication.transform([&](std::size_t, std::size_t col, double v) { return v / sums[col]; });
}

SparseMatrix reputation_matrix(const Corpus& corpus) {
  std::vector<Triplet> entries;
  entries.reserve(corpus.reputation().size());
  for (const auto& edge : corpus.reputation()) entries.push_back({edge.rater, edge.rated, edge.rating});
  return SparseMatrix::from_triplets(corpus.num_authors(), corpus.num_authors(), std::move(entries));
}

}  // namespace citex
