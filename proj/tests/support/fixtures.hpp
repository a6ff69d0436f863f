#pragma once

// Test-only corpus builders: the two worked examples encoded from their
// publication/citation matrices, and random acyclic corpora.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "citex/corpus.hpp"

namespace citex::testing {

using IntMatrix = std::vector<std::vector<int>>;

inline RawDataset raw_from_matrices(const IntMatrix& publication, const IntMatrix& citation) {
  RawDataset raw;
  const auto m = publication.size();
  const auto n = publication.front().size();
  for (std::size_t i = 0; i < m; ++i) raw.authors.push_back({"a" + std::to_string(i + 1), {}});
  for (std::size_t j = 0; j < n; ++j) raw.papers.push_back({"p" + std::to_string(j + 1), std::nullopt, {}});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (publication[i][j]) {
        raw.authorship.push_back({"a" + std::to_string(i + 1), "p" + std::to_string(j + 1), std::nullopt, {}});
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (citation[j][k]) raw.citations.push_back({"p" + std::to_string(j + 1), "p" + std::to_string(k + 1), {}});
    }
  }
  return raw;
}

inline const IntMatrix example1_publication{
    {1, 0, 1, 0, 1}, {0, 1, 0, 1, 0}, {0, 1, 1, 0, 1}, {1, 0, 1, 1, 1}};
inline const IntMatrix example1_citation{
    {0, 1, 1, 0, 1}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}};
inline const IntMatrix example2_publication{{1, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
inline const IntMatrix example2_citation{{0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 1, 0}};

// Published converged scores, 3 decimals.
inline const std::vector<double> example1_authors{0.259, 0.132, 0.289, 0.320};
inline const std::vector<double> example1_papers{0.082, 0.141, 0.264, 0.123, 0.390};
inline const std::vector<double> example2_authors{0.106, 0.590, 0.152, 0.152, 0.000};
inline const std::vector<double> example2_papers{0.212, 0.304, 0.484, 0.000};

inline Corpus example1() { return build_corpus(raw_from_matrices(example1_publication, example1_citation)); }
inline Corpus example2() { return build_corpus(raw_from_matrices(example2_publication, example2_citation)); }

struct RandomCorpusOptions {
  std::size_t max_authors = 8;
  std::size_t max_papers = 8;
  double citation_density = 0.35;
  bool weights = false;
  bool reputation = false;
};

/// Random valid corpus. Papers get a hidden publication order, citations only
/// go from newer to older, so the index order is generally not topological.
inline RawDataset random_raw_corpus(std::mt19937_64& rng, const RandomCorpusOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> m_dist(1, opt.max_authors);
  std::uniform_int_distribution<std::size_t> n_dist(1, opt.max_papers);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.1, 3.0);
  const auto m = m_dist(rng);
  const auto n = n_dist(rng);

  RawDataset raw;
  for (std::size_t i = 0; i < m; ++i) raw.authors.push_back({"a" + std::to_string(i), {}});
  for (std::size_t j = 0; j < n; ++j) raw.papers.push_back({"p" + std::to_string(j), std::nullopt, {}});

  std::uniform_int_distribution<std::size_t> pick_author(0, m - 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> wrote(m, false);
    wrote[pick_author(rng)] = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (unit(rng) < 0.3) wrote[i] = true;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!wrote[i]) continue;
      std::optional<double> w;
      if (opt.weights) w = weight(rng);
      raw.authorship.push_back({"a" + std::to_string(i), "p" + std::to_string(j), w, {}});
    }
  }

  std::vector<std::size_t> age(n);
  std::iota(age.begin(), age.end(), 0);
  std::shuffle(age.begin(), age.end(), rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (age[j] > age[k] && unit(rng) < opt.citation_density) {
        raw.citations.push_back({"p" + std::to_string(j), "p" + std::to_string(k), {}});
      }
    }
  }

  if (opt.reputation) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        if (i != k && unit(rng) < 0.25) {
          raw.reputation.push_back({"a" + std::to_string(i), "a" + std::to_string(k), weight(rng), {}});
        }
      }
    }
  }
  return raw;
}

inline std::vector<double> random_positive(std::mt19937_64& rng, std::size_t size) {
  std::uniform_real_distribution<double> dist(0.01, 1.0);
  std::vector<double> v(size);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace citex::testing
