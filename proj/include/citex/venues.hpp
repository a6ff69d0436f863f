#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citex/corpus.hpp"
#include "citex/engine.hpp"

namespace citex {

/// Paper -> venue mapping. Venues may be declared without any papers.
class VenueAssignment {
 public:
  /// Takes the venue fields carried by the corpus.
  static VenueAssignment from_corpus(const Corpus& corpus);

  /// Maps paper ids to venue ids; venues are ordered by first use. Throws
  /// citex::Error(UnknownPaperId) for a paper the corpus does not contain.
  static VenueAssignment from_map(const Corpus& corpus,
                                  const std::vector<std::pair<std::string, std::string>>& paper_to_venue);

  const std::vector<std::string>& venue_ids() const noexcept { return venue_ids_; }
  const std::vector<std::optional<std::size_t>>& paper_venues() const noexcept { return paper_venues_; }

  /// Distinct authors with at least one paper in each venue, ascending.
  std::vector<std::vector<std::size_t>> venue_authors(const Corpus& corpus) const;

 private:
  std::vector<std::string> venue_ids_;
  std::vector<std::optional<std::size_t>> paper_venues_;
};

struct VenueScore {
  std::string venue;
  std::size_t paper_count = 0;
  std::size_t author_count = 0;
  /// Empty for a venue with no papers.
  std::optional<double> mean_paper_score;
  std::optional<double> mean_author_score;
};

/// Mean converged paper score over each venue's papers, and mean author score
/// over the distinct authors who published there. Authors publishing in
/// several venues count fully in each.
std::vector<VenueScore> venue_scores(const ScoreVector& authors, const ScoreVector& papers,
                                     const Corpus& corpus, const VenueAssignment& assignment);

}  // namespace citex
