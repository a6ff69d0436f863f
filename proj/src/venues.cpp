#include "citex/venues.hpp"

#include <algorithm>
#include <unordered_map>

#include "citex/errors.hpp"

namespace citex {

VenueAssignment VenueAssignment::from_corpus(const Corpus& corpus) {
  VenueAssignment out;
  out.venue_ids_ = corpus.venue_ids();
  out.paper_venues_ = corpus.paper_venues();
  return out;
}

VenueAssignment VenueAssignment::from_map(
    const Corpus& corpus, const std::vector<std::pair<std::string, std::string>>& paper_to_venue) {
  VenueAssignment out;
  out.paper_venues_.assign(corpus.num_papers(), std::nullopt);
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& [paper_id, venue_id] : paper_to_venue) {
    const auto paper = corpus.find_paper(paper_id);
    if (!paper) throw Error(ErrorKind::unknown_paper_id, "venue assignment names unknown paper '" + paper_id + "'");
    auto [it, inserted] = index.emplace(venue_id, out.venue_ids_.size());
    if (inserted) out.venue_ids_.push_back(venue_id);
    out.paper_venues_[*paper] = it->second;
  }
  return out;
}

std::vector<std::vector<std::size_t>> VenueAssignment::venue_authors(const Corpus& corpus) const {
  std::vector<std::vector<std::size_t>> authors(venue_ids_.size());
  for (const auto& edge : corpus.authorship()) {
    if (const auto venue = paper_venues_.at(edge.paper)) authors[*venue].push_back(edge.author);
  }
  for (auto& list : authors) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return authors;
}

std::vector<VenueScore> venue_scores(const ScoreVector& authors, const ScoreVector& papers,
                                     const Corpus& corpus, const VenueAssignment& assignment) {
  if (authors.size() != corpus.num_authors() || papers.size() != corpus.num_papers() ||
      assignment.paper_venues().size() != corpus.num_papers()) {
    throw Error(ErrorKind::dimension_mismatch, "venue_scores: score vectors do not match the corpus");
  }
  std::vector<VenueScore> out(assignment.venue_ids().size());
  std::vector<double> paper_sums(out.size(), 0.0);
  for (std::size_t v = 0; v < out.size(); ++v) out[v].venue = assignment.venue_ids()[v];
  for (std::size_t p = 0; p < corpus.num_papers(); ++p) {
    if (const auto venue = assignment.paper_venues()[p]) {
      ++out[*venue].paper_count;
      paper_sums[*venue] += papers[p];
    }
  }
  const auto members = assignment.venue_authors(corpus);
  for (std::size_t v = 0; v < out.size(); ++v) {
    auto& score = out[v];
    score.author_count = members[v].size();
    if (score.paper_count == 0) continue;
    score.mean_paper_score = paper_sums[v] / static_cast<double>(score.paper_count);
    double author_sum = 0.0;
    for (const auto a : members[v]) author_sum += authors[a];
    score.mean_author_score = author_sum / static_cast<double>(score.author_count);
  }
  return out;
}

}  // namespace citex
