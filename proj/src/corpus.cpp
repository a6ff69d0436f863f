#include "citex/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <utility>

#include "citex/errors.hpp"

namespace citex {

namespace {

std::string at_origin(const std::string& origin) {
  return origin.empty() ? std::string() : origin + ": ";
}

std::string paper_name(std::size_t index, std::span<const std::string> ids) {
  if (index < ids.size()) return ids[index];
  return "#" + std::to_string(index);
}

std::size_t resolve(const std::unordered_map<std::string, std::size_t>& index,
                    const std::string& id, const char* what, const std::string& origin) {
  auto it = index.find(id);
  if (it == index.end()) {
    throw Error(ErrorKind::unknown_reference,
                at_origin(origin) + "unknown " + what + " '" + id + "'");
  }
  return it->second;
}

void check_non_negative(double value, const char* what, const std::string& origin) {
  if (!std::isfinite(value) || value < 0.0) {
    throw Error(ErrorKind::negative_weight, at_origin(origin) + what + " must be finite and >= 0, got " +
                                                std::to_string(value));
  }
}

}  // namespace

std::optional<std::size_t> Corpus::find_author(std::string_view id) const {
  auto it = author_index_.find(std::string(id));
  if (it == author_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Corpus::find_paper(std::string_view id) const {
  auto it = paper_index_.find(std::string(id));
  if (it == paper_index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Corpus& a, const Corpus& b) {
  return a.author_ids_ == b.author_ids_ && a.paper_ids_ == b.paper_ids_ &&
         a.authorship_ == b.authorship_ && a.citations_ == b.citations_ &&
         a.reputation_ == b.reputation_ && a.paper_venues_ == b.paper_venues_ &&
         a.venue_ids_ == b.venue_ids_;
}

Corpus build_corpus(const RawDataset& raw, std::vector<std::string>* warnings) {
  auto warn = [warnings](std::string message) {
    if (warnings) warnings->push_back(std::move(message));
  };

  if (raw.authors.empty()) throw Error(ErrorKind::empty_dataset, "no authors");
  if (raw.papers.empty()) throw Error(ErrorKind::empty_dataset, "no papers");

  Corpus corpus;

  for (const auto& author : raw.authors) {
    if (!corpus.author_index_.emplace(author.id, corpus.author_ids_.size()).second) {
      throw Error(ErrorKind::duplicate_id, at_origin(author.origin) + "author '" + author.id + "' declared twice");
    }
    corpus.author_ids_.push_back(author.id);
  }

  std::unordered_map<std::string, std::size_t> venue_index;
  for (const auto& venue : raw.venues) {
    if (!venue_index.emplace(venue, corpus.venue_ids_.size()).second) {
      throw Error(ErrorKind::duplicate_id, "venue '" + venue + "' declared twice");
    }
    corpus.venue_ids_.push_back(venue);
  }

  for (const auto& paper : raw.papers) {
    if (!corpus.paper_index_.emplace(paper.id, corpus.paper_ids_.size()).second) {
      throw Error(ErrorKind::duplicate_id, at_origin(paper.origin) + "paper '" + paper.id + "' declared twice");
    }
    corpus.paper_ids_.push_back(paper.id);
    std::optional<std::size_t> venue;
    if (paper.venue) {
      auto [it, inserted] = venue_index.emplace(*paper.venue, corpus.venue_ids_.size());
      if (inserted) corpus.venue_ids_.push_back(*paper.venue);
      venue = it->second;
    }
    corpus.paper_venues_.push_back(venue);
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& edge : raw.authorship) {
    const auto author = resolve(corpus.author_index_, edge.author, "author", edge.origin);
    const auto paper = resolve(corpus.paper_index_, edge.paper, "paper", edge.origin);
    const double weight = edge.weight.value_or(1.0);
    check_non_negative(weight, "authorship weight", edge.origin);
    if (!seen.emplace(author, paper).second) {
      warn(at_origin(edge.origin) + "duplicate authorship (" + edge.author + ", " + edge.paper +
           ") collapsed");
      continue;
    }
    corpus.authorship_.push_back({author, paper, weight});
  }

  seen.clear();
  for (const auto& edge : raw.citations) {
    const auto citing = resolve(corpus.paper_index_, edge.from, "paper", edge.origin);
    const auto cited = resolve(corpus.paper_index_, edge.to, "paper", edge.origin);
    if (citing == cited) {
      throw Error(ErrorKind::self_citation_edge,
                  at_origin(edge.origin) + "paper '" + edge.from + "' cites itself");
    }
    if (!seen.emplace(citing, cited).second) {
      warn(at_origin(edge.origin) + "duplicate citation " + edge.from + " -> " + edge.to + " collapsed");
      continue;
    }
    corpus.citations_.push_back({citing, cited});
  }

  seen.clear();
  for (const auto& edge : raw.reputation) {
    const auto rater = resolve(corpus.author_index_, edge.from, "author", edge.origin);
    const auto rated = resolve(corpus.author_index_, edge.to, "author", edge.origin);
    if (rater == rated) {
      throw Error(ErrorKind::self_rating, at_origin(edge.origin) + "author '" + edge.from + "' rates themself");
    }
    check_non_negative(edge.rating, "rating", edge.origin);
    if (!seen.emplace(rater, rated).second) {
      warn(at_origin(edge.origin) + "duplicate rating " + edge.from + " -> " + edge.to + " collapsed");
      continue;
    }
    corpus.reputation_.push_back({rater, rated, edge.rating});
  }

  std::vector<bool> has_author(corpus.num_papers(), false);
  for (const auto& edge : corpus.authorship_) has_author[edge.paper] = true;
  for (std::size_t p = 0; p < has_author.size(); ++p) {
    if (!has_author[p]) {
      throw Error(ErrorKind::orphan_paper, "paper '" + corpus.paper_ids_[p] + "' has no authors");
    }
  }

  validate_dag(corpus.num_papers(), corpus.citations_, corpus.paper_ids_);
  return corpus;
}

RawDataset to_raw_dataset(const Corpus& corpus) {
  RawDataset raw;
  for (const auto& id : corpus.author_ids()) raw.authors.push_back({id, {}});
  for (std::size_t p = 0; p < corpus.num_papers(); ++p) {
    RawPaper paper{corpus.paper_ids()[p], std::nullopt, {}};
    if (const auto venue = corpus.paper_venues()[p]) paper.venue = corpus.venue_ids()[*venue];
    raw.papers.push_back(std::move(paper));
  }
  raw.venues = corpus.venue_ids();
  for (const auto& edge : corpus.authorship()) {
    raw.authorship.push_back(
        {corpus.author_ids()[edge.author], corpus.paper_ids()[edge.paper], edge.weight, {}});
  }
  for (const auto& edge : corpus.citations()) {
    raw.citations.push_back({corpus.paper_ids()[edge.citing], corpus.paper_ids()[edge.cited], {}});
  }
  for (const auto& edge : corpus.reputation()) {
    raw.reputation.push_back(
        {corpus.author_ids()[edge.rater], corpus.author_ids()[edge.rated], edge.rating, {}});
  }
  return raw;
}

std::vector<std::size_t> validate_dag(std::size_t num_papers, std::span<const Citation> citations,
                                      std::span<const std::string> paper_ids) {
  std::vector<std::vector<std::size_t>> cites(num_papers);
  std::vector<std::vector<std::size_t>> citers(num_papers);
  std::vector<std::size_t> pending_citers(num_papers, 0);
  for (const auto& edge : citations) {
    if (edge.citing >= num_papers || edge.cited >= num_papers) {
      throw Error(ErrorKind::dimension_mismatch, "citation references paper index out of range");
    }
    if (edge.citing == edge.cited) {
      throw Error(ErrorKind::self_citation_edge,
                  "paper '" + paper_name(edge.citing, paper_ids) + "' cites itself");
    }
    cites[edge.citing].push_back(edge.cited);
    citers[edge.cited].push_back(edge.citing);
    ++pending_citers[edge.cited];
  }

  // Kahn's algorithm; the min-heap keeps ties in input order.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t p = 0; p < num_papers; ++p) {
    if (pending_citers[p] == 0) ready.push(p);
  }
  std::vector<std::size_t> order;
  order.reserve(num_papers);
  while (!ready.empty()) {
    const auto paper = ready.top();
    ready.pop();
    order.push_back(paper);
    for (const auto cited : cites[paper]) {
      if (--pending_citers[cited] == 0) ready.push(cited);
    }
  }
  if (order.size() == num_papers) return order;

  // Every paper left over still has an unprocessed citer, so walking
  // backwards along citers must revisit a paper.
  std::vector<bool> placed(num_papers, false);
  for (const auto p : order) placed[p] = true;
  std::size_t start = 0;
  while (placed[start]) ++start;

  std::vector<std::size_t> walk;
  std::vector<std::size_t> position(num_papers, num_papers);
  std::size_t current = start;
  while (position[current] == num_papers) {
    position[current] = walk.size();
    walk.push_back(current);
    std::size_t next = num_papers;
    for (const auto citer : citers[current]) {
      if (!placed[citer]) next = std::min(next, citer);
    }
    current = next;
  }
  std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position[current]), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());

  std::string listing;
  for (const auto p : cycle) listing += paper_name(p, paper_ids) + " -> ";
  listing += paper_name(cycle.front(), paper_ids);
  throw CitationCycleError(std::move(cycle), "citation cycle " + listing);
}

AdjacencyView::AdjacencyView(const Corpus& corpus)
    : papers_of_(corpus.num_authors()),
      authors_of_(corpus.num_papers()),
      cited_by_(corpus.num_papers()),
      references_(corpus.num_papers()),
      raters_of_(corpus.num_authors()) {
  for (const auto& edge : corpus.authorship()) {
    papers_of_[edge.author].push_back(edge.paper);
    authors_of_[edge.paper].push_back(edge.author);
  }
  for (const auto& edge : corpus.citations()) {
    cited_by_[edge.cited].push_back(edge.citing);
    references_[edge.citing].push_back(edge.cited);
  }
  for (const auto& edge : corpus.reputation()) raters_of_[edge.rated].push_back(edge.rater);

  for (auto* lists : {&papers_of_, &authors_of_, &cited_by_, &references_, &raters_of_}) {
    for (auto& list : *lists) std::sort(list.begin(), list.end());
  }
}

}  // namespace citex
