#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace citex {

// Records as they come out of a dataset file, still keyed by string id.
// `origin` is a human-readable position ("citations.csv:4", "citations[3]")
// used in error messages.

struct RawAuthor {
  std::string id;
  std::string origin;
};

struct RawPaper {
  std::string id;
  std::optional<std::string> venue;
  std::string origin;
};

struct RawAuthorship {
  std::string author;
  std::string paper;
  std::optional<double> weight;
  std::string origin;
};

struct RawCitation {
  std::string from;  // citing paper
  std::string to;    // cited paper
  std::string origin;
};

struct RawRating {
  std::string from;  // rater
  std::string to;    // rated author
  double rating = 0.0;
  std::string origin;
};

struct RawDataset {
  std::vector<RawAuthor> authors;
  std::vector<RawPaper> papers;
  std::vector<RawAuthorship> authorship;
  std::vector<RawCitation> citations;
  std::vector<RawRating> reputation;
  // Venues declared up front; venues named only by papers are appended in
  // order of first use.
  std::vector<std::string> venues;
};

struct Authorship {
  std::size_t author;
  std::size_t paper;
  double weight;

  friend bool operator==(const Authorship&, const Authorship&) = default;
};

struct Citation {
  std::size_t citing;
  std::size_t cited;

  friend bool operator==(const Citation&, const Citation&) = default;
};

struct Rating {
  std::size_t rater;
  std::size_t rated;
  double rating;

  friend bool operator==(const Rating&, const Rating&) = default;
};

/// Validated, immutable author/paper dataset with dense 0-based indices.
///
/// Guarantees: ids are unique per class; every paper has at least one author;
/// authorship pairs are unique; citations are free of self-loops and cycles;
/// reputation has no self-ratings; weights and ratings are finite and >= 0.
class Corpus {
 public:
  std::size_t num_authors() const noexcept { return author_ids_.size(); }
  std::size_t num_papers() const noexcept { return paper_ids_.size(); }

  const std::vector<std::string>& author_ids() const noexcept { return author_ids_; }
  const std::vector<std::string>& paper_ids() const noexcept { return paper_ids_; }

  std::span<const Authorship> authorship() const noexcept { return authorship_; }
  std::span<const Citation> citations() const noexcept { return citations_; }
  std::span<const Rating> reputation() const noexcept { return reputation_; }

  /// Venue index per paper, if assigned.
  const std::vector<std::optional<std::size_t>>& paper_venues() const noexcept {
    return paper_venues_;
  }
  const std::vector<std::string>& venue_ids() const noexcept { return venue_ids_; }

  std::optional<std::size_t> find_author(std::string_view id) const;
  std::optional<std::size_t> find_paper(std::string_view id) const;

  friend bool operator==(const Corpus&, const Corpus&);

 private:
  friend Corpus build_corpus(const RawDataset&, std::vector<std::string>*);

  std::vector<std::string> author_ids_;
  std::vector<std::string> paper_ids_;
  std::vector<Authorship> authorship_;
  std::vector<Citation> citations_;
  std::vector<Rating> reputation_;
  std::vector<std::optional<std::size_t>> paper_venues_;
  std::vector<std::string> venue_ids_;
  std::unordered_map<std::string, std::size_t> author_index_;
  std::unordered_map<std::string, std::size_t> paper_index_;
};

/// Resolves string ids to dense indices and checks every structural
/// invariant. Duplicate authorship/citation/rating rows collapse to the first
/// occurrence; a message per collapsed row is appended to `warnings` when
/// given. Authorship weights default to 1.
///
/// Throws citex::Error (DuplicateId, UnknownReference, OrphanPaper,
/// SelfCitationEdge, SelfRating, NegativeWeight, DatasetError for an empty
/// author or paper list) or CitationCycleError.
Corpus build_corpus(const RawDataset& raw, std::vector<std::string>* warnings = nullptr);

/// Inverse of build_corpus: feeding the result back reproduces an identical
/// Corpus.
RawDataset to_raw_dataset(const Corpus& corpus);

/// Orders papers so that every citing paper precedes the papers it cites;
/// permuting C by this order makes it strictly upper-triangular. Among
/// papers that are ready at the same time the lowest index goes first, so an
/// already-ordered input comes back unchanged.
///
/// Throws CitationCycleError listing one directed cycle. `paper_ids`, when
/// non-empty, is used to name papers in the message.
std::vector<std::size_t> validate_dag(std::size_t num_papers, std::span<const Citation> citations,
                                      std::span<const std::string> paper_ids = {});

/// Neighbourhood lists derived from a Corpus:
///   papers_of(a)   PAPERS(a)  papers written by author a
///   authors_of(p)  AUTHORS(p) authors of paper p
///   cited_by(p)    CITE(p)    papers citing p
///   references(p)  REF(p)     papers cited by p
///   raters_of(a)   REP(a)     authors who rated a
/// Lists are sorted ascending.
class AdjacencyView {
 public:
  explicit AdjacencyView(const Corpus& corpus);

  std::span<const std::size_t> papers_of(std::size_t author) const { return papers_of_.at(author); }
  std::span<const std::size_t> authors_of(std::size_t paper) const { return authors_of_.at(paper); }
  std::span<const std::size_t> cited_by(std::size_t paper) const { return cited_by_.at(paper); }
  std::span<const std::size_t> references(std::size_t paper) const { return references_.at(paper); }
  std::span<const std::size_t> raters_of(std::size_t author) const { return raters_of_.at(author); }

 private:
  std::vector<std::vector<std::size_t>> papers_of_;
  std::vector<std::vector<std::size_t>> authors_of_;
  std::vector<std::vector<std::size_t>> cited_by_;
  std::vector<std::vector<std::size_t>> references_;
  std::vector<std::vector<std::size_t>> raters_of_;
};

}  // namespace citex
