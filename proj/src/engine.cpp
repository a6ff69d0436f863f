#include "citex/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "citex/errors.hpp"
#include "citex/matrices.hpp"

namespace citex {

ScoreVector normalize_l1(std::span<const double> v) {
  double sum = 0.0;
  for (const double value : v) {
    if (!std::isfinite(value) || value < 0.0) {
      throw std::invalid_argument("normalize_l1: entries must be finite and non-negative");
    }
    sum += value;
  }
  if (!(sum > 0.0)) throw Error(ErrorKind::zero_vector, "score vector sums to zero");
  std::vector<double> out(v.begin(), v.end());
  for (double& value : out) value /= sum;
  return ScoreVector(std::move(out));
}

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::base: return "base";
    case Mode::weighted: return "weighted";
    case Mode::reputation: return "reputation";
    case Mode::weighted_reputation: return "weighted+reputation";
  }
  return "base";
}

std::string_view to_string(Termination termination) noexcept {
  return termination == Termination::converged ? "converged" : "max_iterations";
}

void IterationConfig::validate() const {
  if (max_iterations < 1) {
    throw Error(ErrorKind::invalid_config, "max_iterations must be >= 1");
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorKind::invalid_config, "tolerance must be a positive number");
  }
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "l1_distance: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

namespace {

SparseMatrix weights_for(const Corpus& corpus, const SparseMatrix& authorship) {
  try {
    return weight_matrix(authorship);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::zero_column_sum) throw;
    const auto sums = authorship.column_sums();
    for (std::size_t j = 0; j < sums.size(); ++j) {
      if (!(sums[j] > 0.0)) {
        throw Error(ErrorKind::zero_column_sum,
                    "authorship weights of paper '" + corpus.paper_ids()[j] + "' sum to zero");
      }
    }
    throw;
  }
}

std::vector<double> add(std::vector<double> a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

void require_size(std::span<const double> v, std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw Error(ErrorKind::dimension_mismatch, std::string(what) + ": expected " + std::to_string(expected) +
                                                   " entries, got " + std::to_string(v.size()));
  }
}

}  // namespace

ScoreOperators::ScoreOperators(const Corpus& corpus, Mode mode)
    : mode_(mode),
      authorship_(uses_weights(mode) ? weighted_publication_matrix(corpus) : publication_matrix(corpus)),
      weights_(weights_for(corpus, authorship_)),
      citations_(citation_matrix(corpus)) {
  if (uses_reputation(mode)) reputation_ = reputation_matrix(corpus);
}

std::vector<double> ScoreOperators::author_update(std::span<const double> paper_scores) const {
  return spmv(weights_, paper_scores);
}

std::vector<double> ScoreOperators::paper_update(std::span<const double> author_scores) const {
  return spmv_transposed(authorship_, author_scores);
}

std::vector<double> ScoreOperators::citation_boost(std::span<const double> paper_scores) const {
  std::vector<double> in(paper_scores.begin(), paper_scores.end());
  return add(std::move(in), spmv_transposed(citations_, paper_scores));
}

std::vector<double> ScoreOperators::reputation_boost(std::span<const double> author_scores) const {
  require_size(author_scores, num_authors(), "reputation_boost");
  std::vector<double> in(author_scores.begin(), author_scores.end());
  if (!reputation_) return in;
  return add(std::move(in), spmv_transposed(*reputation_, author_scores));
}

std::vector<double> ScoreOperators::apply_author_operator(std::span<const double> author_scores) const {
  const auto papers = citation_boost(paper_update(author_scores));
  return reputation_boost(author_update(papers));
}

std::vector<double> ScoreOperators::apply_paper_operator(std::span<const double> paper_scores) const {
  const auto authors = reputation_boost(author_update(paper_scores));
  return citation_boost(paper_update(authors));
}

std::vector<double> adjusted_paper_scores(std::span<const double> paper_scores, const Corpus& corpus) {
  require_size(paper_scores, corpus.num_papers(), "adjusted_paper_scores");
  std::vector<std::size_t> author_counts(corpus.num_papers(), 0);
  for (const auto& edge : corpus.authorship()) ++author_counts[edge.paper];
  std::vector<double> out(paper_scores.begin(), paper_scores.end());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] /= static_cast<double>(author_counts[j]);
  return out;
}

RunResult run(const Corpus& corpus, const IterationConfig& config) {
  const std::vector<double> authors(corpus.num_authors(), 1.0);
  const std::vector<double> papers(corpus.num_papers(), 1.0);
  return run(corpus, config, authors, papers);
}

RunResult run(const Corpus& corpus, const IterationConfig& config,
              std::span<const double> initial_authors, std::span<const double> initial_papers) {
  config.validate();
  return run(ScoreOperators(corpus, config.mode), config, initial_authors, initial_papers);
}

RunResult run(const ScoreOperators& ops, const IterationConfig& config,
              std::span<const double> initial_authors, std::span<const double> initial_papers) {
  config.validate();
  require_size(initial_authors, ops.num_authors(), "initial author scores");
  require_size(initial_papers, ops.num_papers(), "initial paper scores");

  RunResult result;
  auto& report = result.report;
  ScoreVector x = normalize_l1(initial_authors);
  ScoreVector y = normalize_l1(initial_papers);

  for (int k = 1; k <= config.max_iterations; ++k) {
    const auto raw_x = ops.reputation_boost(ops.author_update(y.values()));
    const auto raw_y = ops.citation_boost(ops.paper_update(raw_x));

    // raw_y = Q y with ||y||_1 = 1.
    double growth = 0.0;
    for (const double v : raw_y) growth += v;
    report.eigenvalue_estimate = growth;

    ScoreVector next_x = normalize_l1(raw_x);
    ScoreVector next_y = normalize_l1(raw_y);
    const double dx = l1_distance(next_x.values(), x.values());
    const double dy = l1_distance(next_y.values(), y.values());
    report.author_deltas.push_back(dx);
    report.paper_deltas.push_back(dy);
    report.iterations = k;
    x = std::move(next_x);
    y = std::move(next_y);

    if (dx <= config.tolerance && dy <= config.tolerance) {
      report.termination = Termination::converged;
      break;
    }
  }

  report.author_residual =
      l1_distance(normalize_l1(ops.apply_author_operator(x.values())).values(), x.values());
  report.paper_residual =
      l1_distance(normalize_l1(ops.apply_paper_operator(y.values())).values(), y.values());

  result.authors = std::move(x);
  result.papers = std::move(y);
  return result;
}

}  // namespace citex
