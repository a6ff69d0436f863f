#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "citex/corpus.hpp"
#include "citex/sparse_matrix.hpp"

namespace citex {

/// L1-normalized, non-negative score vector (author a-scores or paper
/// p-scores). Only normalize_l1 creates one, so every instance sums to 1.
class ScoreVector {
 public:
  ScoreVector() = default;

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  friend ScoreVector normalize_l1(std::span<const double>);
  explicit ScoreVector(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

/// Divides v by its sum. Throws citex::Error(ZeroVector) when the sum is not
/// positive and std::invalid_argument for a negative or non-finite entry.
ScoreVector normalize_l1(std::span<const double> v);

enum class Mode { base, weighted, reputation, weighted_reputation };

constexpr bool uses_weights(Mode mode) noexcept {
  return mode == Mode::weighted || mode == Mode::weighted_reputation;
}
constexpr bool uses_reputation(Mode mode) noexcept {
  return mode == Mode::reputation || mode == Mode::weighted_reputation;
}
std::string_view to_string(Mode mode) noexcept;

struct IterationConfig {
  int max_iterations = 100;
  /// Bound on the L1 change of both normalized vectors between iterations.
  double tolerance = 1e-9;
  Mode mode = Mode::base;

  /// Throws citex::Error(InvalidConfig).
  void validate() const;
};

enum class Termination { converged, max_iterations };
std::string_view to_string(Termination termination) noexcept;

struct ConvergenceReport {
  int iterations = 0;
  std::vector<double> author_deltas;  // L1 change of x per iteration
  std::vector<double> paper_deltas;   // L1 change of y per iteration
  /// L1 change produced by one more full normalized update of the final x / y.
  double author_residual = 0.0;
  double paper_residual = 0.0;
  /// Growth factor of the last iteration, ||Q y|| / ||y|| before
  /// normalization. Estimates the dominant eigenvalue shared by P and Q.
  double eigenvalue_estimate = 0.0;
  Termination termination = Termination::max_iterations;
};

struct RunResult {
  ScoreVector authors;
  ScoreVector papers;
  ConvergenceReport report;
};

/// The factored iteration operators for one corpus and mode:
///
///   author_update     x = W y        (W' in weighted modes)
///   reputation_boost  x = (I + R^T) x
///   paper_update      y = M^T x      (N^T in weighted modes)
///   citation_boost    y = (I + C^T) y
///
/// P = (I + R^T) W (I + C^T) M^T and Q = (I + C^T) M^T (I + R^T) W are only
/// ever applied factor by factor. All methods are const and safe to call
/// concurrently.
class ScoreOperators {
 public:
  /// Throws citex::Error(ZeroColumnSum) in weighted modes when a paper's
  /// authorship weights sum to 0.
  ScoreOperators(const Corpus& corpus, Mode mode);

  std::size_t num_authors() const noexcept { return authorship_.rows(); }
  std::size_t num_papers() const noexcept { return authorship_.cols(); }
  Mode mode() const noexcept { return mode_; }

  std::vector<double> author_update(std::span<const double> paper_scores) const;
  std::vector<double> paper_update(std::span<const double> author_scores) const;
  std::vector<double> citation_boost(std::span<const double> paper_scores) const;
  /// Identity when the mode has no reputation term.
  std::vector<double> reputation_boost(std::span<const double> author_scores) const;

  /// P x, unnormalized.
  std::vector<double> apply_author_operator(std::span<const double> author_scores) const;
  /// Q y, unnormalized.
  std::vector<double> apply_paper_operator(std::span<const double> paper_scores) const;

  const SparseMatrix& authorship() const noexcept { return authorship_; }
  const SparseMatrix& weights() const noexcept { return weights_; }
  const SparseMatrix& citations() const noexcept { return citations_; }
  const std::optional<SparseMatrix>& reputation() const noexcept { return reputation_; }

 private:
  Mode mode_;
  SparseMatrix authorship_;  // M or N
  SparseMatrix weights_;     // W or W'
  SparseMatrix citations_;   // C
  std::optional<SparseMatrix> reputation_;
};

/// ybar_j = y_j / |AUTHORS(p_j)|, the per-author share of each paper's score.
std::vector<double> adjusted_paper_scores(std::span<const double> paper_scores, const Corpus& corpus);

/// Runs the coupled iteration from the all-ones start.
RunResult run(const Corpus& corpus, const IterationConfig& config = {});

/// Runs from explicit non-negative, non-zero start vectors. Only the paper
/// start enters the iteration (the first step is x = W y); the author start
/// is the reference point for the first author delta.
RunResult run(const Corpus& corpus, const IterationConfig& config,
              std::span<const double> initial_authors, std::span<const double> initial_papers);

/// Same as run() but with operators built once by the caller.
RunResult run(const ScoreOperators& ops, const IterationConfig& config,
              std::span<const double> initial_authors, std::span<const double> initial_papers);

double l1_distance(std::span<const double> a, std::span<const double> b);

}  // namespace citex
