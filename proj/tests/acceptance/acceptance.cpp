// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citex/corpus.hpp"
#include "citex/engine.hpp"
#include "citex/errors.hpp"
#include "citex/matrices.hpp"
#include "citex/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace citex;
using namespace citex::testing;

namespace {

constexpr double published_tolerance = 1e-3;
constexpr double max_runtime_seconds = 1.0;
constexpr int max_example_iterations = 50;
constexpr double invariance_tolerance = 1e-6;
constexpr double operator_tolerance = 1e-10;
constexpr double e_index_tolerance = 1e-9;
constexpr double reduction_tolerance = 1e-12;
constexpr double normalization_tolerance = 1e-9;

/// Collects every score vector produced by the other criteria.
struct NormalizationLog {
  std::size_t vectors = 0;
  double worst_sum_error = 0.0;
  double most_negative = 0.0;

  void record(const ScoreVector& v) {
    ++vectors;
    double sum = 0.0;
    for (const double x : v) {
      sum += x;
      most_negative = std::min(most_negative, x);
    }
    worst_sum_error = std::max(worst_sum_error, std::abs(sum - 1.0));
  }
  void record(const RunResult& r) {
    record(r.authors);
    record(r.papers);
  }
};

NormalizationLog normalization;

struct Outcome {
  bool pass;
  std::string detail;
};

double max_abs_diff(std::span<const double> a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::string fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

Outcome reproduce(const Corpus& corpus, const std::vector<double>& authors, const std::vector<double>& papers,
                  bool check_iterations) {
  const auto start = std::chrono::steady_clock::now();
  const auto result = run(corpus);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  normalization.record(result);

  const double dx = max_abs_diff(result.authors.values(), authors);
  const double dy = max_abs_diff(result.papers.values(), papers);
  const bool converged = result.report.termination == Termination::converged;
  bool pass = converged && dx <= published_tolerance && dy <= published_tolerance && seconds < max_runtime_seconds;
  if (check_iterations) pass = pass && result.report.iterations <= max_example_iterations;
  return {pass, fmt("%s in %d iterations, max |dx|=%.2e, max |dy|=%.2e, %.4fs",
                    converged ? "converged" : "NOT converged", result.report.iterations, dx, dy, seconds)};
}

std::size_t argmax(const ScoreVector& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) if (v[i] > v[best]) best = i;
  return best;
}

std::size_t argmin(const ScoreVector& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) if (v[i] < v[best]) best = i;
  return best;
}

Outcome ranking_sanity() {
  const auto r1 = run(example1());
  const auto r2 = run(example2());
  normalization.record(r1);
  normalization.record(r2);
  const bool ex1 = argmax(r1.authors) == 3 && argmax(r1.papers) == 4 && argmin(r1.authors) == 1 &&
                   argmin(r1.papers) == 0;
  const bool ex2 = argmax(r2.authors) == 1 && argmax(r2.papers) == 2 && std::abs(r2.authors[4]) <= 1e-6 &&
                   std::abs(r2.papers[3]) <= 1e-6;
  return {ex1 && ex2, fmt("ex1 argmax a%zu/p%zu argmin a%zu/p%zu; ex2 argmax a%zu/p%zu, x(a5)=%.1e, y(p4)=%.1e",
                          argmax(r1.authors) + 1, argmax(r1.papers) + 1, argmin(r1.authors) + 1,
                          argmin(r1.papers) + 1, argmax(r2.authors) + 1, argmax(r2.papers) + 1, r2.authors[4],
                          r2.papers[3])};
}

Outcome start_vector_invariance() {
  std::mt19937_64 rng(20240501);
  double worst = 0.0;
  int runs = 0;
  for (const Corpus& corpus : {example1(), example2()}) {
    const auto reference = run(corpus);
    const std::vector<double> ref_x(reference.authors.begin(), reference.authors.end());
    const std::vector<double> ref_y(reference.papers.begin(), reference.papers.end());
    for (int trial = 0; trial < 20; ++trial) {
      const auto r = run(corpus, {}, random_positive(rng, corpus.num_authors()),
                         random_positive(rng, corpus.num_papers()));
      normalization.record(r);
      worst = std::max({worst, max_abs_diff(r.authors.values(), ref_x), max_abs_diff(r.papers.values(), ref_y)});
      ++runs;
    }
  }
  return {worst <= invariance_tolerance, fmt("%d random starts, worst entry-wise deviation %.2e", runs, worst)};
}

/// For k = 1..5 the engine's iterate k must equal one dense application of
/// Q (papers) or P (authors) to iterate k-1, after normalization.
Outcome operator_equivalence() {
  std::mt19937_64 rng(515);
  const Mode modes[] = {Mode::base, Mode::weighted, Mode::reputation, Mode::weighted_reputation};
  double worst = 0.0;
  int corpora = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Corpus corpus = build_corpus(random_raw_corpus(rng, {.weights = true, .reputation = true}));
    ++corpora;
    const Mode mode = modes[trial % 4];
    const auto dense = dense_operators(corpus, mode);
    const auto x0 = random_positive(rng, corpus.num_authors());
    const auto y0 = random_positive(rng, corpus.num_papers());

    std::vector<RunResult> iterates;
    for (int k = 1; k <= 5; ++k) {
      iterates.push_back(run(corpus, {.max_iterations = k, .tolerance = 1e-300, .mode = mode}, x0, y0));
      normalization.record(iterates.back());
    }
    std::vector<double> prev_y = normalized(y0);
    for (std::size_t k = 0; k < iterates.size(); ++k) {
      const auto expected_y = normalized(multiply(dense.Q, prev_y));
      worst = std::max(worst, l1(expected_y, iterates[k].papers.values()));
      prev_y.assign(iterates[k].papers.begin(), iterates[k].papers.end());
      if (k > 0) {
        const std::vector<double> prev_x(iterates[k - 1].authors.begin(), iterates[k - 1].authors.end());
        const auto expected_x = normalized(multiply(dense.P, prev_x));
        worst = std::max(worst, l1(expected_x, iterates[k].authors.values()));
      }
    }
  }
  return {worst <= operator_tolerance, fmt("%d corpora x 5 iterations, worst L1 gap %.2e", corpora, worst)};
}

Outcome metric_oracles() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> length(0, 50);
  std::uniform_int_distribution<std::size_t> value(0, 100);
  int h_mismatch = 0;
  int g_mismatch = 0;
  double worst_e = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<CitationCount> counts(length(rng));
    for (auto& c : counts) c = value(rng);
    h_mismatch += h_index(counts) != brute_h_index(counts);
    g_mismatch += g_index(counts) != brute_g_index(counts);
    worst_e = std::max(worst_e, std::abs(e_index(counts) - brute_e_index(counts)));
  }
  return {h_mismatch == 0 && g_mismatch == 0 && worst_e <= e_index_tolerance,
          fmt("1000 profiles: h mismatches %d, g mismatches %d, worst e gap %.2e", h_mismatch, g_mismatch, worst_e)};
}

Outcome extension_reductions() {
  double worst = 0.0;
  for (const auto& [pub, cite] : {std::pair{example1_publication, example1_citation},
                                  std::pair{example2_publication, example2_citation}}) {
    auto raw = raw_from_matrices(pub, cite);
    const auto base = run(build_corpus(raw));
    const auto rep = run(build_corpus(raw), {.mode = Mode::reputation});
    for (auto& e : raw.authorship) e.weight = 2.5;
    const auto weighted = run(build_corpus(raw), {.mode = Mode::weighted});
    for (const auto* r : {&base, &rep, &weighted}) normalization.record(*r);

    const std::vector<double> bx(base.authors.begin(), base.authors.end());
    const std::vector<double> by(base.papers.begin(), base.papers.end());
    worst = std::max({worst, max_abs_diff(rep.authors.values(), bx), max_abs_diff(rep.papers.values(), by),
                      max_abs_diff(weighted.authors.values(), bx), max_abs_diff(weighted.papers.values(), by)});
  }
  return {worst <= reduction_tolerance, fmt("empty R and uniform weights, worst deviation from base %.2e", worst)};
}

Outcome validation() {
  RawDataset raw;
  raw.authors = {{"a1", {}}};
  raw.papers = {{"p1", std::nullopt, {}}, {"p2", std::nullopt, {}}};
  raw.authorship = {{"a1", "p1", std::nullopt, {}}, {"a1", "p2", std::nullopt, {}}};
  raw.citations = {{"p1", "p2", {}}, {"p2", "p1", {}}};
  bool cycle_rejected = false;
  std::string message;
  try {
    build_corpus(raw);
  } catch (const CitationCycleError& e) {
    message = e.what();
    cycle_rejected = e.cycle().size() == 2 && message.find("p1 -> p2 -> p1") != std::string::npos;
  }

  std::mt19937_64 rng(100);
  int triangular = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Corpus corpus = build_corpus(random_raw_corpus(rng, {.max_papers = 12, .citation_density = 0.5}));
    const auto order = validate_dag(corpus.num_papers(), corpus.citations());
    const auto c = citation_matrix(corpus);
    bool ok = true;
    for (std::size_t row = 0; row < order.size(); ++row) {
      for (std::size_t col = 0; col <= row; ++col) ok = ok && c.at(order[row], order[col]) == 0.0;
    }
    triangular += ok;
  }
  return {cycle_rejected && triangular == 100,
          fmt("2-cycle %s (\"%s\"); %d/100 random DAGs strictly upper-triangular after reordering",
              cycle_rejected ? "rejected" : "NOT rejected", message.c_str(), triangular)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"1 example 1 reproduction", [] { return reproduce(example1(), example1_authors, example1_papers, true); }},
      {"2 example 2 reproduction", [] { return reproduce(example2(), example2_authors, example2_papers, false); }},
      {"3 ranking sanity", ranking_sanity},
      {"4 start-vector invariance", start_vector_invariance},
      {"5 operator equivalence oracle", operator_equivalence},
      {"6 classic-metric oracles", metric_oracles},
      {"7 extension reductions", extension_reductions},
      {"8 validation", validation},
      {"9 normalization invariant",
       [] {
         return Outcome{normalization.worst_sum_error <= normalization_tolerance && normalization.most_negative >= 0.0,
                        fmt("%zu vectors, worst |sum-1| %.2e, min entry %.2e", normalization.vectors,
                            normalization.worst_sum_error, normalization.most_negative)};
       }},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = criterion.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", criterion.name, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
