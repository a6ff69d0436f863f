#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citex/corpus.hpp"
#include "citex/engine.hpp"
#include "citex/metrics.hpp"
#include "citex/venues.hpp"

namespace citex {

inline constexpr int result_schema_version = 1;

enum class OutputFormat { table, json, csv };

struct RankedAuthor {
  std::size_t rank = 0;  // 1-based
  std::size_t index = 0;
  std::string id;
  double score = 0.0;
  MetricsRecord metrics;
};

struct RankedPaper {
  std::size_t rank = 0;
  std::size_t index = 0;
  std::string id;
  double score = 0.0;
  CitationCount citations = 0;
};

struct ResultFile {
  IterationConfig config;
  ConvergenceReport convergence;
  std::vector<RankedAuthor> authors;
  std::vector<RankedPaper> papers;
  std::vector<VenueScore> venues;  // empty when the corpus has no venues
};

/// Indices sorted by descending score; equal scores keep input order.
std::vector<std::size_t> rank_order(std::span<const double> scores);

ResultFile make_result(const Corpus& corpus, const RunResult& run, const IterationConfig& config,
                       const MetricsOptions& metrics = {});

// Table and CSV print scores with 6 decimals; JSON keeps full double
// precision so the score columns still sum to 1.
void write_result(std::ostream& out, const ResultFile& result, OutputFormat format);
void write_metrics(std::ostream& out, const std::vector<MetricsRecord>& records,
                   const MetricsOptions& options, OutputFormat format);
void write_venues(std::ostream& out, const std::vector<VenueScore>& venues, OutputFormat format);

/// Accepts "table", "json", "csv".
OutputFormat parse_output_format(std::string_view name);

}  // namespace citex
