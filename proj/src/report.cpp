#include "citex/report.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace citex {

namespace {

using nlohmann::ordered_json;

std::string fixed6(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << v;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Left-aligned text table with two-space column gaps.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c]);
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void emit(std::ostream& out, OutputFormat format, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows) {
  if (format == OutputFormat::csv) {
    write_csv(out, header, rows);
  } else {
    write_table(out, header, rows);
  }
}

ordered_json venue_json(const VenueScore& v) {
  ordered_json j;
  j["id"] = v.venue;
  j["papers"] = v.paper_count;
  j["authors"] = v.author_count;
  j["mean_paper_score"] = v.mean_paper_score ? ordered_json(*v.mean_paper_score) : ordered_json(nullptr);
  j["mean_author_score"] = v.mean_author_score ? ordered_json(*v.mean_author_score) : ordered_json(nullptr);
  return j;
}

std::vector<std::vector<std::string>> venue_rows(const std::vector<VenueScore>& venues) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : venues) {
    rows.push_back({v.venue, std::to_string(v.paper_count), std::to_string(v.author_count),
                    v.mean_paper_score ? fixed6(*v.mean_paper_score) : "n/a",
                    v.mean_author_score ? fixed6(*v.mean_author_score) : "n/a"});
  }
  return rows;
}

const std::vector<std::string> venue_header{"venue", "papers", "authors", "mean_paper_score",
                                            "mean_author_score"};

}  // namespace

std::vector<std::size_t> rank_order(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

ResultFile make_result(const Corpus& corpus, const RunResult& run, const IterationConfig& config,
                       const MetricsOptions& metrics) {
  ResultFile result;
  result.config = config;
  result.convergence = run.report;

  const auto records = author_metrics(corpus, metrics);
  const auto author_order = rank_order(run.authors.values());
  for (std::size_t r = 0; r < author_order.size(); ++r) {
    const auto a = author_order[r];
    result.authors.push_back({r + 1, a, corpus.author_ids()[a], run.authors[a], records[a]});
  }

  const auto counts = citation_counts(corpus, metrics.exclude_self_citations);
  const auto paper_order = rank_order(run.papers.values());
  for (std::size_t r = 0; r < paper_order.size(); ++r) {
    const auto p = paper_order[r];
    result.papers.push_back({r + 1, p, corpus.paper_ids()[p], run.papers[p], counts[p]});
  }

  if (!corpus.venue_ids().empty()) {
    result.venues = venue_scores(run.authors, run.papers, corpus, VenueAssignment::from_corpus(corpus));
  }
  return result;
}

void write_result(std::ostream& out, const ResultFile& result, OutputFormat format) {
  const auto& report = result.convergence;
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema_version"] = result_schema_version;
    doc["mode"] = std::string(to_string(result.config.mode));
    doc["config"] = {{"max_iterations", result.config.max_iterations},
                     {"tolerance", result.config.tolerance}};
    doc["convergence"] = {{"termination", std::string(to_string(report.termination))},
                          {"iterations", report.iterations},
                          {"author_deltas", report.author_deltas},
                          {"paper_deltas", report.paper_deltas},
                          {"author_residual", report.author_residual},
                          {"paper_residual", report.paper_residual},
                          {"eigenvalue_estimate", report.eigenvalue_estimate}};
    doc["authors"] = ordered_json::array();
    for (const auto& a : result.authors) {
      doc["authors"].push_back({{"rank", a.rank},
                                {"id", a.id},
                                {"score", a.score},
                                {"num_papers", a.metrics.num_papers},
                                {"num_citations", a.metrics.num_citations},
                                {"h_index", a.metrics.h_index},
                                {"g_index", a.metrics.g_index},
                                {"e_index", a.metrics.e_index}});
    }
    doc["papers"] = ordered_json::array();
    for (const auto& p : result.papers) {
      doc["papers"].push_back({{"rank", p.rank}, {"id", p.id}, {"score", p.score}, {"citations", p.citations}});
    }
    doc["venues"] = ordered_json::array();
    for (const auto& v : result.venues) doc["venues"].push_back(venue_json(v));
    out << doc.dump(2) << '\n';
    return;
  }

  std::vector<std::vector<std::string>> author_rows;
  for (const auto& a : result.authors) {
    author_rows.push_back({std::to_string(a.rank), a.id, fixed6(a.score), std::to_string(a.metrics.num_papers),
                           std::to_string(a.metrics.num_citations), std::to_string(a.metrics.h_index),
                           std::to_string(a.metrics.g_index), fixed6(a.metrics.e_index)});
  }
  std::vector<std::vector<std::string>> paper_rows;
  for (const auto& p : result.papers) {
    paper_rows.push_back({std::to_string(p.rank), p.id, fixed6(p.score), std::to_string(p.citations)});
  }
  const std::vector<std::string> author_header{"rank", "author", "score", "papers", "citations",
                                               "h_index", "g_index", "e_index"};
  const std::vector<std::string> paper_header{"rank", "paper", "score", "citations"};

  if (format == OutputFormat::csv) {
    out << "# authors\n";
    write_csv(out, author_header, author_rows);
    out << "\n# papers\n";
    write_csv(out, paper_header, paper_rows);
    if (!result.venues.empty()) {
      out << "\n# venues\n";
      write_csv(out, venue_header, venue_rows(result.venues));
    }
    return;
  }

  out << "mode: " << to_string(result.config.mode) << ", " << to_string(report.termination) << " after "
      << report.iterations << " iteration" << (report.iterations == 1 ? "" : "s")
      << ", eigenvalue estimate " << fixed6(report.eigenvalue_estimate) << '\n';
  if (report.termination == Termination::max_iterations) {
    out << "WARNING: max_iterations reached before the scores converged\n";
  }
  out << "\nAuthors\n";
  write_table(out, author_header, author_rows);
  out << "\nPapers\n";
  write_table(out, paper_header, paper_rows);
  if (!result.venues.empty()) {
    out << "\nVenues\n";
    write_table(out, venue_header, venue_rows(result.venues));
  }
}

void write_metrics(std::ostream& out, const std::vector<MetricsRecord>& records,
                   const MetricsOptions& options, OutputFormat format) {
  const std::string significant = "significant_gt_" + std::to_string(options.significance_threshold);
  const std::string top_k = "top_" + std::to_string(options.top_k) + "_citations";
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema_version"] = result_schema_version;
    doc["significance_threshold"] = options.significance_threshold;
    doc["top_k"] = options.top_k;
    doc["exclude_self_citations"] = options.exclude_self_citations;
    doc["authors"] = ordered_json::array();
    for (const auto& r : records) {
      doc["authors"].push_back({{"id", r.author},
                                {"num_papers", r.num_papers},
                                {"num_citations", r.num_citations},
                                {"has_papers", r.has_papers},
                                {"citations_per_paper", r.citations_per_paper},
                                {"citations_per_author", r.citations_per_author},
                                {"papers_per_author", r.papers_per_author},
                                {"h_index", r.h_index},
                                {"g_index", r.g_index},
                                {"e_index", r.e_index},
                                {"significant_papers", r.significant_papers},
                                {"top_k_citations", r.top_k_citations}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records) {
    rows.push_back({r.author, std::to_string(r.num_papers), std::to_string(r.num_citations),
                    r.has_papers ? fixed6(r.citations_per_paper) : "n/a", fixed6(r.citations_per_author),
                    fixed6(r.papers_per_author), std::to_string(r.h_index), std::to_string(r.g_index),
                    fixed6(r.e_index), std::to_string(r.significant_papers), std::to_string(r.top_k_citations)});
  }
  emit(out, format,
       {"author", "papers", "citations", "citations_per_paper", "citations_per_author", "papers_per_author",
        "h_index", "g_index", "e_index", significant, top_k},
       rows);
}

void write_venues(std::ostream& out, const std::vector<VenueScore>& venues, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema_version"] = result_schema_version;
    doc["venues"] = ordered_json::array();
    for (const auto& v : venues) doc["venues"].push_back(venue_json(v));
    out << doc.dump(2) << '\n';
    return;
  }
  emit(out, format, venue_header, venue_rows(venues));
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

}  // namespace citex
