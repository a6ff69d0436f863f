#include "citex/cli.hpp"

#include <algorithm>
#include <exception>
#include <ostream>

#include "CLI11.hpp"
#include "citex/dataset.hpp"
#include "citex/engine.hpp"
#include "citex/errors.hpp"
#include "citex/metrics.hpp"
#include "citex/report.hpp"
#include "citex/venues.hpp"

namespace citex {

namespace {

struct Options {
  std::string dataset;
  int max_iterations = IterationConfig{}.max_iterations;
  double tolerance = IterationConfig{}.tolerance;
  bool weighted = false;
  bool reputation = false;
  bool exclude_self_citations = false;
  std::string format = "table";
  CitationCount significance_threshold = 0;
  std::size_t top_k = 0;
};

void add_dataset(CLI::App& cmd, Options& o) {
  cmd.add_option("dataset", o.dataset, "JSON dataset file or directory of CSV files")->required();
}

void add_engine_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--max-iters", o.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
  cmd.add_option("--tol", o.tolerance, "L1 convergence tolerance")->check(CLI::PositiveNumber);
  cmd.add_flag("--weighted", o.weighted, "Use authorship weights");
  cmd.add_flag("--reputation", o.reputation, "Add the author reputation term");
}

void add_format(CLI::App& cmd, Options& o) {
  cmd.add_option("--output-format", o.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

IterationConfig config_from(const Options& o) {
  IterationConfig config;
  config.max_iterations = o.max_iterations;
  config.tolerance = o.tolerance;
  if (o.weighted && o.reputation) {
    config.mode = Mode::weighted_reputation;
  } else if (o.weighted) {
    config.mode = Mode::weighted;
  } else if (o.reputation) {
    config.mode = Mode::reputation;
  }
  return config;
}

Corpus load(const Options& o, std::ostream& err) {
  std::vector<std::string> warnings;
  Corpus corpus = parse_dataset(o.dataset, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return corpus;
}

RunResult run_engine(const Corpus& corpus, const IterationConfig& config, std::ostream& err) {
  RunResult result = run(corpus, config);
  if (result.report.termination == Termination::max_iterations) {
    err << "WARNING: max_iterations (" << config.max_iterations
        << ") reached before convergence; last deltas x=" << result.report.author_deltas.back()
        << " y=" << result.report.paper_deltas.back() << '\n';
  }
  return result;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Citex author/paper scoring and classic citation metrics", "citex"};
  app.require_subcommand(1);
  Options o;

  auto* rank = app.add_subcommand("rank", "Score and rank authors and papers");
  add_dataset(*rank, o);
  add_engine_flags(*rank, o);
  add_format(*rank, o);
  rank->add_flag("--exclude-self-citations", o.exclude_self_citations,
                 "Ignore citations between papers sharing an author in the metric columns");

  auto* metrics = app.add_subcommand("metrics", "Classic per-author citation metrics");
  add_dataset(*metrics, o);
  metrics->add_option("--c", o.significance_threshold, "Significant-paper threshold (> c citations)")
      ->required();
  metrics->add_option("--k", o.top_k, "Number of most-cited papers to total")->required();
  add_format(*metrics, o);
  metrics->add_flag("--exclude-self-citations", o.exclude_self_citations,
                    "Ignore citations between papers sharing an author");

  auto* venues = app.add_subcommand("venues", "Average scores per journal/conference");
  add_dataset(*venues, o);
  add_engine_flags(*venues, o);
  add_format(*venues, o);

  auto* validate = app.add_subcommand("validate", "Check the dataset and its citation DAG");
  add_dataset(*validate, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run 'citex --help' for usage\n";
    return exit_usage_error;
  }

  try {
    const auto format = parse_output_format(o.format);
    const Corpus corpus = load(o, err);

    if (*validate) {
      const auto order = validate_dag(corpus.num_papers(), corpus.citations(), corpus.paper_ids());
      out << "ok: " << corpus.num_authors() << " authors, " << corpus.num_papers() << " papers, "
          << corpus.authorship().size() << " authorship edges, " << corpus.citations().size()
          << " citations, " << corpus.reputation().size() << " ratings\n";
      out << "topological order (newest first):";
      for (const auto p : order) out << ' ' << corpus.paper_ids()[p];
      out << '\n';
      return exit_ok;
    }

    if (*metrics) {
      const MetricsOptions options{o.significance_threshold, o.top_k, o.exclude_self_citations};
      write_metrics(out, author_metrics(corpus, options), options, format);
      return exit_ok;
    }

    const auto config = config_from(o);
    if (*venues) {
      if (corpus.venue_ids().empty()) {
        err << "error: dataset has no venue assignments\n";
        return exit_validation_error;
      }
      const auto result = run_engine(corpus, config, err);
      write_venues(out, venue_scores(result.authors, result.papers, corpus, VenueAssignment::from_corpus(corpus)),
                   format);
      return exit_ok;
    }

    const auto result = run_engine(corpus, config, err);
    MetricsOptions options;
    options.exclude_self_citations = o.exclude_self_citations;
    write_result(out, make_result(corpus, result, config, options), format);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation_error;
  }
}

}  // namespace citex
