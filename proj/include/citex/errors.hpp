#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace citex {

enum class ErrorKind {
  duplicate_id,
  unknown_reference,
  orphan_paper,
  citation_cycle,
  self_citation_edge,
  self_rating,
  negative_weight,
  empty_dataset,
  zero_column_sum,
  zero_vector,
  dimension_mismatch,
  unknown_paper_id,
  parse_error,
  invalid_config,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error the library throws. `kind()` identifies the failure
/// class; `what()` carries a human-readable message naming the offending
/// ids or positions.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when the citation relation is not acyclic. `cycle()` lists paper
/// indices along one directed cycle in citing order; the first paper cites
/// the second, and so on, and the last cites the first.
class CitationCycleError : public Error {
 public:
  CitationCycleError(std::vector<std::size_t> cycle, const std::string& message);
  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

/// Malformed input. `line` is 1-based (0 when the format has no lines, e.g.
/// a JSON structure error), `field` names the offending record/field.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string field, const std::string& detail);
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string field_;
};

}  // namespace citex
