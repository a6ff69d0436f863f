#include "citex/errors.hpp"

#include <utility>

namespace citex {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::duplicate_id: return "DuplicateId";
    case ErrorKind::unknown_reference: return "UnknownReference";
    case ErrorKind::orphan_paper: return "OrphanPaper";
    case ErrorKind::citation_cycle: return "CitationCycle";
    case ErrorKind::self_citation_edge: return "SelfCitationEdge";
    case ErrorKind::self_rating: return "SelfRating";
    case ErrorKind::negative_weight: return "NegativeWeight";
    case ErrorKind::empty_dataset: return "DatasetError";
    case ErrorKind::zero_column_sum: return "ZeroColumnSum";
    case ErrorKind::zero_vector: return "ZeroVector";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::unknown_paper_id: return "UnknownPaperId";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_config: return "InvalidConfig";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

CitationCycleError::CitationCycleError(std::vector<std::size_t> cycle, const std::string& message)
    : Error(ErrorKind::citation_cycle, message), cycle_(std::move(cycle)) {}

namespace {

std::string format_position(const std::string& source, std::size_t line, const std::string& field,
                            const std::string& detail) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  if (!field.empty()) out += (out.empty() ? "" : ": ") + field;
  if (!out.empty()) out += ": ";
  return out + detail;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::string field,
                       const std::string& detail)
    : Error(ErrorKind::parse_error, format_position(source, line, field, detail)),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

}  // namespace citex
