#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "citex/corpus.hpp"

namespace citex {

inline constexpr int dataset_schema_version = 1;

// Two input forms are accepted.
//
// JSON document:
//   {
//     "schema_version": 1,
//     "authors":    [ {"id": "a1"}, ... ],
//     "papers":     [ {"id": "p1", "venue": "V1"}, ... ],       venue optional
//     "venues":     [ {"id": "V1"}, ... ],                      optional
//     "authorship": [ {"author": "a1", "paper": "p1", "weight": 2.0}, ... ],
//     "citations":  [ {"from": "p1", "to": "p2"}, ... ],        from cites to
//     "reputation": [ {"from": "a1", "to": "a2", "rating": 1.0}, ... ]  optional
//   }
//
// CSV directory, each file with a header row:
//   authorship.csv   author,paper[,weight]      required
//   citations.csv    from,to                    optional
//   reputation.csv   from,to,rating             optional
//   authors.csv      id                         optional
//   papers.csv       id[,venue]                 optional
// Without authors.csv / papers.csv, ids are taken from authorship.csv in
// order of first appearance.

/// Throws ParseError with the line (JSON syntax, CSV) or record path
/// ("citations[3].to") of the problem.
RawDataset read_dataset_json(std::istream& in, const std::string& source = "<stream>");
RawDataset read_dataset_csv(const std::filesystem::path& directory);

/// Reads a JSON file or a CSV directory and validates it. Warnings about
/// collapsed duplicate rows are appended to `warnings` when given.
Corpus parse_dataset(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
Corpus parse_dataset(std::istream& in, const std::string& source = "<stream>",
                     std::vector<std::string>* warnings = nullptr);

/// JSON document that parse_dataset reads back into an identical Corpus.
std::string write_dataset_json(const Corpus& corpus);

}  // namespace citex
