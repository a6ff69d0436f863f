#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citex {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation_error = 1;
inline constexpr int exit_usage_error = 2;

/// Entry point of the `citex` tool. `args` excludes the program name.
///
///   citex rank     DATASET [--max-iters N] [--tol T] [--weighted] [--reputation]
///                          [--output-format table|json|csv] [--exclude-self-citations]
///   citex metrics  DATASET --c C --k K [--output-format ...] [--exclude-self-citations]
///   citex venues   DATASET [--max-iters N] [--tol T] [--weighted] [--reputation]
///                          [--output-format ...]
///   citex validate DATASET
///
/// DATASET is a JSON file or a directory of CSV files. Returns 0 on success
/// (including a run that stops at max_iterations, which prints a warning), 1
/// when the dataset is rejected, 2 on a usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace citex
