#pragma once

#include "citex/corpus.hpp"
#include "citex/sparse_matrix.hpp"

namespace citex {

// Operators over a Corpus. Authors index rows, papers index columns.

/// m x n 0-1 matrix M; entry (i, j) is 1 iff author i wrote paper j.
/// Authorship weights are ignored.
SparseMatrix publication_matrix(const Corpus& corpus);

/// m x n matrix N holding the authorship weights (same pattern as M).
SparseMatrix weighted_publication_matrix(const Corpus& corpus);

/// n x n 0-1 matrix C; entry (j, k) is 1 iff paper j cites paper k.
SparseMatrix citation_matrix(const Corpus& corpus);

/// Column-normalizes M (giving W) or N (giving W'): each stored entry is
/// divided by its column sum, so every column sums to 1 and the pattern is
/// unchanged. Throws citex::Error(ZeroColumnSum) naming the first column whose
/// sum is not positive.
SparseMatrix weight_matrix(const SparseMatrix& publication);

/// m x m matrix R; entry (i, j) is the rating author i gave author j.
SparseMatrix reputation_matrix(const Corpus& corpus);

}  // namespace citex
